from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from typing_extensions import override

from .base import CodeExporter
from .json import code_file


class YAMLExporter(CodeExporter):
    """YAML exporter writing the whole code as one document."""

    @override
    def get_file_extension(self) -> str:
        return ".yaml"

    @override
    def get_format_name(self) -> str:
        return "YAML"

    @override
    def export_matrix(self, name: str, output_path: Path) -> None:
        self.validate_matrices([name])
        self._write(code_file(self, [name]).to_dict(), output_path)

    @override
    def export_code(self, output_path: Path) -> list[Path]:
        self._write(code_file(self, self.get_matrix_names()).to_dict(), output_path)
        return [output_path]

    def _write(self, data: dict[str, Any], output_path: Path) -> None:
        self.ensure_output_directory(output_path)
        with output_path.open("w", encoding="utf-8") as f:
            yaml.dump(data, f, default_flow_style=False, allow_unicode=True, sort_keys=False)
