from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from typing_extensions import override

from ..gf2 import BinMat
from ..models import CodeFile
from .base import CodeExporter


def row_strings(m: BinMat) -> list[str]:
    return str(m).split("\n") if m.rows else []


def code_file(exporter: CodeExporter, names: list[str]) -> CodeFile:
    """The serializable document for the named matrices of the exporter's provider."""
    meta = exporter.provider.get_metadata()
    return CodeFile(
        tool_version=meta["toolVersion"],
        kind=meta["kind"],
        n=meta["n"],
        provenance=meta.get("provenance", {}),
        split=list(meta["split"]) if meta.get("split") else None,
        matrices={name: row_strings(exporter.get_matrix(name)) for name in names},
        spec=meta.get("spec"),
    )


class JSONExporter(CodeExporter):
    """JSON exporter writing the whole code as one document."""

    @override
    def get_file_extension(self) -> str:
        """Get the file extension for JSON format.

        Returns:
            File extension for JSON files
        """
        return ".json"

    @override
    def get_format_name(self) -> str:
        return "JSON"

    @override
    def export_matrix(self, name: str, output_path: Path) -> None:
        """Export a single check matrix in a code document of its own.

        Args:
            name: Matrix name as reported by the provider
            output_path: Path where the JSON file should be written

        Raises:
            ValueError: If the provider has no matrix of that name
        """
        self.validate_matrices([name])
        self._write(code_file(self, [name]).to_dict(), output_path)

    @override
    def export_code(self, output_path: Path) -> list[Path]:
        """Export every check matrix plus metadata to one JSON file.

        Args:
            output_path: Path of the JSON file

        Returns:
            The single file written
        """
        self._write(code_file(self, self.get_matrix_names()).to_dict(), output_path)
        return [output_path]

    def _write(self, data: dict[str, Any], output_path: Path) -> None:
        self.ensure_output_directory(output_path)
        with output_path.open("w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, default=str, ensure_ascii=False)
