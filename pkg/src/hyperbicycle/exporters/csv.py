from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

import pandas as pd
from typing_extensions import override

from .base import CodeExporter


def write_table_csv(records: Sequence[dict[str, Any]], output_path: Path) -> None:
    """Write report rows (e.g. the verify-paper table) as CSV."""
    output_path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(list(records)).to_csv(output_path, index=False, encoding="utf-8")


class CSVExporter(CodeExporter):
    """One 0/1 grid per check matrix, columns labelled by qubit index."""

    @override
    def get_file_extension(self) -> str:
        return ".csv"

    @override
    def get_format_name(self) -> str:
        return "CSV"

    @override
    def export_matrix(self, name: str, output_path: Path) -> None:
        """Export a single check matrix to a CSV file.

        Args:
            name: Matrix name as reported by the provider
            output_path: Path where the CSV file should be written

        Raises:
            ValueError: If the provider has no matrix of that name
        """
        self.validate_matrices([name])
        self.ensure_output_directory(output_path)
        m = self.get_matrix(name)
        df = pd.DataFrame(m.to_dense(), columns=[f"q{j}" for j in range(m.cols)])
        df.to_csv(output_path, index=False, encoding="utf-8")
