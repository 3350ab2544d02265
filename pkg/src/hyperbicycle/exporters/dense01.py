from __future__ import annotations

from pathlib import Path

from typing_extensions import override

from ..gf2 import BinMat, BinVec
from .base import CodeExporter


def dense01_text(m: BinMat, comments: list[str] | None = None) -> str:
    """`m` as dense01 text, optionally preceded by ``#`` comment lines."""
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"{m.rows} {m.cols}")
    if m.rows:
        lines.append(str(m))
    return "\n".join(lines) + "\n"


def write_witness(vector: BinVec, output_path: Path, split: tuple[int, int] | None = None) -> None:
    """A logical operator as a 1 x N dense01 matrix whose header names the sublattice split."""
    comments = [f"sublattices: {split[0]} {split[1]}"] if split else []
    output_path.parent.mkdir(parents=True, exist_ok=True)
    m = BinMat.from_vectors([vector], vector.len)
    output_path.write_text(dense01_text(m, comments), encoding="utf-8")


class Dense01Exporter(CodeExporter):
    """Plain-text 0/1 rows with a 'rows cols' header."""

    @override
    def get_file_extension(self) -> str:
        return ".txt"

    @override
    def get_format_name(self) -> str:
        return "dense01"

    @override
    def export_matrix(self, name: str, output_path: Path) -> None:
        """Export one check matrix as dense01.

        Args:
            name: Matrix name as reported by the provider
            output_path: Path where the file should be written

        Raises:
            ValueError: If the provider has no matrix of that name
        """
        self.validate_matrices([name])
        self.ensure_output_directory(output_path)
        family = self.provider.get_metadata().get("provenance", {}).get("family", "custom")
        text = dense01_text(self.get_matrix(name), [f"{name} of a {family} code"])
        output_path.write_text(text, encoding="utf-8")
