from __future__ import annotations

from pathlib import Path

import numpy as np
from typing_extensions import override

from ..gf2 import BinMat
from .base import CodeExporter


def alist_text(m: BinMat) -> str:
    """MacKay alist text for `m`, without zero padding."""
    dense = m.to_dense()
    col_weights = dense.sum(axis=0, dtype=np.int64)
    row_weights = dense.sum(axis=1, dtype=np.int64)
    lines = [
        f"{m.cols} {m.rows}",
        f"{int(col_weights.max(initial=0))} {int(row_weights.max(initial=0))}",
        " ".join(str(int(w)) for w in col_weights),
        " ".join(str(int(w)) for w in row_weights),
    ]
    lines += [" ".join(str(i + 1) for i in np.flatnonzero(dense[:, j])) for j in range(m.cols)]
    lines += [" ".join(str(j + 1) for j in np.flatnonzero(dense[i])) for i in range(m.rows)]
    return "\n".join(lines) + "\n"


class AlistExporter(CodeExporter):
    """Sparse alist format for classical LDPC tooling."""

    @override
    def get_file_extension(self) -> str:
        return ".alist"

    @override
    def get_format_name(self) -> str:
        return "alist"

    @override
    def export_matrix(self, name: str, output_path: Path) -> None:
        self.validate_matrices([name])
        self.ensure_output_directory(output_path)
        output_path.write_text(alist_text(self.get_matrix(name)), encoding="utf-8")
