from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Protocol

from ..gf2 import BinMat


class CodeProvider(Protocol):
    """Protocol for anything that exposes a code as named check matrices."""

    def get_matrix_names(self) -> list[str]:
        """Names of the check matrices ("gx", "gz" for CSS codes, "h" otherwise)."""
        ...

    def get_matrix(self, name: str) -> BinMat:
        """The named check matrix."""
        ...

    def get_metadata(self) -> dict[str, Any]:
        """kind, n, provenance, split and toolVersion of the code."""
        ...


class CodeExporter(ABC):
    """Abstract base class for exporters that write check matrices to files."""

    def __init__(self, provider: CodeProvider) -> None:
        """Initialize the exporter with a code provider.

        Args:
            provider: CodeProvider instance to source matrices from
        """
        self.provider = provider

    @abstractmethod
    def get_file_extension(self) -> str:
        """Get the file extension for this export format.

        Returns:
            File extension including the dot (e.g., '.json', '.alist')
        """
        pass

    @abstractmethod
    def get_format_name(self) -> str:
        """Get the human-readable format name."""
        pass

    @abstractmethod
    def export_matrix(self, name: str, output_path: Path) -> None:
        """Export one check matrix to a file.

        Args:
            name: Matrix name as reported by the provider
            output_path: Path where the file should be written

        Raises:
            ValueError: If the provider has no matrix of that name
            IOError: If the file cannot be written
        """
        pass

    def export_code(self, output_path: Path) -> list[Path]:
        """Export the whole code.

        Matrix-per-file formats write ``<stem>_<name><ext>`` next to `output_path`;
        document formats override this and write a single file.

        Args:
            output_path: Base path for the output file(s)

        Returns:
            The files written
        """
        names = self.get_matrix_names()
        self.validate_matrices(names)
        base = output_path.with_suffix("")
        written = []
        for name in names:
            path = base.parent / f"{base.name}_{name}{self.get_file_extension()}"
            self.export_matrix(name, path)
            written.append(path)
        return written

    def get_matrix_names(self) -> list[str]:
        return self.provider.get_matrix_names()

    def validate_matrices(self, names: list[str]) -> None:
        """Validate that all named matrices are available.

        Raises:
            ValueError: If any matrix is not available
        """
        available = set(self.get_matrix_names())
        invalid = [name for name in names if name not in available]
        if invalid:
            raise ValueError(
                f"Invalid matrix names: {', '.join(invalid)}. "
                f"Available matrices: {', '.join(sorted(available))}"
            )

    def get_matrix(self, name: str) -> BinMat:
        return self.provider.get_matrix(name)

    def ensure_output_directory(self, output_path: Path) -> None:
        """Ensure the output directory exists."""
        output_path.parent.mkdir(parents=True, exist_ok=True)
