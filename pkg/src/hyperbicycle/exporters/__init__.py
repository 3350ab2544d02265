"""Export of check matrices and witnesses to dense01, alist, JSON, YAML and CSV."""

from .alist import AlistExporter, alist_text
from .base import CodeExporter, CodeProvider
from .csv import CSVExporter, write_table_csv
from .dense01 import Dense01Exporter, dense01_text, write_witness
from .json import JSONExporter
from .yaml import YAMLExporter

EXPORTERS: dict[str, type[CodeExporter]] = {
    "dense01": Dense01Exporter,
    "alist": AlistExporter,
    "json": JSONExporter,
    "yaml": YAMLExporter,
    "csv": CSVExporter,
}


def get_exporter(provider: CodeProvider, format_name: str) -> CodeExporter:
    """Get an exporter instance for the specified format.

    Args:
        provider: Source of the check matrices
        format_name: One of 'dense01', 'alist', 'json', 'yaml', 'csv'

    Returns:
        CodeExporter instance for the specified format

    Raises:
        ValueError: If format is not supported
    """
    format_lower = format_name.lower()
    if format_lower not in EXPORTERS:
        available = ", ".join(EXPORTERS)
        raise ValueError(f"Unsupported format '{format_name}'. Available formats: {available}")
    return EXPORTERS[format_lower](provider)


__all__ = [
    "EXPORTERS",
    "AlistExporter",
    "CodeExporter",
    "CodeProvider",
    "CSVExporter",
    "Dense01Exporter",
    "JSONExporter",
    "YAMLExporter",
    "alist_text",
    "dense01_text",
    "get_exporter",
    "write_table_csv",
    "write_witness",
]
