from .report import (
    SCHEMA_VERSION,
    AnalysisReport,
    BoundsModel,
    CatalogCheck,
    ClassicalModel,
    CodeFile,
    DistanceModel,
    KReportModel,
)
from .spec import FAMILIES, CirculantBlock, CodeSpecModel, FileBlock

__all__ = [
    "SCHEMA_VERSION",
    "AnalysisReport",
    "BoundsModel",
    "CatalogCheck",
    "ClassicalModel",
    "CodeFile",
    "DistanceModel",
    "KReportModel",
    "FAMILIES",
    "CirculantBlock",
    "CodeSpecModel",
    "FileBlock",
]
