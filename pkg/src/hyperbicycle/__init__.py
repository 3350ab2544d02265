"""hyperbicycle - Construct and analyze hyperbicycle quantum LDPC codes."""

from .api import (
    QuantumCode,
    analyze_spec,
    code_parameters,
    load_code,
)
from .hyperbicycle import *  # noqa: F403

__all__ = [
    "QuantumCode",
    "load_code",
    "analyze_spec",
    "code_parameters",
]
