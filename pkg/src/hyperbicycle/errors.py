"""Exception hierarchy.

Every error raised on purpose by the package is a `HyperbicycleError`, which is a
`ValueError` so callers that only know about bad input can still catch it.
"""


class HyperbicycleError(ValueError):
    """Base class for all domain errors."""


class DimensionError(HyperbicycleError):
    """Matrix or vector shapes do not fit together."""


class CommensurateCaseError(HyperbicycleError):
    """Raised for gcd(c, chi) != 1."""

    def __init__(self, c: int, chi: int):
        super().__init__(f"gcd(c={c}, chi={chi}) != 1: commensurate case unanalyzed")
        self.c = c
        self.chi = chi


class PolynomialError(HyperbicycleError):
    """Polynomial syntax, division by zero or divisibility violations."""


class ConstructionError(HyperbicycleError):
    """A builder produced stabilizers that do not commute, or got malformed inputs."""


class DecompositionError(HyperbicycleError):
    """Symmetry-class bookkeeping is inconsistent."""


class ParseError(HyperbicycleError):
    """Input file or spec could not be parsed."""


class CrossCheckError(HyperbicycleError):
    """Two independent computations of the same quantity disagree."""
