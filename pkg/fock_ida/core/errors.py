"""Exception hierarchy.

Divergent norms are not errors: they come back as ``NormEstimate`` records
with ``divergent=True``. Everything raised from the numerical layers derives
from ``FockIdaError``; input-validation failures also derive from ``ValueError``.
"""


class FockIdaError(Exception):
    """Base class for all fock-ida errors."""


class UnsupportedWeightError(FockIdaError, ValueError):
    """The weight is not radial, so monomials are not orthogonal."""


class QuadratureError(FockIdaError):
    """A quadrature rule failed to converge."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class InsufficientGridError(QuadratureError):
    """The integration grid does not cover the effective support."""

    def __init__(self, message: str, tail: float):
        super().__init__(message, residual=tail)
        self.tail = tail


class TruncationError(FockIdaError):
    """The finite section is too small for the requested quantity."""

    def __init__(self, message: str, magnitude: float | None = None):
        super().__init__(message)
        self.magnitude = magnitude


class SymbolClassError(FockIdaError, ValueError):
    """A symbol does not match its declared growth class."""


class PeriodizationError(FockIdaError):
    """A field is not negligible at the boundary of a periodic grid."""

    def __init__(self, message: str, boundary: float):
        super().__init__(message)
        self.boundary = boundary


class UndefinedInputError(FockIdaError, ValueError):
    """The input does not define the requested quantity."""


class ConfigError(FockIdaError, ValueError):
    """Invalid experiment configuration."""
