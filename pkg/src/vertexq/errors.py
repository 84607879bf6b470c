"""Shared exception types."""


class VertexqError(Exception):
    """Base class for all package errors."""


class ConfigError(VertexqError):
    """Invalid configuration: lattice mismatch, off-lattice exponent, bad bounds."""


class NonUnitError(VertexqError):
    """Attempt to invert a series whose leading coefficient is zero."""


class InconclusiveWindow(VertexqError):
    """A comparison window was too thin to decide equality either way."""


class WeightMismatchError(VertexqError):
    """Character evaluated on a conjugacy class of the wrong symmetric group."""


class RangeError(VertexqError):
    """A requested check lies outside the feasible truncation range."""

    def __init__(self, message, feasible=None):
        super().__init__(message)
        self.feasible = feasible
