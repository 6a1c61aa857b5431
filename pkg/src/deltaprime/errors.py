"""Typed errors shared across the library."""

__all__ = [
    "DeltaPrimeError",
    "SingularParameterError",
    "PrecisionFloorError",
    "NotARootError",
    "InvariantViolation",
]


class DeltaPrimeError(Exception):
    """Base class for all library-specific failures."""


class SingularParameterError(DeltaPrimeError):
    """A boundary-condition formula was evaluated at one of its poles."""


class PrecisionFloorError(DeltaPrimeError):
    """Requested squeeze widths below the validated double-precision floor."""


class NotARootError(DeltaPrimeError):
    """A value passed as a resonance root does not satisfy its equation."""


class InvariantViolation(DeltaPrimeError):
    """A computed result failed one of its built-in consistency checks."""
