"""Exception types shared across the package."""

from __future__ import annotations


class LincodeError(Exception):
    """Base class for all errors raised by lincode."""


class FieldMismatchError(LincodeError, ValueError):
    """Operands belong to different prime fields."""


class ShapeError(LincodeError, ValueError):
    """Matrix or vector dimensions do not conform."""


class DegenerateGeneratorError(LincodeError, ValueError):
    """Generator matrix is rank-deficient or has a zero column."""


class BudgetExceededError(LincodeError, RuntimeError):
    """A work or enumeration cap was hit.

    ``stats`` carries whatever partial progress was made before giving up
    (for the distance scan: subsets examined per level).
    """

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


class InconsistentDistanceError(LincodeError, ValueError):
    """The caller-supplied minimum distance contradicts what the scan found."""


class InternalConsistencyError(LincodeError, ArithmeticError):
    """An identity that must hold exactly came out wrong."""
