"""Exception types shared across the package."""


class ZonoMTTError(Exception):
    """Base class for all errors raised by zonomtt."""


class DimensionError(ZonoMTTError, ValueError):
    """Matrix or vector shapes are incompatible with the operation."""


class SingularMatrixError(ZonoMTTError, ValueError):
    """A matrix that must be invertible is singular."""


class InstanceTooLarge(ZonoMTTError):
    """A brute-force enumeration would exceed the configured cap."""

    def __init__(self, count, cap, what="subsets"):
        super().__init__(f"instance too large: {count} {what} exceeds cap {cap}")
        self.count = count
        self.cap = cap


class NotUnimodularError(ZonoMTTError, ValueError):
    """An operation requiring a unimodular matrix received something else."""


class InvariantViolation(ZonoMTTError, AssertionError):
    """A property guaranteed by theory failed to hold.

    Raised instead of a bare ``assert`` so the check survives ``python -O``.
    Seeing one means either the input violated a precondition that was not
    checked up front, or there is a bug.
    """
