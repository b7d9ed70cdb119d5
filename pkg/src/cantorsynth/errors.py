"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ArgumentError -> 2,
BoundViolation -> 1, ResourceError / PrecisionError / RangeError -> 3.
"""


class CantorSynthError(Exception):
    """Base class for all package errors."""


class ArgumentError(CantorSynthError):
    """A parameter or precondition is invalid."""


class ResourceError(CantorSynthError):
    """A requested computation exceeds a configured size budget."""


class PrecisionError(CantorSynthError):
    """A stated tolerance cannot be met with the given truncation/grid."""


class RangeError(CantorSynthError):
    """A value overflows the floating-point range."""


class BoundViolation(CantorSynthError):
    """An inequality the theory guarantees failed numerically."""
