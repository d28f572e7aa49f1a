"""Exception types shared across the package."""


class GradstarError(Exception):
    pass


class RingMismatchError(GradstarError):
    """Operands belong to different rings."""


class ZeroInputError(GradstarError):
    """A nonzero element or ideal was required."""


class DegreeError(GradstarError):
    """A degree vector does not lie in the grading monoid."""


class HomogeneityError(GradstarError):
    """A homogeneous element or ideal was required."""


class IncompatibleStarError(GradstarError):
    """The star operation is not available on this ring."""


class CapExceededError(GradstarError):
    """A theorem guarantees existence but the configured cap was reached.

    Carries the partial trace of attempted exponents so the caller can tell a
    short cap from a genuine engine bug.
    """

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


class ParseError(GradstarError):
    """Syntax or name error in the expression grammar, with 0-based column."""

    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column


class RegistryError(GradstarError):
    """Invalid or rejected ring specification."""


class SuiteError(GradstarError):
    """Unknown suite/identity or incompatible suite arguments."""
