class DyckgenError(ValueError):
    """Base class for every error raised by the library."""


class NonUnitConstantTerm(DyckgenError):
    pass


class BadConstantTerm(DyckgenError):
    pass


class InvalidHeight(DyckgenError):
    pass


class HeightTooLarge(DyckgenError):
    pass


class GuardExceeded(DyckgenError):
    pass


class SpecOutOfRange(DyckgenError):
    pass


class Unreachable(DyckgenError):
    pass


class CrossMethodMismatch(DyckgenError):
    """Two independent routes produced different series. Never expected."""
