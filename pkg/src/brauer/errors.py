"""Exception types raised by the library."""


class BrauerError(ValueError):
    """Base class for invalid input or violated preconditions."""


class FieldError(BrauerError):
    pass


class NotInvertibleError(BrauerError, ZeroDivisionError):
    pass


class FormError(BrauerError):
    """Bad bilinear-form configuration (char 2 symmetric, odd n skew)."""


class DiagramError(BrauerError):
    pass


class EnumerationCapError(BrauerError):
    pass


class WeightError(BrauerError):
    pass
