"""Exception types shared across the package."""


class MultiAcmError(Exception):
    """Base class for all package errors."""


class ShapeError(MultiAcmError, ValueError):
    """Wrong number of factors, factor index out of range, or mismatched shapes."""


class InvalidPointError(MultiAcmError, ValueError):
    """A coordinate vector has the wrong length or is identically zero."""


class DuplicatePointError(InvalidPointError):
    pass


class NotStarError(MultiAcmError):
    """The configuration lacks the (star) property."""


class ChainError(MultiAcmError, ValueError):
    """A sequence of point sets that should be nested is not."""


class RingMismatchError(MultiAcmError, ValueError):
    pass


class InexactDivisionError(MultiAcmError, ArithmeticError):
    """Exact polynomial division left a remainder. Indicates a bug upstream."""


class RetryExhausted(MultiAcmError, RuntimeError):
    """A randomized generator failed certification too many times."""


class PreconditionError(MultiAcmError, ValueError):
    """An operation was called on input outside its stated hypotheses.

    ``name`` identifies the violated condition.
    """

    def __init__(self, name, message=""):
        super().__init__(f"{name}: {message}" if message else name)
        self.name = name
