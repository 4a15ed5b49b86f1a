"""Exception hierarchy shared by every module of the package."""


class HankelError(Exception):
    """Base class for all errors raised by hankeltx."""


class NotRevertible(HankelError):
    """Series has a nonzero constant term or a vanishing linear term."""


class InsufficientPrefix(HankelError):
    """An operation needs more sequence terms than are known."""


class IndexOutOfRange(HankelError):
    pass


class ConsistencyError(HankelError):
    """Two independent evaluation routes disagreed."""


class Unset(HankelError):
    """The zeroth moment of a recurrence was needed but never set."""


class InsufficientCoeffs(HankelError):
    pass


class InvalidScale(HankelError):
    pass


class DivisionByZeroR(HankelError):
    """A linear-multiplier r-value vanished (singular shifted Hankel minor)."""


class InvalidParams(HankelError):
    pass


class ParseError(HankelError):
    pass


class GapError(ParseError):
    """b-file indices are not contiguous."""


class ConfigError(HankelError):
    pass
