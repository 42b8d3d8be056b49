class StefanError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StefanError, ValueError):
    pass


class ConvergenceError(StefanError, RuntimeError):
    pass


class BadBracketError(StefanError, ValueError):
    pass


class NoRootError(StefanError, RuntimeError):
    pass
