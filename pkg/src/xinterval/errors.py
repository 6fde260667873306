"""Exception hierarchy shared by every module."""


class XIntervalError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(XIntervalError, IndexError):
    pass


class DuplicateEdge(XIntervalError, ValueError):
    pass


class LengthMismatch(XIntervalError, ValueError):
    pass


class PreconditionViolated(XIntervalError, ValueError):
    pass


class NotProper(XIntervalError, ValueError):
    pass


class InfeasibleDegrees(XIntervalError, ValueError):
    pass


class InternalError(XIntervalError, RuntimeError):
    """Raised when an invariant that should hold by construction is broken."""


class ParseError(XIntervalError, ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BudgetExhausted(XIntervalError):
    """A search ran out of its node budget.

    ``report`` carries whatever partial result the caller had accumulated.
    """

    def __init__(self, message="search budget exhausted", report=None):
        super().__init__(message)
        self.report = report
