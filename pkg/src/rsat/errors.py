"""Exception types shared across the package."""


class RsatError(Exception):
    """Base class for all package errors."""


class ParseError(RsatError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParameterError(RsatError):
    """A construction or search was called with invalid parameters."""


class ResourceLimitError(RsatError):
    """An operation would exceed its hard resource bound."""


class BudgetExceededError(RsatError):
    """A search ran out of its configured budget; carries partial results."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InfeasibleError(RsatError):
    """A construction cannot produce a verified graph for these parameters."""


class IntegrityError(RsatError):
    """A persisted record or witness failed re-verification."""
