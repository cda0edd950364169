"""Exception hierarchy shared by every module."""


class SignedGraphError(Exception):
    """Base class for all errors raised by sgfrust."""


class MalformedInputError(SignedGraphError, ValueError):
    """A graph, signature or switch set violates its structural invariants."""


class ParseError(MalformedInputError):
    """A graph document could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(SignedGraphError, ValueError):
    """An operation was called on an input outside its domain."""


class BudgetExceededError(SignedGraphError):
    """An exhaustive search would exceed its configured cap or time budget."""

    def __init__(self, message, cap=None):
        self.cap = cap
        super().__init__(message)


class InternalInconsistencyError(SignedGraphError, RuntimeError):
    """A self-check failed; this indicates a bug."""
