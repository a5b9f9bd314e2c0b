"""Exceptions shared by every package."""


class RainbowError(Exception):
    """Base class for all library errors."""


class DomainError(RainbowError, ValueError):
    """A parameter is out of range or an input object is malformed."""


class PreconditionError(DomainError):
    """A documented precondition of an operation does not hold."""


class SizeLimitError(DomainError):
    """The instance exceeds a hard size cap; the caller must not approximate."""


class InvariantError(RainbowError, RuntimeError):
    """An internal contract was broken. Always a bug, never caught."""


class BudgetExceededError(RainbowError):
    """A counting operation ran out of search nodes before finishing."""

    def __init__(self, message: str, nodes_visited: int = 0):
        super().__init__(message)
        self.nodes_visited = nodes_visited
