"""Error types shared by the library and the command line."""

from typing import Any, Optional


class TransmatError(Exception):
    """Base class for every error raised by transmat."""

    exit_code: int = 1


class InputError(TransmatError, ValueError):
    """
    Malformed input or a violated precondition.

    Attributes:
        location: The offending item when one can be named, e.g. a half-edge
    """

    exit_code = 1

    def __init__(self, message: str, location: Optional[Any] = None):
        super().__init__(message)
        self.location = location


class BudgetExceeded(TransmatError, RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""

    exit_code = 2

    def __init__(self, message: str, limit: Optional[int] = None, required: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.required = required


class ConsistencyError(TransmatError, RuntimeError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 3
