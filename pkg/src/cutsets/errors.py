class CutsetError(Exception):
    """Base class for errors raised by this package."""


class UsageError(CutsetError, ValueError):
    """Bad arguments: out-of-range elements, mismatched grounds, malformed input."""


class CapacityError(CutsetError, ValueError):
    """The requested size exceeds a hard limit of the algorithm."""

    def __init__(self, what, limit, got):
        super().__init__(f"{what}: limit is {limit}, got {got}")
        self.limit = limit
        self.got = got


class PreconditionError(CutsetError, ValueError):
    """An operation's input fails a mathematical precondition (e.g. not a cutset)."""
