"""Exception hierarchy shared by all modules."""


class GolError(Exception):
    pass


class ParseError(GolError, ValueError):
    """Malformed word or group-spec; ``offset`` is the byte offset of the bad token."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DomainError(GolError):
    """The request is well formed but falls outside what the configured window can decide."""


class WindowError(DomainError):
    pass


class BoundaryPinchError(DomainError):
    """A Britton pinch whose resolution needs a relation outside the stable-letter window."""


class BudgetExceeded(DomainError):
    pass
