"""Shared exception types."""


class Graph6Error(ValueError):
    """Malformed graph6 input. Carries the byte offset of the first bad byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """An exact computation was refused or abandoned because it exceeded a
    configured size limit, node budget, or deadline. Callers that produce
    verdicts must map this to an 'undecided' outcome, never to a false one."""
