"""Exception types shared across pushkit."""


class PushkitError(Exception):
    """Base class for every error raised by pushkit."""


class InputError(PushkitError, ValueError):
    """Malformed graph, walk, vertex set or file."""


class InvalidWalkError(InputError):
    """A walk step has no arc (or edge) between its endpoints."""


class ResourceLimitError(PushkitError):
    """A search or enumeration exceeded its configured budget or size cap.

    This is never used to signal a negative answer.
    """


class ReductionViolation(PushkitError):
    """A reduction biconditional failed on a concrete instance."""
