"""Exception types shared across the toolkit.

The CLI maps these onto process exit codes: invalid input -> 2,
numerical failure -> 3, I/O errors (plain OSError) -> 4.
"""


class InvalidInput(ValueError):
    """A precondition on user-supplied data or configuration is violated."""


class NumericalFailure(RuntimeError):
    """A solver produced a non-finite or otherwise unusable state."""
