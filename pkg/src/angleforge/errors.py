"""Exception hierarchy.

Two failure classes are kept apart on purpose: bad input is recoverable and
maps to CLI exit code 1, while a violated mathematical invariant means the
code (or its soundness preconditions) is wrong and maps to exit code 2.
"""


class InputError(ValueError):
    """Invalid user input or unsatisfied precondition."""


class BudgetExceeded(InputError):
    """A size guard tripped before materializing anything expensive."""

    def __init__(self, message, required=None, limit=None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class InvariantViolation(RuntimeError):
    """An exact mathematical invariant failed; never tolerated silently."""


class RationalRootWarning(UserWarning):
    """The supplied minimal polynomial has a rational root (not irreducible)."""
