"""Exception types shared across the package.

Argument problems raise plain ``ValueError``.  The two classes below mark
conditions callers are expected to branch on: enumeration/build budgets and
internal cross-checks that can only fail on a bug or tampered input.
"""


class BudgetExceededError(RuntimeError):
    """A requested computation does not fit the configured resource budget."""

    def __init__(self, message: str, *, required: int | None = None):
        super().__init__(message)
        self.required = required


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; the result cannot be trusted."""
