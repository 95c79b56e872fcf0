"""Exception types shared across the package."""

from __future__ import annotations


class DissociationError(Exception):
    """Base class for all package errors."""


class GraphFormatError(DissociationError, ValueError):
    """Malformed graph text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotApplicableError(DissociationError, ValueError):
    """The input violates a structural precondition (not a forest, not a cactus, ...)."""


class BudgetExceeded(DissociationError):
    """An exact search ran out of its node/time budget.

    ``incumbent`` is the best dissociation set known when the search stopped
    (a lower bound on the optimum), or None.
    """

    def __init__(self, message: str, incumbent=None):
        self.incumbent = incumbent
        super().__init__(message)


class CycleCapExceeded(DissociationError):
    """Induced-cycle enumeration hit its cap, so cycle counts are unknown."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(
            f"induced cycle enumeration exceeded cap={cap}; raise the cap (--cycle-cap)"
        )


class InvariantViolation(DissociationError, AssertionError):
    """An internal consistency check failed. Always a bug."""


class PackingLimitExceeded(DissociationError):
    """Too many candidate cycles for the exact disjoint-packing search."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(
            f"{count} candidate cycles exceed the packing limit {limit}; raise --packing-limit"
        )
