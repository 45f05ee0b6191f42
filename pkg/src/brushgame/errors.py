"""Exception types shared across the package."""


class BrushgameError(Exception):
    """Base class for errors raised by this package."""


class IllegalMoveError(BrushgameError):
    """A move (placement or firing) violates the rules at this position."""


class BudgetExceededError(BrushgameError):
    """An exact search ran out of its node budget before finishing."""


class InternalInvariantError(BrushgameError):
    """An internal consistency check failed; this signals a bug."""


class SymmetryEligibilityError(BrushgameError):
    """A symmetry reduction was requested on a graph it is not valid for."""
