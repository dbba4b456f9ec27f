"""Exception types shared across the package."""


class DegreeMismatchError(ValueError):
    """Two elements of different degrees were combined."""


class BudgetExceededError(RuntimeError):
    """An enumeration was requested beyond its configured budget."""


class EdgeCapExceededError(BudgetExceededError):
    """An ordering search was asked to handle more edges than the cap allows."""


class AcyclicGraphError(ValueError):
    """A cycle-based construction was applied to a forest."""
