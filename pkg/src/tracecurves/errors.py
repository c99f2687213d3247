class CostGuardError(RuntimeError):
    """An exhaustive computation would exceed its configured budget."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
