"""Exception types shared across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class GraphError(ValueError):
    """Graph violates a structural requirement (loop, multi-edge, degree)."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


class ContractGap(RuntimeError):
    """An internal invariant of a constructive chooser failed.

    Carries the decision trace so the failing instance can be replayed.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class Unsupported(RuntimeError):
    """No constructive route applies to this graph."""
