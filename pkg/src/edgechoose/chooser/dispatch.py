"""Pick a constructive route for a subcubic graph and run it."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..decomposition import (
    MedDecomposition,
    ThreeEdgeColoring,
    find_med_by_long_cycle,
    find_med_exhaustive,
    find_proper_3ec,
)
from ..colors import SetColoring
from ..errors import BudgetExceeded, Unsupported
from ..graph import Graph, generate_gstar
from .gstar import choose_gstar
from .med import choose_med
from .threeec import choose_3ec

MED_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class Route:
    method: str  # "3ec", "med" or "gstar"
    tec: ThreeEdgeColoring | None = None
    med: MedDecomposition | None = None


@dataclass
class ChooseResult:
    method: str
    coloring: SetColoring
    trace: list = field(default_factory=list)


def plan_route(g: Graph, med_budget: int | None = MED_SEARCH_BUDGET) -> Route:
    """First applicable of: 3-edge-coloring, MED decomposition, ``G*``.

    Raises ``Unsupported`` when none applies.
    """
    if any(d > 3 for d in g.degrees()):
        raise Unsupported("maximum degree above 3")
    tec = find_proper_3ec(g)
    if tec is not None:
        return Route("3ec", tec=tec)
    if g.is_cubic():
        med = find_med_by_long_cycle(g)
        if med is None:
            try:
                med = find_med_exhaustive(g, budget=med_budget)
            except BudgetExceeded:
                med = None
        if med is not None:
            return Route("med", med=med)
    if g == generate_gstar():
        return Route("gstar")
    raise Unsupported("graph has no 3-edge-coloring, no MED decomposition found, and is not G*")


def choose_72(g: Graph, lists, route: Route | None = None) -> ChooseResult:
    """2-set coloring from lists of at least 7 colors via the planned route."""
    if any(len(x) < 7 for x in lists):
        raise ValueError("every list needs at least 7 colors")
    route = route or plan_route(g)
    trace: list = []
    if route.method == "3ec":
        phi = choose_3ec(g, route.tec, lists, trace)
    elif route.method == "med":
        phi = choose_med(g, route.med, lists, trace)
    elif route.method == "gstar":
        phi = choose_gstar(lists, g, trace)
    else:
        raise ValueError(f"unknown route {route.method!r}")
    return ChooseResult(route.method, phi, trace)
