"""Exhaustive search for set colorings on small graphs.

Used as an independent check on the constructive choosers and for small
non-choosability witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .colors import SetColoring
from .errors import BudgetExceeded
from .graph import Graph


@dataclass
class OracleResult:
    verdict: str  # "yes" or "no"
    witness: object = None
    nodes: int = 0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "yes"


class _Counter:
    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)


def brute_force_choose(g: Graph, lists, s: int = 2, budget: int | None = None) -> OracleResult:
    """Find an ``s``-set coloring from ``lists`` or prove none exists.

    Edges are assigned most-constrained first; subsets are tried in
    lexicographic order.
    """
    if len(lists) != g.m:
        raise ValueError(f"expected {g.m} lists, got {len(lists)}")
    lists = [frozenset(x) for x in lists]
    nbrs = [g.incident_edges(e) for e in range(g.m)]
    phi: list[frozenset | None] = [None] * g.m
    cnt = _Counter(budget)

    def avail(e):
        used = set()
        for f in nbrs[e]:
            if phi[f] is not None:
                used |= phi[f]
        return lists[e] - used

    def rec(left):
        cnt.tick()
        if left == 0:
            return True
        best, best_av = None, None
        for e in range(g.m):
            if phi[e] is None:
                av = avail(e)
                if len(av) < s:
                    return False
                if best is None or len(av) < len(best_av):
                    best, best_av = e, av
        for sub in combinations(sorted(best_av), s):
            phi[best] = frozenset(sub)
            if rec(left - 1):
                return True
        phi[best] = None
        return False

    if rec(g.m):
        return OracleResult("yes", SetColoring(tuple(phi), s), cnt.nodes)
    return OracleResult("no", None, cnt.nodes)


def brute_force_rs_colorable(g: Graph, r: int, s: int, budget: int | None = None) -> OracleResult:
    """Is there an ``s``-set coloring using colors ``0..r-1`` only?

    Color names are interchangeable, so each new color introduced is the
    smallest unused one.
    """
    nbrs = [g.incident_edges(e) for e in range(g.m)]
    phi: list[frozenset | None] = [None] * g.m
    cnt = _Counter(budget)

    def rec(e, top):
        cnt.tick()
        if e == g.m:
            return True
        used = set()
        for f in nbrs[e]:
            if phi[f] is not None:
                used |= phi[f]
        old = [c for c in range(top) if c not in used]
        for k_new in range(0, s + 1):
            if top + k_new > r:
                break
            new = tuple(range(top, top + k_new))
            for sub in combinations(old, s - k_new):
                phi[e] = frozenset(sub + new)
                if rec(e + 1, top + k_new):
                    return True
        phi[e] = None
        return False

    if rec(0, 0):
        return OracleResult("yes", SetColoring(tuple(phi), s), cnt.nodes)
    return OracleResult("no", None, cnt.nodes)


def canonical_assignments(m: int, r: int, palette: int):
    """List assignments of ``r``-subsets of ``range(palette)`` up to renaming colors.

    Colors appear in order of first use (restricted growth), which removes
    the palette symmetry but not graph automorphisms.
    """
    if r > palette:
        return

    def rec(i, top, acc):
        if i == m:
            yield tuple(acc)
            return
        for k_new in range(0, r + 1):
            if top + k_new > palette:
                break
            new = tuple(range(top, top + k_new))
            for sub in combinations(range(top), r - k_new):
                acc.append(frozenset(sub + new))
                yield from rec(i + 1, top + k_new, acc)
                acc.pop()

    yield from rec(0, 0, [])


def exhaustive_choosability_check(g: Graph, r: int, s: int, palette: int | None = None,
                                  budget: int | None = None) -> OracleResult:
    """Check every canonical ``r``-list assignment over ``palette`` colors.

    ``verdict`` is ``"no"`` with the failing assignment as witness if some
    assignment has no ``s``-set coloring.
    """
    palette = palette if palette is not None else r * g.m
    cnt = _Counter(budget)
    checked = 0
    for lists in canonical_assignments(g.m, r, palette):
        res = brute_force_choose(g, lists, s)
        cnt.nodes += res.nodes
        if budget is not None and cnt.nodes > budget:
            raise BudgetExceeded(cnt.nodes)
        checked += 1
        if not res.ok:
            return OracleResult("no", lists, cnt.nodes, {"assignments": checked})
    return OracleResult("yes", None, cnt.nodes, {"assignments": checked})
