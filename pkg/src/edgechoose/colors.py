"""List assignments, set colorings, remaining lists and the validity checker.

A list assignment is a tuple of frozensets indexed by edge id. A set coloring
stores the chosen colors per edge; an empty set means uncolored.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .graph import Graph

ListAssignment = tuple  # tuple[frozenset[int], ...], one entry per edge id


def make_lists(lists: Iterable[Iterable[int]]) -> ListAssignment:
    return tuple(frozenset(x) for x in lists)


@dataclass(frozen=True)
class SetColoring:
    chosen: tuple[frozenset[int], ...]
    s: int = 2

    @classmethod
    def empty(cls, m: int, s: int = 2) -> "SetColoring":
        return cls(tuple(frozenset() for _ in range(m)), s)

    @classmethod
    def of(cls, chosen: Iterable[Iterable[int]], s: int = 2) -> "SetColoring":
        return cls(tuple(frozenset(c) for c in chosen), s)

    def __getitem__(self, e: int) -> frozenset[int]:
        return self.chosen[e]

    def __len__(self):
        return len(self.chosen)


def _chosen(phi) -> Sequence[Collection[int]]:
    return phi.chosen if isinstance(phi, SetColoring) else phi


def uniform_size(lists: ListAssignment) -> int | None:
    """Common list size, or None if sizes differ."""
    sizes = {len(x) for x in lists}
    return sizes.pop() if len(sizes) == 1 else None


def trim(colors: Iterable[int], size: int) -> frozenset[int]:
    """Keep the ``size`` smallest colors (largest are discarded first)."""
    return frozenset(sorted(colors)[:size])


def remaining_list(g: Graph, lists: ListAssignment, phi, e: int) -> frozenset[int]:
    """``L(e)`` minus colors on incident edges and colors already on ``e``."""
    chosen = _chosen(phi)
    out = set(lists[e])
    out -= chosen[e]
    for f in g.incident_edges(e):
        out -= chosen[f]
    return frozenset(out)


def save_margin(g: Graph, lists: ListAssignment, phi, e: int) -> int:
    """Number of incident choices minus the number of colors they remove from ``L(e)``.

    A color is saved on ``e`` when this is at least 1.
    """
    chosen = _chosen(phi)
    count = 0
    hit: set[int] = set()
    for f in g.incident_edges(e):
        count += len(chosen[f])
        hit.update(chosen[f])
    return count - len(hit & lists[e])


@dataclass(frozen=True)
class Violation:
    rule: str  # "multiplicity" | "list" | "disjointness" | "shape"
    edges: tuple[int, ...]
    detail: str = ""


def verify_set_coloring(g: Graph, lists: ListAssignment, phi, s: int) -> list[Violation]:
    """Return all violations; an empty list means ``phi`` is a valid s-set L-coloring."""
    chosen = _chosen(phi)
    if len(chosen) != g.m or len(lists) != g.m:
        return [Violation("shape", (), f"expected {g.m} entries")]
    out = []
    for e in range(g.m):
        if len(chosen[e]) != s:
            out.append(Violation("multiplicity", (e,), f"{len(chosen[e])} colors, need {s}"))
        stray = set(chosen[e]) - lists[e]
        if stray:
            out.append(Violation("list", (e,), f"colors {sorted(stray)} not in list"))
    for e, (u, v) in enumerate(g.edges):
        for f in g.incident_edges(e):
            if f > e:
                both = set(chosen[e]) & set(chosen[f])
                if both:
                    out.append(Violation("disjointness", (e, f), f"share {sorted(both)}"))
    return out


def is_partial_coloring(g: Graph, lists: ListAssignment, phi, s: int = 2) -> bool:
    chosen = _chosen(phi)
    for e in range(g.m):
        if len(chosen[e]) > s or not set(chosen[e]) <= lists[e]:
            return False
        for f in g.incident_edges(e):
            if set(chosen[e]) & set(chosen[f]):
                return False
    return True


def make_uniform_assignment(g: Graph, r: int, palette: int | None = None, seed=None) -> ListAssignment:
    """Random r-subsets of ``range(palette)``; the default palette is ``2r``."""
    palette = 2 * r if palette is None else palette
    if r > palette:
        raise ValueError(f"list size {r} exceeds palette {palette}")
    rng = random.Random(seed)
    colors = range(palette)
    return tuple(frozenset(rng.sample(colors, r)) for _ in range(g.m))


# ---------------------------------------------------------------------------
# JSON


def assignment_to_json(g: Graph, lists: ListAssignment) -> dict:
    return {"edges": [list(e) for e in g.edges], "lists": [sorted(x) for x in lists]}


def assignment_from_json(g: Graph, data: dict) -> ListAssignment:
    edges = [tuple(sorted(e)) for e in data["edges"]]
    if len(edges) != g.m or len(data["lists"]) != g.m:
        raise ValueError("assignment does not match graph edge count")
    by_edge = dict(zip(edges, data["lists"]))
    if set(by_edge) != set(g.edges):
        raise ValueError("assignment edges do not match graph")
    return tuple(frozenset(by_edge[e]) for e in g.edges)


def coloring_to_json(phi: SetColoring) -> dict:
    return {"s": phi.s, "chosen": [sorted(c) for c in phi.chosen]}


def coloring_from_json(data: dict) -> SetColoring:
    return SetColoring.of(data["chosen"], int(data.get("s", 2)))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
