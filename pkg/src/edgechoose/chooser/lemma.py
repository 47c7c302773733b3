"""One-color-per-matching-edge selection along an alternating frame, and even cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ..colors import trim
from ..errors import GraphError
from ..graph import CycleTrail, Graph


@dataclass(frozen=True)
class CycleFrame:
    """Edges ``a[i]`` and ``b[i]``; ``b[i]`` meets ``a[i]`` and ``a[i+1]`` (mod k)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b) or not self.a:
            raise GraphError("frame needs equally many a and b edges, at least one")

    def check(self, g: Graph, matching: bool = True) -> None:
        k = len(self.a)
        a_set = set(self.a)
        if matching:
            ends = [x for e in self.a for x in g.edges[e]]
            if len(ends) != len(set(ends)):
                raise GraphError("A is not a matching")
        for i in range(k):
            b = self.b[i]
            for a in (self.a[i], self.a[(i + 1) % k]):
                if g.common_vertex(a, b) is None:
                    raise GraphError(f"b[{i}]={b} does not meet a={a}")
            if matching:
                extra = set(g.incident_edges(b)) & a_set - {self.a[i], self.a[(i + 1) % k]}
                if extra:
                    raise GraphError(f"b[{i}]={b} meets other A edges {sorted(extra)}")


def _walk(a_lists, b_lists) -> list[int]:
    # caller guarantees a_lists[0] != b_lists[-1]
    k = len(a_lists)
    phi = [min(a_lists[0] - b_lists[-1])]
    for i in range(k - 1):
        prev, lb, nxt = phi[-1], b_lists[i], a_lists[i + 1]
        if prev not in lb:
            phi.append(min(nxt))
        elif prev in nxt:
            phi.append(prev)
        else:
            phi.append(min(nxt - lb))
    return phi


def key_lemma_positions(a_lists: Sequence[frozenset], b_lists: Sequence[frozenset]) -> list[int]:
    """Pick one color per ``a`` position so each ``b`` list sees at most one of its two neighbours' colors.

    All lists must have the same size.
    """
    k = len(a_lists)
    if k == 0 or len(b_lists) != k:
        raise ValueError("frame must have equally many a and b lists")
    sizes = {len(x) for x in a_lists} | {len(x) for x in b_lists}
    if len(sizes) != 1 or 0 in sizes:
        raise ValueError(f"lists must be nonempty and of equal size, got sizes {sorted(sizes)}")
    first = a_lists[0]
    if all(x == first for x in a_lists) and all(x == first for x in b_lists):
        return [min(first)] * k
    # forward rotation: b[j] and a[j+1] differ; try j = k-1 first so no rotation is needed
    for j in [k - 1] + list(range(k - 1)):
        s = (j + 1) % k
        if b_lists[j] != a_lists[s]:
            idx = [(s + t) % k for t in range(k)]
            out = _walk([a_lists[i] for i in idx], [b_lists[i] for i in idx])
            res = [0] * k
            for t, i in enumerate(idx):
                res[i] = out[t]
            return res
    # otherwise some a[i] differs from b[i]: walk the cycle backwards from a[i]
    for i in range(k):
        if a_lists[i] != b_lists[i]:
            aidx = [(i - t) % k for t in range(k)]
            bidx = [(i - t - 1) % k for t in range(k)]
            out = _walk([a_lists[x] for x in aidx], [b_lists[x] for x in bidx])
            res = [0] * k
            for t, x in enumerate(aidx):
                res[x] = out[t]
            return res
    raise AssertionError("unreachable: lists differ but no differing neighbours")


def key_lemma_choose(frame: CycleFrame, lists, g: Graph | None = None) -> list[int]:
    """One color per edge of ``frame.a``, in frame order.

    ``lists`` is indexable by edge id. Passing ``g`` validates the frame.
    """
    if g is not None:
        frame.check(g)
    return key_lemma_positions([frozenset(lists[e]) for e in frame.a],
                               [frozenset(lists[e]) for e in frame.b])


def cycle_frame(cycle: CycleTrail) -> CycleFrame:
    """Split an even trail into ``A`` (even positions) and ``B`` (odd positions)."""
    es = cycle.edges
    if len(es) % 2:
        raise GraphError(f"cycle of odd length {len(es)}")
    return CycleFrame(tuple(es[0::2]), tuple(es[1::2]))


def even_cycle_choose(cycle: CycleTrail, lists, m: int = 2) -> dict[int, frozenset[int]]:
    """``m`` colors per edge of an even cycle from lists of size at least ``2m``.

    Lists are trimmed to ``2m``; ``m`` rounds of the frame selection give the
    ``A`` edges their colors and the ``B`` edges keep ``m`` survivors.
    """
    frame = cycle_frame(cycle)
    cur: dict[int, frozenset[int]] = {}
    for e in cycle.edges:
        if len(lists[e]) < 2 * m:
            raise ValueError(f"edge {e} has {len(lists[e])} colors, need {2 * m}")
        cur[e] = trim(lists[e], 2 * m)
    k = len(frame.a)
    chosen = {e: set() for e in cycle.edges}
    for rnd in range(m):
        size = 2 * m - rnd
        a_l = [trim(cur[e], size) for e in frame.a]
        b_l = [trim(cur[e], size) for e in frame.b]
        picks = key_lemma_positions(a_l, b_l)
        for i, e in enumerate(frame.a):
            c = picks[i]
            chosen[e].add(c)
            cur[e] = a_l[i] - {c}
        for i, e in enumerate(frame.b):
            cur[e] = b_l[i] - {picks[i], picks[(i + 1) % k]}
    for e in frame.b:
        if len(cur[e]) < m:
            raise AssertionError(f"edge {e} kept only {len(cur[e])} colors")
        chosen[e] = set(sorted(cur[e])[:m])
    return {e: frozenset(c) for e, c in chosen.items()}
