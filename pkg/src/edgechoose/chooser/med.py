"""2-set coloring from 7-lists on cubic graphs with a MED decomposition.

Pipeline per component of ``G1 ∪ G2 ∪ H``: either the equal-lists shortcut or
a walk around each cycle choosing one color per incident non-cycle edge, so
that every cycle edge either saves a color or is left needy with an ``H`` edge
as its sponsor. The double-stars are then completed so every needy edge is
saved, and the cycles are finished as even cycles with 4-lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..colors import SetColoring, remaining_list, save_margin, trim, verify_set_coloring
from ..decomposition import MedDecomposition, verify_med
from ..errors import BudgetExceeded, ContractGap
from ..graph import CycleTrail, Graph
from .lemma import CycleFrame, even_cycle_choose

G1, G2, H, CENTER = "G1", "G2", "H", "center"

FALLBACK_BUDGET = 200_000


@dataclass
class ChooserState:
    """Working data for one run: the partial coloring, the tracked lists and bookkeeping.

    ``dyn[e]`` for a cycle edge has exactly ``7 - (colors chosen on incident edges)``
    elements and is always a subset of the true remaining list; when a chosen
    color is not in it, its largest element is dropped instead. For other
    edges ``dyn`` is the true remaining list.
    """

    g: Graph
    med: MedDecomposition
    lists: tuple
    kind: list[str]
    sibling: dict[int, int]
    center_of: dict[int, int]
    cycle_of: dict[int, int]
    phi: list[set] = field(default_factory=list)
    dyn: list[set] = field(default_factory=list)
    needy: dict[int, int] = field(default_factory=dict)  # needy cycle edge -> sponsor
    trace: list = field(default_factory=list)
    fallback_used: bool = False

    @classmethod
    def start(cls, g: Graph, med: MedDecomposition, lists) -> "ChooserState":
        kind = [G1] * g.m
        cycle_of = {}
        for ci, c in enumerate(med.g2):
            for e in c.edges:
                kind[e] = G2
                cycle_of[e] = ci
        sibling, center_of = {}, {}
        for s in med.g3:
            kind[s.center] = CENTER
            f1, f2, f3, f4 = s.leaves
            for f in s.leaves:
                kind[f] = H
                center_of[f] = s.center
            sibling.update({f1: f2, f2: f1, f3: f4, f4: f3})
        L = tuple(trim(x, 7) for x in lists)
        return cls(g, med, L, kind, sibling, center_of, cycle_of,
                   phi=[set() for _ in range(g.m)], dyn=[set(x) for x in L])

    def rem(self, e: int) -> frozenset[int]:
        return remaining_list(self.g, self.lists, self.phi, e)

    def gap(self, msg: str):
        return ContractGap(msg, self.trace)

    def choose(self, b: int, c: int) -> None:
        if c in self.phi[b] or any(c in self.phi[f] for f in self.g.incident_edges(b)):
            raise self.gap(f"color {c} on edge {b} clashes")
        self.phi[b].add(c)
        self.dyn[b].discard(c)
        for f in self.g.incident_edges(b):
            d = self.dyn[f]
            if c in d:
                d.discard(c)
            elif self.kind[f] == G2 and d:
                d.discard(max(d))

    def capacity(self, b: int) -> int:
        """Colors ``b`` should hold before the double-star completion."""
        return {G1: 2, H: 1}.get(self.kind[b], 0)


def _orient(state: ChooserState, cyc: CycleTrail, a1: int, b1: int):
    """Cycle edges ``a_1..a_k`` starting at ``a1`` toward ``b1``, with their ``b_i``."""
    g = state.g
    k = len(cyc.edges)
    j = cyc.edges.index(a1)
    p = g.common_vertex(a1, b1)
    if cyc.vertices[j] == p:
        a = [cyc.edges[(j + t) % k] for t in range(k)]
        verts = [cyc.vertices[(j + t) % k] for t in range(k)]
    elif cyc.vertices[(j - 1) % k] == p:
        a = [cyc.edges[(j - t) % k] for t in range(k)]
        verts = [cyc.vertices[(j - t - 1) % k] for t in range(k)]
    else:
        raise state.gap(f"edge {b1} does not meet cycle edge {a1} on the cycle")
    b = []
    for x in verts:
        third = [f for f in g.vertex_edges[x] if state.kind[f] != G2]
        if len(third) != 1:
            raise state.gap(f"cycle vertex {x} lacks a unique non-cycle edge")
        b.append(third[0])
    return CycleFrame(tuple(a), tuple(b))


def lemma_cycle_process(state: ChooserState, frame: CycleFrame) -> None:
    """Choose one color on each ``b_i``, saving on ``a_i`` or recording ``a_i`` as needy."""
    g = state.g
    k = len(frame.a)
    for i in range(k):
        a, b = frame.a[i], frame.b[i]
        if len(state.phi[b]) >= state.capacity(b):
            raise state.gap(f"edge {b} already holds {len(state.phi[b])} colors")
        opts = state.dyn[b] - state.dyn[a]
        if opts:
            c = min(opts)
            state.trace.append({"step": "save", "a": a, "b": b, "color": c})
        elif state.kind[b] == H and state.phi[state.sibling[b]]:
            e = state.center_of[b]
            left = state.rem(e)
            if len(left) >= 6:
                c = min(state.dyn[b])
                how = "free"
            else:
                pool = state.dyn[b] - left
                if not pool:
                    raise state.gap(f"no color on sponsor {b} saves on center {e}")
                c = min(pool)
                how = "center-save"
            state.needy[a] = b
            state.trace.append({"step": "sponsor", "a": a, "b": b, "color": c, "center": e, "rule": how})
        else:
            raise state.gap(f"cannot save on {a} via {b} (lists {sorted(state.dyn[b])} within {sorted(state.dyn[a])})")
        state.choose(b, c)


def _components(state: ChooserState):
    """Components of G1 ∪ G2 ∪ H as (edge set) in order of smallest edge id."""
    g = state.g
    keep = [e for e in range(g.m) if state.kind[e] != CENTER]
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in keep:
        u, v = g.edges[e]
        parent[find(u)] = find(v)
    comps: dict[int, list[int]] = {}
    for e in keep:
        comps.setdefault(find(g.edges[e][0]), []).append(e)
    return sorted((sorted(es) for es in comps.values()), key=lambda es: es[0])


def _case1(state: ChooserState, comp: list[int]) -> None:
    g = state.g
    rs = [e for e in comp if state.kind[e] in (G1, G2)]
    parent = {e: e for e in rs}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in rs:
        for f in g.incident_edges(e):
            if f in parent:
                parent[find(e)] = find(f)
    groups: dict[int, list[int]] = {}
    for e in rs:
        groups.setdefault(find(e), []).append(e)
    for r in sorted(groups.values(), key=min):
        common = state.lists[min(r)]
        c, c2 = sorted(common)[:2]
        verts = {x for e in r for x in g.edges[e]}
        for e in r:
            if state.kind[e] == G1:
                state.choose(e, c)
                state.choose(e, c2)
        hs = sorted({f for x in verts for f in g.vertex_edges[x] if state.kind[f] == H})
        for h in hs:
            pick = c2 if c in state.phi[state.sibling[h]] else c
            state.choose(h, pick)
        state.trace.append({"step": "case1", "edges": sorted(r), "colors": [c, c2], "h": hs})


def _unprocessed_cycles(state, comp, done):
    return sorted({state.cycle_of[e] for e in comp if state.kind[e] == G2} - done)


def _next_start(state: ChooserState, comp: list[int], done: set[int]):
    """Pick how to continue into an unprocessed cycle; returns (kind, cycle, a1, b1)."""
    g = state.g
    todo = set(_unprocessed_cycles(state, comp, done))
    # a matching edge from a processed cycle whose list is not inside a new cycle edge's list
    for b in comp:
        if state.kind[b] != G1 or len(state.phi[b]) != 1:
            continue
        for x in g.edges[b]:
            at = [e for e in g.vertex_edges[x] if state.kind[e] == G2 and state.cycle_of[e] in todo]
            for a in sorted(at):
                if state.rem(b) - state.rem(a):
                    return "g1-bridge", state.cycle_of[a], a, b
    # the second edge of an H component whose first edge is colored
    for f2 in comp:
        if state.kind[f2] != H or state.phi[f2] or not state.phi[state.sibling[f2]]:
            continue
        leaf = [x for x in g.edges[f2] if any(state.kind[e] == G2 for e in g.vertex_edges[x])]
        at = [e for e in g.vertex_edges[leaf[0]] if state.kind[e] == G2 and state.cycle_of[e] in todo]
        if not at:
            continue
        at.sort()
        good = [a for a in at if state.rem(f2) - state.rem(a)]
        a1 = good[0] if good else at[0]
        return "h-bridge", state.cycle_of[a1], a1, f2
    return None


def _terminal(state: ChooserState, cyc_idx: int) -> bool:
    """All incident edges are once-colored G1 edges sharing one remaining list."""
    g = state.g
    cyc = state.med.g2[cyc_idx]
    outs = set()
    for x in cyc.vertices:
        outs.update(f for f in g.vertex_edges[x] if state.kind[f] != G2)
    if any(state.kind[f] != G1 or len(state.phi[f]) != 1 for f in outs):
        return False
    lists = {state.rem(e) for e in cyc.edges} | {state.rem(f) for f in outs}
    if len(lists) != 1:
        return False
    common = lists.pop()
    if not common:
        return False
    c = min(common)
    for f in sorted(outs):
        state.choose(f, c)
    state.trace.append({"step": "terminal", "cycle": list(cyc.edges), "color": c, "edges": sorted(outs)})
    return True


def _fallback_start(state: ChooserState, comp, done):
    g = state.g
    for ci in _unprocessed_cycles(state, comp, done):
        cyc = state.med.g2[ci]
        for a in sorted(cyc.edges):
            for x in g.edges[a]:
                for b in g.vertex_edges[x]:
                    if state.kind[b] == G2 or len(state.phi[b]) >= state.capacity(b):
                        continue
                    if state.dyn[b] - state.dyn[a] or (state.kind[b] == H and state.phi[state.sibling[b]]):
                        return ci, a, b
    return None


def _case2(state: ChooserState, comp: list[int], e1: int, e2: int) -> None:
    done: set[int] = set()
    first = state.cycle_of[e1]
    state.trace.append({"step": "case2", "a1": e1, "b1": e2})
    lemma_cycle_process(state, _orient(state, state.med.g2[first], e1, e2))
    done.add(first)
    while True:
        todo = _unprocessed_cycles(state, comp, done)
        if not todo:
            return
        nxt = _next_start(state, comp, done)
        if nxt is not None:
            how, ci, a1, b1 = nxt
            state.trace.append({"step": how, "cycle": ci, "a1": a1, "b1": b1})
            lemma_cycle_process(state, _orient(state, state.med.g2[ci], a1, b1))
            done.add(ci)
            continue
        hit = next((ci for ci in todo if _terminal(state, ci)), None)
        if hit is not None:
            done.add(hit)
            continue
        fb = _fallback_start(state, comp, done)
        if fb is None:
            raise _Stalled()
        ci, a1, b1 = fb
        state.trace.append({"step": "fallback-start", "cycle": ci, "a1": a1, "b1": b1})
        lemma_cycle_process(state, _orient(state, state.med.g2[ci], a1, b1))
        done.add(ci)


class _Stalled(Exception):
    pass


def _first_distinct_pair(state: ChooserState, comp: list[int]):
    g = state.g
    for e1 in comp:
        if state.kind[e1] != G2:
            continue
        for e2 in g.incident_edges(e1):
            if state.kind[e2] in (G1, H) and state.lists[e1] != state.lists[e2]:
                return e1, e2
    return None


def _check_lemma4_hypotheses(state: ChooserState):
    g = state.g
    for e in range(g.m):
        want = state.capacity(e)
        if len(state.phi[e]) != want:
            raise state.gap(f"edge {e} ({state.kind[e]}) holds {len(state.phi[e])} colors, expected {want}")
    needy = {}
    for e in range(g.m):
        if state.kind[e] == G2 and save_margin(g, state.lists, state.phi, e) < 1:
            hs = [f for f in g.incident_edges(e) if state.kind[f] == H]
            if len(hs) != 1:
                raise state.gap(f"needy edge {e} has {len(hs)} H neighbours")
            if e not in state.needy:
                raise state.gap(f"edge {e} is needy but was never designated")
            needy[e] = hs[0]
    ends = [x for e in needy for x in g.edges[e]]
    if len(ends) != len(set(ends)):
        raise state.gap("needy edges do not form a matching")
    ends = [x for f in needy.values() for x in g.edges[f]]
    if len(ends) != len(set(ends)):
        raise state.gap("sponsors do not form a matching")
    for s in state.med.g3:
        sp = [f for f in s.leaves if f in needy.values()]
        if len(sp) == 2 and len(state.rem(s.center)) < 4:
            raise state.gap(f"center {s.center} with two sponsors keeps only {len(state.rem(s.center))} colors")
    return needy


def complete_med(state: ChooserState, needy: dict[int, int]) -> None:
    """Finish the double-stars so each needy edge saves a color, then color the cycles."""
    g = state.g
    sponsor_of = {f: a for a, f in needy.items()}
    frozen = {a: trim(state.rem(a), 4) for a in needy}
    for s in state.med.g3:
        sponsors = [f for f in s.leaves if f in sponsor_of]
        for f in sponsors:
            target = frozen[sponsor_of[f]]
            pool = state.rem(f) - target
            if not pool:
                raise state.gap(f"sponsor {f} has no color outside the needy list")
            state.choose(f, min(pool))
        left = sorted(state.rem(s.center))
        if len(left) < 2:
            raise state.gap(f"center {s.center} has fewer than two colors left")
        state.choose(s.center, left[0])
        state.choose(s.center, left[1])
        for f in s.leaves:
            if f in sponsor_of:
                continue
            pool = state.rem(f)
            if not pool:
                raise state.gap(f"leaf {f} has no second color")
            state.choose(f, min(pool))
        state.trace.append({"step": "complete-star", "center": s.center, "sponsors": sponsors})
    for cyc in state.med.g2:
        rl = {e: state.rem(e) for e in cyc.edges}
        short = [e for e, x in rl.items() if len(x) < 4]
        if short:
            raise state.gap(f"cycle edges {short} keep fewer than 4 colors")
        for e, cs in even_cycle_choose(cyc, rl, 2).items():
            for c in sorted(cs):
                state.choose(e, c)


def choose_med(g: Graph, med: MedDecomposition, lists, trace: list | None = None,
               fallback_budget: int = FALLBACK_BUDGET) -> SetColoring:
    if verify_med(g, med):
        raise ValueError("invalid MED decomposition")
    if not g.is_cubic():
        raise ValueError("MED chooser needs a 3-regular graph")
    if any(len(x) < 7 for x in lists):
        raise ValueError("every list needs at least 7 colors")
    state = ChooserState.start(g, med, lists)
    try:
        for comp in _components(state):
            pair = _first_distinct_pair(state, comp)
            if pair is None:
                _case1(state, comp)
            else:
                _case2(state, comp, *pair)
    except _Stalled:
        return _fallback(g, lists, state, trace, fallback_budget)
    finally:
        if trace is not None:
            trace.extend(state.trace)
            state.trace = trace
    needy = _check_lemma4_hypotheses(state)
    complete_med(state, needy)
    out = SetColoring(tuple(frozenset(c) for c in state.phi), 2)
    bad = verify_set_coloring(g, lists, out, 2)
    if bad:
        raise state.gap(f"output failed verification: {bad[:3]}")
    return out


def _fallback(g, lists, state, trace, budget):
    from ..oracle import brute_force_choose

    state.fallback_used = True
    state.trace.append({"step": "fallback-brute-force"})
    try:
        res = brute_force_choose(g, tuple(trim(x, 7) for x in lists), 2, budget)
    except BudgetExceeded:
        raise state.gap("stalled and brute-force fallback exceeded its budget")
    if res.witness is None:
        raise state.gap("stalled and brute-force fallback found no coloring")
    return res.witness
