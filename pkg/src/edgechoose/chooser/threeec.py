"""2-set coloring from 7-lists on graphs with a proper 3-edge-coloring."""

from __future__ import annotations

from ..colors import SetColoring, remaining_list, trim, verify_set_coloring
from ..decomposition import ThreeEdgeColoring, check_3ec, cubic_completion, cycles_of_matching_union
from ..errors import ContractGap
from ..graph import Graph
from .lemma import key_lemma_positions, even_cycle_choose


def choose_3ec(g: Graph, tec: ThreeEdgeColoring, lists, trace: list | None = None) -> SetColoring:
    """Three phases over the color classes ``J``, ``K``, ``L``.

    Non-cubic inputs are embedded in their cubic completion first; extra edges
    get the list ``{0..6}`` and their colors are dropped afterwards.
    """
    if not check_3ec(g, tec):
        raise ValueError("not a proper 3-edge-coloring")
    if any(len(x) < 7 for x in lists):
        raise ValueError("every list needs at least 7 colors")
    if g.m and not g.is_cubic():
        comp = cubic_completion(g, tec)
        big_lists = [frozenset(range(7))] * comp.graph.m
        for e, f in enumerate(comp.edge_map):
            big_lists[f] = lists[e]
        if trace is not None:
            trace.append({"step": "cubic-completion", "copies": comp.copies, "n": comp.graph.n})
        big = choose_3ec(comp.graph, comp.coloring, tuple(big_lists), trace)
        phi = SetColoring(tuple(big.chosen[f] for f in comp.edge_map), 2)
        _final_check(g, lists, phi, trace)
        return phi

    L = tuple(trim(x, 7) for x in lists)
    J, K, Lc = tec.classes
    phi = [set() for _ in range(g.m)]

    def rem(e):
        return remaining_list(g, L, phi, e)

    def run_phase(b_class, size, label):
        cycles, paths = cycles_of_matching_union(g, J, b_class)
        if paths:
            raise ContractGap(f"{label}: J and its partner class are not perfect matchings", trace)
        for cyc in cycles:
            a_edges, b_edges = cyc.edges[0::2], cyc.edges[1::2]
            a_l = [trim(rem(e), size) for e in a_edges]
            b_l = [trim(rem(e), size) for e in b_edges]
            if any(len(x) < size for x in a_l + b_l):
                raise ContractGap(f"{label}: list below {size} on cycle {cyc.edges}", trace)
            picks = key_lemma_positions(a_l, b_l)
            for e, c in zip(a_edges, picks):
                phi[e].add(c)
            if trace is not None:
                trace.append({"step": label, "cycle": list(cyc.edges), "picks": picks})

    run_phase(K, 7, "phase1")
    for e in J | K:
        if len(rem(e)) < 6:
            raise ContractGap(f"after phase 1 edge {e} has {len(rem(e))} < 6 colors", trace)
    for e in Lc:
        if len(rem(e)) < 5:
            raise ContractGap(f"after phase 1 edge {e} has {len(rem(e))} < 5 colors", trace)

    run_phase(Lc, 5, "phase2")
    for e in K | Lc:
        if len(rem(e)) < 4:
            raise ContractGap(f"after phase 2 edge {e} has {len(rem(e))} < 4 colors", trace)

    cycles, _ = cycles_of_matching_union(g, K, Lc)
    for cyc in cycles:
        got = even_cycle_choose(cyc, {e: rem(e) for e in cyc.edges}, 2)
        for e, cs in got.items():
            phi[e].update(cs)
    out = SetColoring(tuple(frozenset(c) for c in phi), 2)
    _final_check(g, lists, out, trace)
    return out


def _final_check(g, lists, phi, trace):
    bad = verify_set_coloring(g, lists, phi, 2)
    if bad:
        raise ContractGap(f"output failed verification: {bad[:3]}", trace)
