"""2-set coloring from 7-lists on ``G*``, three pendant ``K4``-like copies joined at a hub.

Each copy ``H'`` is first given one color on ``b1`` and ``b2`` and two on ``d``
so every edge of its 4-cycle saves a color. The hub edges are then coordinated
across the copies, and the 4-cycles are finished as even cycles.
"""

from __future__ import annotations

from itertools import combinations

from ..colors import SetColoring, remaining_list, save_margin, trim, verify_set_coloring
from ..errors import ContractGap
from ..graph import CycleTrail, GStarCopy, Graph, generate_gstar, gstar_copies
from .lemma import even_cycle_choose


class _Run:
    def __init__(self, g: Graph, lists, trace):
        self.g = g
        self.lists = tuple(trim(x, 7) for x in lists)
        self.phi = [set() for _ in range(g.m)]
        self.trace = trace if trace is not None else []

    def rem(self, e):
        return remaining_list(self.g, self.lists, self.phi, e)

    def saved(self, e):
        return save_margin(self.g, self.lists, self.phi, e) >= 1

    def put(self, e, c):
        if c not in self.rem(e):
            raise self.gap(f"color {c} unavailable on edge {e}")
        self.phi[e].add(c)

    def gap(self, msg):
        return ContractGap(msg, self.trace)

    def log(self, **kw):
        self.trace.append(kw)


def _walk_orders(cp: GStarCopy):
    """Cycle-edge / connector sequences for every start and direction around ``c``."""
    c = cp.c
    between = (cp.b1, cp.d, cp.b2, cp.d)  # edge at the vertex after c[i]
    for j in range(4):
        yield [c[(j + t) % 4] for t in range(4)], [between[(j + t) % 4] for t in range(4)]
        yield [c[(j - t) % 4] for t in range(4)], [between[(j - t - 1) % 4] for t in range(4)]


def _walk_dfs(run: _Run, a_seq, b_seq, i, forced, accept):
    if i == 4:
        return accept()
    a, b = a_seq[i], b_seq[i]
    cands = sorted(run.rem(b))
    if b in forced and not run.phi[b]:
        cands = [forced[b]] if forced[b] in cands else []
    for x in cands:
        run.phi[b].add(x)
        if run.saved(a) and _walk_dfs(run, a_seq, b_seq, i + 1, forced, accept):
            return True
        run.phi[b].discard(x)
    return False


def copy_partial(run: _Run, cp: GStarCopy, forced=None, accept=None, allow_shortcut=True) -> str:
    """One color on ``b1`` and ``b2``, two on ``d``, saving on all of ``c``.

    Returns which rule produced the coloring.
    """
    forced = forced or {}
    accept = accept or (lambda: True)
    core = [cp.b1, cp.b2, cp.d, *cp.c]
    if allow_shortcut and not forced and len({run.lists[e] for e in core}) == 1:
        x, y = sorted(run.lists[cp.b1])[:2]
        run.phi[cp.b1].add(x)
        run.phi[cp.b2].add(y)
        run.phi[cp.d].update((x, y))
        if accept():
            return "identical"
        for e in (cp.b1, cp.b2, cp.d):
            run.phi[e].clear()
    for a_seq, b_seq in _walk_orders(cp):
        if _walk_dfs(run, a_seq, b_seq, 0, forced, accept):
            return f"walk from {a_seq[0]} via {b_seq[0]}"
    # exhaustive over the copy's 7 * 7 * 21 partial choices
    for x in sorted(run.rem(cp.b1)):
        if cp.b1 in forced and x != forced[cp.b1]:
            continue
        run.phi[cp.b1].add(x)
        for y in sorted(run.rem(cp.b2)):
            if cp.b2 in forced and y != forced[cp.b2]:
                continue
            run.phi[cp.b2].add(y)
            for pair in combinations(sorted(run.rem(cp.d)), 2):
                if cp.d in forced and forced[cp.d] not in pair:
                    continue
                run.phi[cp.d].update(pair)
                if all(run.saved(e) for e in cp.c) and accept():
                    return "exhaustive"
                run.phi[cp.d].clear()
            run.phi[cp.b2].clear()
        run.phi[cp.b1].clear()
    raise run.gap(f"no partial coloring of copy with a={cp.a} saves on its 4-cycle")


def choose_gstar(lists, g: Graph | None = None, trace: list | None = None) -> SetColoring:
    """Constructive 2-set coloring of ``G*`` from lists of size at least 7."""
    g = g or generate_gstar()
    if g != generate_gstar():
        raise ValueError("graph is not the canonical G*")
    if len(lists) != g.m or any(len(x) < 7 for x in lists):
        raise ValueError("need a list of at least 7 colors on each of the 24 edges")
    run = _Run(g, lists, trace)
    cp1, cp2, cp3 = gstar_copies(g)

    rule = copy_partial(run, cp1)
    run.put(cp1.b2, min(run.rem(cp1.b2)))
    run.log(step="copy1", rule=rule)

    rule = copy_partial(run, cp2)
    run.log(step="copy2", rule=rule)
    # hub coordination: alpha on a1 and the second color beta on copy 2's b2 save on a2
    pick = None
    for alpha in sorted(run.rem(cp1.a)):
        for beta in sorted(run.rem(cp2.b2)):
            run.phi[cp1.a].add(alpha)
            run.phi[cp2.b2].add(beta)
            ok = run.saved(cp2.a)
            run.phi[cp1.a].discard(alpha)
            run.phi[cp2.b2].discard(beta)
            if ok:
                pick = (alpha, beta)
                break
        if pick:
            break
    if pick is None:
        raise run.gap("no alpha/beta pair saves a color on a2")
    alpha, beta = pick
    run.put(cp1.a, alpha)
    run.put(cp2.b2, beta)
    run.log(step="hub", alpha=alpha, beta=beta)

    left_a2 = run.rem(cp2.a)
    left_a1 = run.rem(cp1.a)
    if len(left_a2) < 4 or len(left_a1) < 3:
        raise run.gap(f"hub lists too small: a1 {len(left_a1)}, a2 {len(left_a2)}")
    avoid = trim(left_a2, 4) | {alpha}
    wanted = sorted(run.lists[cp3.a] - avoid)
    if len(wanted) < 2:
        raise run.gap("fewer than two desirable colors on a3")
    c, c2 = wanted[:2]
    _third_copy(run, cp3, c, c2)

    first = c if c not in run.phi[cp3.b1] | run.phi[cp3.b2] else c2
    if first in run.phi[cp3.b1] | run.phi[cp3.b2]:
        raise run.gap("both desirable colors blocked at a3")
    run.put(cp3.a, first)
    run.put(cp3.a, min(run.rem(cp3.a)))
    run.put(cp3.b1, min(run.rem(cp3.b1)))
    run.put(cp1.a, min(run.rem(cp1.a)))
    for _ in range(2):
        run.put(cp2.a, min(run.rem(cp2.a)))
    run.put(cp1.b1, min(run.rem(cp1.b1)))
    run.put(cp2.b1, min(run.rem(cp2.b1)))
    for cp in (cp1, cp2, cp3):
        cyc = CycleTrail(cp.c, tuple(g.common_vertex(cp.c[i], cp.c[(i + 1) % 4]) for i in range(4)))
        rl = {e: run.rem(e) for e in cp.c}
        short = [e for e, x in rl.items() if len(x) < 4]
        if short:
            raise run.gap(f"4-cycle edges {short} keep fewer than 4 colors")
        for e, cs in even_cycle_choose(cyc, rl, 2).items():
            for x in sorted(cs):
                run.put(e, x)
    out = SetColoring(tuple(frozenset(x) for x in run.phi), 2)
    bad = verify_set_coloring(g, lists, out, 2)
    if bad:
        raise run.gap(f"output failed verification: {bad[:3]}")
    return out


def _third_copy(run: _Run, cp: GStarCopy, c: int, c2: int) -> None:
    """Color ``b1``, ``b2`` (two colors) and ``d`` so ``c`` or ``c2`` stays free for ``a``."""
    L = run.lists
    pair = {c, c2}
    base = {e: L[e] - pair for e in (cp.b1, cp.b2, cp.d)}
    near_b1 = L[cp.c[0]] & L[cp.c[1]]
    near_b2 = L[cp.c[2]] & L[cp.c[3]]

    def accept():
        return not pair <= (run.phi[cp.b1] | run.phi[cp.b2])

    def finish_b2():
        pool = run.rem(cp.b2) - pair
        if not pool:
            return False
        run.phi[cp.b2].add(min(pool))
        return True

    def attempt(forced, label):
        snapshot = [set(x) for x in run.phi]
        try:
            rule = copy_partial(run, cp, forced, accept, allow_shortcut=False)
        except ContractGap:
            run.phi[:] = snapshot
            return False
        if finish_b2():
            run.log(step="copy3", case=label, rule=rule, forced=forced, c=c, c2=c2)
            return True
        run.phi[:] = snapshot
        return False

    for beta in sorted(base[cp.b1] - near_b1):
        if attempt({cp.b1: beta}, "A-b1"):
            return
    for beta in sorted(base[cp.b2] - near_b2):
        if attempt({cp.b2: beta}, "A-b2"):
            return
    for delta in sorted((base[cp.d] - near_b1) | (base[cp.d] - near_b2)):
        if attempt({cp.d: delta}, "A-d"):
            return
    both1 = base[cp.b1] & base[cp.d]
    both2 = base[cp.b2] & base[cp.d]
    if len(both1) >= 3 and len(both2) >= 3:
        x = min(both1)
        rest = sorted(both2 - {x})
        y = rest[0]
        run.put(cp.b1, x)
        run.put(cp.b2, y)
        run.put(cp.d, x)
        run.put(cp.d, y)
        if all(run.saved(e) for e in cp.c) and finish_b2():
            run.log(step="copy3", case="B", alpha=x, beta=y, c=c, c2=c2,
                    overlap=len(both1))
            return
        raise run.gap("shared-color branch did not save on the 4-cycle")
    if attempt({}, "fallback"):
        return
    raise run.gap(f"copy 3: no case applies (overlaps {len(both1)}, {len(both2)})")
