"""Proper 3-edge-colorings, MED decompositions and the cubic completion.

A MED decomposition splits the edges into a matching ``G1``, vertex-disjoint
even cycles ``G2`` and independent double-stars ``G3``. ``H`` is ``G3`` with
the center edges removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, GraphError
from .graph import CycleTrail, Graph


@dataclass(frozen=True)
class ThreeEdgeColoring:
    classes: tuple[frozenset[int], frozenset[int], frozenset[int]]

    @property
    def j(self):
        return self.classes[0]

    @property
    def k(self):
        return self.classes[1]

    @property
    def l(self):
        return self.classes[2]

    def color_of(self, e: int) -> int:
        for i, cls in enumerate(self.classes):
            if e in cls:
                return i
        raise KeyError(e)


@dataclass(frozen=True)
class DoubleStar:
    """Center edge plus four leaf edges; ``leaves[:2]`` meet the center's lower endpoint."""

    center: int
    leaves: tuple[int, int, int, int]

    @property
    def edges(self) -> tuple[int, ...]:
        return (self.center,) + self.leaves


@dataclass(frozen=True)
class MedDecomposition:
    g1: tuple[int, ...]
    g2: tuple[CycleTrail, ...]
    g3: tuple[DoubleStar, ...]

    @property
    def h(self) -> frozenset[int]:
        return frozenset(f for star in self.g3 for f in star.leaves)

    @property
    def centers(self) -> frozenset[int]:
        return frozenset(star.center for star in self.g3)

    def g2_edges(self) -> frozenset[int]:
        return frozenset(e for c in self.g2 for e in c.edges)

    def to_json(self) -> dict:
        return {
            "G1": list(self.g1),
            "G2": [list(c.edges) for c in self.g2],
            "G3": [{"center": s.center, "leaves": list(s.leaves)} for s in self.g3],
        }

    @classmethod
    def from_json(cls, g: Graph, data: dict) -> "MedDecomposition":
        cycles = tuple(trail_from_edges(g, es) for es in data["G2"])
        stars = tuple(make_double_star(g, s["center"], s["leaves"]) for s in data["G3"])
        return cls(tuple(sorted(data["G1"])), cycles, stars)


def trail_from_edges(g: Graph, edges: Sequence[int]) -> CycleTrail:
    """Cycle trail from edges listed in cyclic order."""
    k = len(edges)
    verts = []
    for i in range(k):
        x = g.common_vertex(edges[i], edges[(i + 1) % k])
        if x is None:
            raise GraphError(f"edges {edges[i]} and {edges[(i + 1) % k]} are not consecutive")
        verts.append(x)
    trail = CycleTrail(tuple(edges), tuple(verts))
    trail.check(g)
    return trail


def make_double_star(g: Graph, center: int, leaves: Iterable[int]) -> DoubleStar:
    x, y = g.edges[center]
    leaves = list(leaves)
    at_x = sorted(f for f in leaves if x in g.edges[f])
    at_y = sorted(f for f in leaves if y in g.edges[f])
    if len(leaves) != 4 or len(at_x) != 2 or len(at_y) != 2 or set(at_x) & set(at_y):
        raise GraphError(f"leaves {leaves} do not form a double-star around edge {center}")
    return DoubleStar(center, (at_x[0], at_x[1], at_y[0], at_y[1]))


# ---------------------------------------------------------------------------
# verification


def _is_matching(g: Graph, edges: Iterable[int]) -> bool:
    seen = set()
    for e in edges:
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def verify_med(g: Graph, d: MedDecomposition, relaxed: bool = False) -> list[str]:
    """Check every MED condition; returns human-readable violations (empty = ok).

    ``relaxed`` accepts subcubic hosts and skips the rule that every vertex off
    the cycles lies on a center edge.
    """
    out: list[str] = []
    star_edges = [e for s in d.g3 for e in s.edges]
    cyc_edges = [e for c in d.g2 for e in c.edges]
    every = list(d.g1) + cyc_edges + star_edges
    if any(not 0 <= e < g.m for e in every):
        return ["partition: edge id out of range"]
    if len(every) != len(set(every)):
        out.append("partition: an edge is used twice")
    if set(every) != set(range(g.m)):
        out.append(f"partition: edges {sorted(set(range(g.m)) - set(every))} uncovered")
    if not relaxed and not g.is_cubic():
        out.append("host: graph is not 3-regular (use relaxed mode)")

    if not _is_matching(g, d.g1):
        out.append("matching: G1 edges share a vertex")

    cyc_vertices: list[int] = []
    for c in d.g2:
        try:
            c.check(g)
        except GraphError as exc:
            out.append(f"cycle: {exc}")
            continue
        if len(set(c.vertices)) != len(c):
            out.append(f"cycle: trail {c.edges} repeats a vertex")
        if len(c) % 2:
            out.append(f"parity: cycle {c.edges} has odd length {len(c)}")
        cyc_vertices.extend(c.vertices)
    if len(cyc_vertices) != len(set(cyc_vertices)):
        out.append("cycle: G2 cycles share a vertex")

    star_vertices: list[int] = []
    centers: set[int] = set()
    leaves: list[int] = []
    for s in d.g3:
        x, y = g.edges[s.center]
        ends = []
        for f, hub in zip(s.leaves, (x, x, y, y)):
            if hub not in g.edges[f] or f == s.center:
                out.append(f"star: leaf edge {f} does not meet center end {hub}")
                break
            ends.append(g.other(f, hub))
        else:
            if len(set(ends) | {x, y}) != 6:
                out.append(f"star: double-star at {s.center} is not a 6-vertex tree")
            leaves.extend(ends)
            centers.update((x, y))
            star_vertices.extend(ends + [x, y])
    if len(star_vertices) != len(set(star_vertices)):
        out.append("star: double-stars share a vertex")
    leaf_set = set(leaves)
    for u, v in g.edges:
        if u in leaf_set and v in leaf_set:
            out.append(f"independence: leaves {u} and {v} are adjacent")
    g1_vertices = {x for e in d.g1 for x in g.edges[e]}
    if g1_vertices & set(star_vertices):
        out.append("disjoint: a vertex lies in both G1 and G3")
    if not relaxed:
        on_cycle = set(cyc_vertices)
        for v in range(g.n):
            if v not in on_cycle and v not in centers:
                out.append(f"cover: vertex {v} is neither on a cycle nor a center")
    return out


# ---------------------------------------------------------------------------
# 3-edge-coloring


def find_proper_3ec(g: Graph) -> ThreeEdgeColoring | None:
    """Backtracking search; most-constrained edge first, lowest id on ties, colors ascending."""
    m = g.m
    color = [-1] * m
    inc = [g.incident_edges(e) for e in range(m)]
    if any(d > 3 for d in g.degrees()):
        return None

    def available(e):
        used = {color[f] for f in inc[e]}
        return [c for c in range(3) if c not in used]

    def pick():
        best, best_n = -1, 4
        for e in range(m):
            if color[e] < 0:
                n = len(available(e))
                if n < best_n:
                    best, best_n = e, n
                    if n == 0:
                        break
        return best

    def rec(used_max):
        e = pick()
        if e < 0:
            return True
        for c in available(e):
            # colors above used_max+1 are symmetric to used_max+1
            if c > used_max + 1:
                break
            color[e] = c
            if rec(max(used_max, c)):
                return True
        color[e] = -1
        return False

    if not rec(-1):
        return None
    classes = tuple(frozenset(e for e in range(m) if color[e] == c) for c in range(3))
    return ThreeEdgeColoring(classes)


def check_3ec(g: Graph, tec: ThreeEdgeColoring) -> bool:
    allc = [e for cls in tec.classes for e in cls]
    return (len(allc) == g.m and set(allc) == set(range(g.m))
            and all(_is_matching(g, cls) for cls in tec.classes))


@dataclass(frozen=True)
class CubicCompletion:
    graph: Graph
    edge_map: tuple[int, ...]  # original edge id -> edge id in the completed graph
    coloring: ThreeEdgeColoring | None
    copies: int


def cubic_completion(g: Graph, tec: ThreeEdgeColoring | None = None) -> CubicCompletion:
    """Double the graph and join the two copies of each deficient vertex until 3-regular."""
    if any(d > 3 for d in g.degrees()):
        raise GraphError("degree > 3")
    n = g.n
    edges = list(g.edges)
    col = None if tec is None else {g.edges[e]: tec.color_of(e) for e in range(g.m)}
    copies = 1
    for _ in range(3):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if n == 0 or min(deg) == 3:
            break
        new = edges + [(u + n, v + n) for u, v in edges]
        if col is not None:
            col.update({(u + n, v + n): col[(u, v)] for u, v in edges})
        for x in range(n):
            if deg[x] < 3:
                new.append((x, x + n))
                if col is not None:
                    used = {c for e, c in col.items() if x in e and e[1] < n}
                    col[(x, x + n)] = min({0, 1, 2} - used)
        edges, n, copies = new, 2 * n, copies * 2
    big = Graph(n, edges)
    emap = tuple(big.edge_id(u, v) for u, v in g.edges)
    out_tec = None
    if col is not None:
        cls = [set(), set(), set()]
        for e, c in col.items():
            cls[c].add(big.edge_id(*e))
        out_tec = ThreeEdgeColoring(tuple(frozenset(c) for c in cls))
    return CubicCompletion(big, emap, out_tec, copies)


def cycles_of_matching_union(g: Graph, m1: Iterable[int], m2: Iterable[int]):
    """Components of ``M1 ∪ M2``: ``(cycles, paths)``.

    Cycles are trails starting at their lowest-id ``M1`` edge, so ``M1`` edges sit at
    even positions. Paths are edge lists.
    """
    m1, m2 = set(m1), set(m2)
    if m1 & m2:
        raise ValueError("matchings are not disjoint")
    if not _is_matching(g, m1) or not _is_matching(g, m2):
        raise ValueError("input is not a matching")
    union = m1 | m2
    at: dict[int, list[int]] = {}
    for e in union:
        for x in g.edges[e]:
            at.setdefault(x, []).append(e)
    seen: set[int] = set()
    cycles, paths = [], []
    for e0 in sorted(union):
        if e0 in seen:
            continue
        comp = set()
        stack = [e0]
        while stack:
            e = stack.pop()
            if e in comp:
                continue
            comp.add(e)
            for x in g.edges[e]:
                stack.extend(at[x])
        seen |= comp
        ends = [x for x, es in at.items() if len(es) == 1 and es[0] in comp]
        if ends:
            start = min(ends)
            walk, x, prev = [], start, None
            while True:
                nxt = [f for f in at[x] if f != prev]
                if not nxt:
                    break
                prev = nxt[0]
                walk.append(prev)
                x = g.other(prev, x)
            paths.append(walk)
            continue
        first = min(comp & m1) if comp & m1 else min(comp)
        seq, x, cur = [first], g.edges[first][1], first
        while True:
            nxt = [f for f in at[x] if f != cur][0]
            if nxt == first:
                break
            seq.append(nxt)
            x = g.other(nxt, x)
            cur = nxt
        cycles.append(trail_from_edges(g, seq))
    return cycles, paths


# ---------------------------------------------------------------------------
# Hamiltonian cycles and the long-cycle MED heuristic


def hamiltonian_cycle(g: Graph, vertices: Iterable[int], budget: int | None = None) -> list[int] | None:
    """Hamiltonian cycle of the subgraph induced by ``vertices`` (vertex order) or None."""
    vs = sorted(set(vertices))
    if len(vs) < 3:
        return None
    inside = set(vs)
    adj = {v: sorted(w for w in g.neighbors(v) if w in inside) for v in vs}
    if any(len(a) < 2 for a in adj.values()):
        return None
    start = vs[0]
    path = [start]
    on_path = {start}
    nodes = 0

    def feasible(end):
        free = inside - on_path
        # each free vertex needs two usable neighbours
        for x in free:
            usable = sum(1 for w in adj[x] if w not in on_path or w == end or w == start)
            if usable < 2:
                return False
        # free vertices plus end must be connected, and start must touch them
        if not free:
            return True
        if not any(w in free for w in adj[start]):
            return False
        seen = {end}
        stack = [end]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in free and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(free) + 1

    def rec():
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(nodes)
        end = path[-1]
        if len(path) == len(vs):
            return start in adj[end]
        if not feasible(end):
            return False
        cand = [w for w in adj[end] if w not in on_path]
        forced = []
        for w in cand:
            usable = sum(1 for y in adj[w] if y not in on_path or y == start or y == end)
            if usable == 2:
                forced.append(w)
        if len(forced) > 1:
            return False
        for w in forced or cand:
            path.append(w)
            on_path.add(w)
            if rec():
                return True
            path.pop()
            on_path.discard(w)
        return False

    return list(path) if rec() else None


def med_from_long_cycle(g: Graph, center: int, cycle: Sequence[int]) -> MedDecomposition:
    """Double-star on ``center``, ``G2`` = the given cycle, ``G1`` = leftover edges."""
    u, w = g.edges[center]
    leaves = [f for f in g.vertex_edges[u] + g.vertex_edges[w] if f != center]
    star = make_double_star(g, center, leaves)
    trail = CycleTrail.from_vertices(g, cycle)
    used = set(trail.edges) | set(star.edges)
    g1 = tuple(e for e in range(g.m) if e not in used)
    return MedDecomposition(g1, (trail,), (star,))


def find_med_by_long_cycle(g: Graph, pairs: Iterable[int] | None = None) -> MedDecomposition | None:
    """Try each edge ``uw`` as a double-star center with a Hamiltonian cycle of ``G - {u, w}``."""
    if not g.is_cubic():
        return None
    for e in (range(g.m) if pairs is None else pairs):
        u, w = g.edges[e]
        ends = [x for x in g.neighbors(u) + g.neighbors(w) if x not in (u, w)]
        if len(set(ends)) != 4 or any(g.has_edge(a, b) for i, a in enumerate(ends) for b in ends[i + 1:]):
            continue
        cyc = hamiltonian_cycle(g, [v for v in range(g.n) if v not in (u, w)])
        if cyc is None:
            continue
        d = med_from_long_cycle(g, e, cyc)
        if not verify_med(g, d):
            return d
    return None


# ---------------------------------------------------------------------------
# exhaustive MED search

_M, _X, _L, _P = "M", "X", "L", "P"  # matching vertex, star center, star leaf, plain cycle vertex


class MedSearch:
    """Complete backtracking search for a MED decomposition.

    Each vertex gets a role: on a matching edge and a cycle (M), star center (X),
    star leaf on a cycle (L), or cycle-only (P, subcubic hosts). Roles fix every
    edge label except which M-M edges form the matching, which is enumerated
    second; cycles are then checked for even length.
    """

    def __init__(self, g: Graph, budget: int | None = None, relaxed: bool = False):
        if not relaxed and not g.is_cubic():
            raise GraphError("strict MED search needs a 3-regular graph; pass relaxed=True")
        self.g = g
        self.budget = budget
        self.relaxed = relaxed
        self.nodes = 0
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.order = self._bfs_order()
        self.role: list[str | None] = [None] * g.n

    @property
    def mode(self) -> str:
        return "relaxed" if self.relaxed else "strict"

    def _bfs_order(self) -> list[int]:
        order, seen = [], set()
        for s in range(self.g.n):
            if s in seen:
                continue
            seen.add(s)
            queue = [s]
            while queue:
                u = queue.pop(0)
                order.append(u)
                for w in sorted(self.nbrs[u]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def _roles_for(self, v: int) -> tuple[str, ...]:
        d = self.g.degree(v)
        if d == 3:
            return (_M, _X, _L)
        if d == 2:
            return (_P,)
        if d == 1:
            return (_M, _L)
        return (_P,)

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)

    def _local_ok(self, v: int) -> bool:
        r = self.role[v]
        cnt = {_M: 0, _X: 0, _L: 0, _P: 0, None: 0}
        for w in self.nbrs[v]:
            cnt[self.role[w]] += 1
        free = cnt[None]
        if r == _X:
            return cnt[_M] == cnt[_P] == 0 and cnt[_X] <= 1 and cnt[_L] <= 2
        if r == _L:
            return cnt[_L] == 0 and cnt[_X] <= 1 and cnt[_X] + free >= 1
        if r == _M:
            return cnt[_X] == 0 and cnt[_M] + free >= 1
        return cnt[_X] == 0

    def _assign(self, idx: int):
        if idx == len(self.order):
            yield from self._matchings()
            return
        v = self.order[idx]
        for r in self._roles_for(v):
            self._tick()
            self.role[v] = r
            if self._local_ok(v) and all(self._local_ok(w) for w in self.nbrs[v] if self.role[w] is not None):
                yield from self._assign(idx + 1)
        self.role[v] = None

    def _matchings(self):
        g = self.g
        ms = [v for v in range(g.n) if self.role[v] == _M]
        mate: dict[int, int] = {}

        def rec(i):
            while i < len(ms) and ms[i] in mate:
                i += 1
            if i == len(ms):
                yield dict(mate)
                return
            x = ms[i]
            for e in g.vertex_edges[x]:
                y = g.other(e, x)
                if self.role[y] == _M and y not in mate:
                    self._tick()
                    mate[x], mate[y] = e, e
                    yield from rec(i + 1)
                    del mate[x], mate[y]

        for mate_map in rec(0):
            d = self._build(set(mate_map.values()))
            if d is not None:
                yield d

    def _build(self, matching: set[int]) -> MedDecomposition | None:
        g = self.g
        role = self.role
        centers, cyc = [], []
        for e, (u, v) in enumerate(g.edges):
            if role[u] == _X and role[v] == _X:
                centers.append(e)
            elif _X in (role[u], role[v]) or e in matching:
                continue
            else:
                cyc.append(e)
        at: dict[int, list[int]] = {}
        for e in cyc:
            for x in g.edges[e]:
                at.setdefault(x, []).append(e)
        if any(len(es) != 2 for es in at.values()):
            return None
        trails, seen = [], set()
        for e0 in cyc:
            if e0 in seen:
                continue
            seq, x, cur = [e0], g.edges[e0][1], e0
            while True:
                nxt = at[x][0] if at[x][1] == cur else at[x][1]
                if nxt == e0:
                    break
                seq.append(nxt)
                x = g.other(nxt, x)
                cur = nxt
            if len(seq) % 2:
                return None
            seen.update(seq)
            trails.append(trail_from_edges(g, seq))
        stars = []
        for c in centers:
            u, v = g.edges[c]
            leaves = [f for f in g.vertex_edges[u] + g.vertex_edges[v] if f != c]
            stars.append(make_double_star(g, c, leaves))
        d = MedDecomposition(tuple(sorted(matching)), tuple(trails), tuple(stars))
        return d if not verify_med(g, d, relaxed=self.relaxed) else None

    def run(self) -> MedDecomposition | None:
        self.nodes = 0
        self.role = [None] * self.g.n
        for d in self._assign(0):
            return d
        return None


def find_med_exhaustive(g: Graph, budget: int | None = None, relaxed: bool = False) -> MedDecomposition | None:
    """Exact search; ``None`` proves nonexistence when ``budget`` is None.

    Raises ``BudgetExceeded`` when the node budget runs out.
    """
    return MedSearch(g, budget, relaxed).run()
