"""Simple graphs of maximum degree three, named generators and graph6 I/O.

Vertices are ``0..n-1``. Edges are stored as ``(u, v)`` with ``u < v`` and
sorted lexicographically; an edge id is its position in that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Graph6Error, GraphError

INF = float("inf")


class Graph:
    """Immutable simple graph with a canonical edge order."""

    __slots__ = ("n", "edges", "vertex_edges", "_index", "_incident")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], max_degree: int | None = 3):
        if n < 0:
            raise GraphError("negative vertex count")
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise GraphError(f"parallel edge {e}")
            norm.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self._index = {e: i for i, e in enumerate(self.edges)}
        at: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            at[u].append(i)
            at[v].append(i)
        if max_degree is not None:
            for v, es in enumerate(at):
                if len(es) > max_degree:
                    raise GraphError(f"vertex {v} has degree {len(es)} > {max_degree}")
        self.vertex_edges: tuple[tuple[int, ...], ...] = tuple(tuple(es) for es in at)
        self._incident = tuple(
            tuple(sorted({f for w in e for f in at[w]} - {i}))
            for i, e in enumerate(self.edges)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.vertex_edges[v])

    def degrees(self) -> list[int]:
        return [len(es) for es in self.vertex_edges]

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.vertex_edges[v]]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not on edge {e}")

    def common_vertex(self, e: int, f: int) -> int | None:
        a = set(self.edges[e])
        shared = a.intersection(self.edges[f])
        if e == f or not shared:
            return None
        return shared.pop()

    def incident_edges(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.m:
            raise IndexError(f"invalid edge id {e}")
        return self._incident[e]

    def is_cubic(self) -> bool:
        return all(len(es) == 3 for es in self.vertex_edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CycleTrail:
    """A closed trail given by its edges in cyclic order.

    ``vertices[i]`` is the vertex shared by ``edges[i]`` and ``edges[i+1]``
    (indices mod ``k``).
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.edges)

    @classmethod
    def from_vertices(cls, g: Graph, cycle: Sequence[int]) -> "CycleTrail":
        """Build from a vertex sequence ``v0 v1 ... v_{k-1}`` (closing edge implied)."""
        k = len(cycle)
        edges = tuple(g.edge_id(cycle[i], cycle[(i + 1) % k]) for i in range(k))
        verts = tuple(cycle[(i + 1) % k] for i in range(k))
        return cls(edges, verts)

    def check(self, g: Graph) -> None:
        k = len(self.edges)
        if k < 3 or len(self.vertices) != k or len(set(self.edges)) != k:
            raise GraphError("trail must have >= 3 distinct edges")
        for i in range(k):
            x = self.vertices[i]
            if x not in g.edges[self.edges[i]] or x not in g.edges[self.edges[(i + 1) % k]]:
                raise GraphError(f"edges {self.edges[i]} and {self.edges[(i + 1) % k]} do not meet at {x}")


def incident_edges(g: Graph, e: int) -> list[int]:
    return list(g.incident_edges(e))


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error("negative n")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error("n too large for graph6")


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str, max_degree: int | None = 3) -> Graph:
    """Decode one graph6 line.

    ``max_degree=None`` disables the degree check.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] == ":" or s[0] == "&":
        raise Graph6Error("sparse6/digraph6 are not supported")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error("character outside graph6 range")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            if len(data) < 8:
                raise Graph6Error("truncated long-form header")
            n = 0
            for d in data[2:8]:
                n = (n << 6) | d
            body = data[8:]
        else:
            if len(data) < 4:
                raise Graph6Error("truncated long-form header")
            n = (data[1] << 12) | (data[2] << 6) | data[3]
            body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for d in body:
        bits.extend((d >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges, max_degree=max_degree)


def read_graph6_lines(text: str, max_degree: int | None = 3) -> list[Graph]:
    return [parse_graph6(line, max_degree) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# generators


def generate_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return Graph(10, outer + spokes + inner)


def flower_labels(k: int) -> dict[str, list[int]]:
    """Vertex ids of ``w_i, x_i, y_i, z_i`` (list index ``i-1``) in ``F_k``."""
    return {name: [off * k + i for i in range(k)] for off, name in enumerate("wxyz")}


def generate_flower_snark(k: int) -> Graph:
    if k < 5 or k % 2 == 0:
        raise ValueError(f"flower snark needs odd k >= 5, got {k}")
    lab = flower_labels(k)
    w, x, y, z = lab["w"], lab["x"], lab["y"], lab["z"]
    edges = [(z[i], z[(i + 1) % k]) for i in range(k)]
    rim = x + y
    edges += [(rim[i], rim[(i + 1) % (2 * k)]) for i in range(2 * k)]
    for i in range(k):
        edges += [(w[i], x[i]), (w[i], y[i]), (w[i], z[i])]
    return Graph(4 * k, edges)


def flower_long_cycle(k: int) -> list[int]:
    """The ``4k-2`` cycle of ``F_k`` omitting ``x_k`` and ``y_1``, as vertex ids."""
    lab = flower_labels(k)
    w, x, y, z = lab["w"], lab["x"], lab["y"], lab["z"]
    seq = [x[0]]
    for i in range(2, k):
        if i % 2 == 0:
            seq += [x[i - 1], w[i - 1], y[i - 1]]
        else:
            seq += [y[i - 1], w[i - 1], x[i - 1]]
    seq += [y[k - 1], w[k - 1]]
    seq += [z[i] for i in range(k - 1, -1, -1)]
    seq.append(w[0])
    return seq


@dataclass(frozen=True)
class GStarCopy:
    """Edge ids of one pendant copy ``H'`` inside ``G*``.

    ``a`` joins the copy to the hub, ``b1``/``b2`` meet ``a``, ``d`` meets
    neither, and ``c`` is the remaining 4-cycle in order with ``c[0]``, ``c[1]``
    meeting ``b1`` and ``c[2]``, ``c[3]`` meeting ``b2``.
    """

    a: int
    b1: int
    b2: int
    d: int
    c: tuple[int, int, int, int]


GSTAR_HUB = 15


def _gstar_vertices(i: int):
    # p, q: ends of the subdivided K4 edge; r, s: the other two; t: subdivision vertex
    base = 5 * i
    return base, base + 1, base + 2, base + 3, base + 4


def generate_gstar() -> Graph:
    edges = []
    for i in range(3):
        p, q, r, s, t = _gstar_vertices(i)
        edges += [(t, p), (t, q), (p, r), (p, s), (q, r), (q, s), (r, s), (t, GSTAR_HUB)]
    return Graph(16, edges)


def gstar_copies(g: Graph | None = None) -> list[GStarCopy]:
    g = g or generate_gstar()
    out = []
    for i in range(3):
        p, q, r, s, t = _gstar_vertices(i)
        e = g.edge_id
        out.append(GStarCopy(
            a=e(t, GSTAR_HUB), b1=e(t, p), b2=e(t, q), d=e(r, s),
            c=(e(s, p), e(p, r), e(r, q), e(q, s)),
        ))
    return out


def generate_two_k4_gadget() -> Graph:
    edges = []
    for base in (0, 5):
        a, b, c, d, mid = base, base + 1, base + 2, base + 3, base + 4
        edges += [(a, mid), (mid, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
    edges.append((4, 9))
    return Graph(10, edges)


def generate_even_cycle(length: int) -> Graph:
    if length < 4 or length % 2:
        raise ValueError(f"even cycle length must be even and >= 4, got {length}")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def generate_complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def generate_prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def generate_k33() -> Graph:
    return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def generate_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


NAMED = {
    "petersen": generate_petersen,
    "gstar": generate_gstar,
    "two_k4": generate_two_k4_gadget,
    "k4": lambda: generate_complete(4),
    "k2": lambda: generate_complete(2),
    "prism": generate_prism,
    "k33": generate_k33,
}


def generate_named(text: str) -> Graph:
    """Resolve ``petersen``, ``flower:7``, ``cycle:6`` and friends."""
    name, _, arg = text.partition(":")
    if name == "flower":
        return generate_flower_snark(int(arg))
    if name == "cycle":
        return generate_even_cycle(int(arg))
    if name == "path":
        return generate_path(int(arg))
    if name not in NAMED or arg:
        raise ValueError(f"unknown graph name {text!r}")
    return NAMED[name]()


# ---------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class StructureReport:
    is_cubic: bool
    is_subcubic: bool
    is_connected: bool
    is_2_connected: bool
    girth: float


def _components(n: int, adj, removed_vertex=None, removed_edge=None) -> int:
    seen = [False] * n
    if removed_vertex is not None:
        seen[removed_vertex] = True
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w, e in adj[u]:
                if e != removed_edge and not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def _adjacency(g: Graph):
    return [[(g.other(e, v), e) for e in g.vertex_edges[v]] for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or _components(g.n, _adjacency(g)) == 1


def articulation_points(g: Graph) -> list[int]:
    # removal test per vertex; graphs here are desk-sized
    adj = _adjacency(g)
    base = _components(g.n, adj)
    return [v for v in range(g.n) if _components(g.n, adj, removed_vertex=v) > base - (g.degree(v) == 0)]


def bridges(g: Graph) -> list[int]:
    adj = _adjacency(g)
    base = _components(g.n, adj)
    return [e for e in range(g.m) if _components(g.n, adj, removed_edge=e) > base]


def girth(g: Graph) -> float:
    best = INF
    adj = _adjacency(g)
    for root in range(g.n):
        dist = {root: 0}
        via = {root: None}
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w, e in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    via[w] = e
                    q.append(w)
                elif e != via[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def structure_checks(g: Graph) -> StructureReport:
    connected = is_connected(g)
    two_conn = connected and g.n >= 3 and not articulation_points(g)
    return StructureReport(
        is_cubic=g.n > 0 and g.is_cubic(),
        is_subcubic=all(d <= 3 for d in g.degrees()),
        is_connected=connected,
        is_2_connected=two_conn,
        girth=girth(g),
    )
