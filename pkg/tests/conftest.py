import random

from hypothesis import strategies as st

from edgechoose.graph import Graph


def random_subcubic(n: int, tries: int, seed: int) -> Graph:
    rng = random.Random(seed)
    deg = [0] * n
    edges = set()
    for _ in range(tries):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or deg[u] == 3 or deg[v] == 3:
            continue
        e = (min(u, v), max(u, v))
        if e in edges:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph(n, edges)


@st.composite
def subcubic_graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    tries = draw(st.integers(min_value=0, max_value=3 * n))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    return random_subcubic(n, tries, seed)
