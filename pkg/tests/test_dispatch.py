import pytest

from edgechoose.chooser import choose_72, plan_route
from edgechoose.colors import make_uniform_assignment, verify_set_coloring
from edgechoose.errors import Unsupported
from edgechoose.graph import Graph, generate_complete, generate_gstar, generate_petersen


@pytest.mark.parametrize("make,method", [
    (lambda: generate_complete(4), "3ec"),
    (generate_petersen, "med"),
    (generate_gstar, "gstar"),
])
def test_routes(make, method):
    g = make()
    route = plan_route(g)
    assert route.method == method
    lists = make_uniform_assignment(g, 7, 14, seed=2)
    res = choose_72(g, lists, route)
    assert res.method == method
    assert verify_set_coloring(g, lists, res.coloring, 2) == []
    assert res.trace


def test_unsupported_subcubic_class_two():
    # Petersen minus a vertex: not 3-regular and not 3-edge-colorable
    p = generate_petersen()
    edges = [(u - (u > 0), v - (v > 0)) for u, v in p.edges if 0 not in (u, v)]
    g = Graph(9, edges)
    with pytest.raises(Unsupported):
        plan_route(g)


def test_degree_four_unsupported():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)], max_degree=None)
    with pytest.raises(Unsupported):
        plan_route(g)


def test_short_lists_rejected():
    g = generate_complete(4)
    with pytest.raises(ValueError):
        choose_72(g, [frozenset(range(6))] * g.m)
