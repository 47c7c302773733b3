import pytest

from edgechoose.chooser import choose_gstar
from edgechoose.colors import make_uniform_assignment, verify_set_coloring
from edgechoose.graph import generate_gstar, generate_petersen, gstar_copies


def adversarial_lists():
    """Lists that rule out the forced branches in the third copy."""
    g = generate_gstar()
    cp3 = gstar_copies(g)[2]
    lists = [frozenset(range(7))] * g.m
    lists[cp3.a] = frozenset(range(7, 14))
    for e in (cp3.b1, cp3.b2, cp3.d):
        lists[e] = frozenset({0, 1, 2, 3, 4, 7, 8})
    return g, lists


def test_identical_lists():
    g = generate_gstar()
    lists = [frozenset(range(7))] * g.m
    trace = []
    phi = choose_gstar(lists, trace=trace)
    assert verify_set_coloring(g, lists, phi, 2) == []
    assert [t["rule"] for t in trace if t["step"] in ("copy1", "copy2")] == ["identical", "identical"]


def test_shared_color_branch():
    g, lists = adversarial_lists()
    trace = []
    phi = choose_gstar(lists, trace=trace)
    assert verify_set_coloring(g, lists, phi, 2) == []
    (third,) = [t for t in trace if t["step"] == "copy3"]
    assert third["case"] == "B"
    assert (third["c"], third["c2"]) == (7, 8)
    assert third["overlap"] >= 3


def test_short_fuzz():
    g = generate_gstar()
    for seed in range(500):
        for palette in (8, 14):
            lists = make_uniform_assignment(g, 7, palette, seed)
            phi = choose_gstar(lists)
            assert verify_set_coloring(g, lists, phi, 2) == []


def test_rejects_other_graphs():
    g = generate_petersen()
    with pytest.raises(ValueError):
        choose_gstar([frozenset(range(7))] * g.m, g)
    with pytest.raises(ValueError):
        choose_gstar([frozenset(range(6))] * 24)


def test_deterministic():
    lists = make_uniform_assignment(generate_gstar(), 7, 14, seed=9)
    assert choose_gstar(lists) == choose_gstar(lists)
