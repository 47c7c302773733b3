import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgechoose.chooser import choose_3ec
from edgechoose.colors import make_uniform_assignment, verify_set_coloring
from edgechoose.decomposition import ThreeEdgeColoring, find_proper_3ec
from edgechoose.graph import generate_complete, generate_k33, generate_prism

from conftest import subcubic_graphs

CUBIC = {"k4": generate_complete(4), "prism": generate_prism(), "k33": generate_k33()}


@pytest.mark.parametrize("name", sorted(CUBIC))
def test_cubic_graphs_short_fuzz(name):
    g = CUBIC[name]
    tec = find_proper_3ec(g)
    for seed in range(300):
        lists = make_uniform_assignment(g, 7, 14, seed)
        trace = []
        phi = choose_3ec(g, tec, lists, trace)
        assert verify_set_coloring(g, lists, phi, 2) == []
        assert {t["step"] for t in trace} == {"phase1", "phase2"}


def test_identical_lists():
    g = generate_k33()
    lists = [frozenset(range(7))] * g.m
    phi = choose_3ec(g, find_proper_3ec(g), lists)
    assert verify_set_coloring(g, lists, phi, 2) == []


def test_long_lists_are_trimmed():
    g = generate_prism()
    lists = make_uniform_assignment(g, 10, 20, seed=4)
    phi = choose_3ec(g, find_proper_3ec(g), lists)
    assert verify_set_coloring(g, lists, phi, 2) == []


@settings(max_examples=150, deadline=None)
@given(subcubic_graphs(max_n=10), st.integers(0, 2**32), st.sampled_from([7, 9, 14]))
def test_subcubic_class_one_graphs(g, seed, palette):
    tec = find_proper_3ec(g)
    if tec is None:
        return
    lists = make_uniform_assignment(g, 7, palette, seed)
    phi = choose_3ec(g, tec, lists)
    assert verify_set_coloring(g, lists, phi, 2) == []


def test_deterministic():
    g = generate_prism()
    tec = find_proper_3ec(g)
    lists = make_uniform_assignment(g, 7, 14, seed=11)
    assert choose_3ec(g, tec, lists) == choose_3ec(g, tec, lists)


def test_rejects_bad_input():
    g = generate_complete(4)
    tec = find_proper_3ec(g)
    with pytest.raises(ValueError):
        choose_3ec(g, tec, [frozenset(range(6))] * g.m)
    bogus = ThreeEdgeColoring((frozenset(range(6)), frozenset(), frozenset()))
    with pytest.raises(ValueError):
        choose_3ec(g, bogus, [frozenset(range(7))] * g.m)
