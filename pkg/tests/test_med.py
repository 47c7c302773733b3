import networkx as nx
import pytest

from edgechoose.chooser import choose_med
from edgechoose.colors import make_uniform_assignment, save_margin, verify_set_coloring
from edgechoose.decomposition import MedDecomposition, find_med_by_long_cycle, find_med_exhaustive
from edgechoose.errors import BudgetExceeded
from edgechoose.graph import Graph, generate_flower_snark, generate_petersen


@pytest.fixture(scope="module")
def petersen():
    g = generate_petersen()
    return g, find_med_by_long_cycle(g)


def steps(trace, name):
    return [t for t in trace if t.get("step") == name]


def test_identical_lists_take_case_one(petersen):
    g, med = petersen
    lists = [frozenset(range(7))] * g.m
    trace = []
    phi = choose_med(g, med, lists, trace)
    assert verify_set_coloring(g, lists, phi, 2) == []
    assert steps(trace, "case1") and not steps(trace, "case2")


def test_generic_lists_save_everywhere(petersen):
    g, med = petersen
    lists = make_uniform_assignment(g, 7, 14, seed=0)
    trace = []
    phi = choose_med(g, med, lists, trace)
    assert verify_set_coloring(g, lists, phi, 2) == []
    assert len(steps(trace, "save")) == 8 and not steps(trace, "sponsor")


def test_needy_edge_gets_sponsor(petersen):
    # frozen instance where the H sponsor must save on the center edge too
    g, med = petersen
    lists = make_uniform_assignment(g, 7, 8, seed=401)
    trace = []
    phi = choose_med(g, med, lists, trace)
    assert verify_set_coloring(g, lists, phi, 2) == []
    (sp,) = steps(trace, "sponsor")
    assert (sp["a"], sp["b"], sp["center"], sp["rule"]) == (12, 4, 0, "center-save")
    assert steps(trace, "complete-star")[0]["sponsors"] == [4]


@pytest.mark.parametrize("k", [5, 7])
def test_flower_short_fuzz(k):
    g = generate_flower_snark(k)
    med = find_med_by_long_cycle(g)
    for seed in range(200):
        for palette in (8, 14):
            lists = make_uniform_assignment(g, 7, palette, seed)
            phi = choose_med(g, med, lists)
            assert verify_set_coloring(g, lists, phi, 2) == []


def test_multi_cycle_meds_on_random_cubic_graphs():
    # exhaustive MEDs here often have several cycles, which drives the cycle-to-cycle steps
    bridged = 0
    for seed in range(40):
        n = (10, 12, 14, 16)[seed % 4]
        g = Graph(n, nx.random_regular_graph(3, n, seed=seed).edges())
        try:
            med = find_med_exhaustive(g, budget=50_000)
        except BudgetExceeded:
            continue
        if med is None:
            continue
        for t in range(30):
            lists = make_uniform_assignment(g, 7, (8, 10, 14)[t % 3], 1000 * seed + t)
            trace = []
            phi = choose_med(g, med, lists, trace)
            assert verify_set_coloring(g, lists, phi, 2) == []
            bridged += len(steps(trace, "g1-bridge"))
    assert bridged > 0


def test_deterministic(petersen):
    g, med = petersen
    lists = make_uniform_assignment(g, 7, 14, seed=5)
    assert choose_med(g, med, lists) == choose_med(g, med, lists)


def test_rejects_bad_input(petersen):
    g, med = petersen
    with pytest.raises(ValueError):
        choose_med(g, med, [frozenset(range(6))] * g.m)
    broken = MedDecomposition(med.g1[:1], med.g2, med.g3)
    with pytest.raises(ValueError):
        choose_med(g, broken, [frozenset(range(7))] * g.m)
