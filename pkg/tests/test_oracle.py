import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgechoose.chooser import choose_3ec
from edgechoose.colors import make_uniform_assignment, verify_set_coloring
from edgechoose.decomposition import find_proper_3ec
from edgechoose.errors import BudgetExceeded
from edgechoose.graph import Graph, generate_complete, generate_even_cycle, generate_two_k4_gadget
from edgechoose.oracle import (
    brute_force_choose,
    brute_force_rs_colorable,
    canonical_assignments,
    exhaustive_choosability_check,
)

from conftest import subcubic_graphs


def naive_choose(g, lists, s):
    options = [list(itertools.combinations(sorted(x), s)) for x in lists]
    for pick in itertools.product(*options):
        if not verify_set_coloring(g, lists, [set(p) for p in pick], s):
            return True
    return False


def test_gadget_not_6_2_colorable():
    assert brute_force_rs_colorable(generate_two_k4_gadget(), 6, 2).verdict == "no"


def test_gadget_8_2_colorable():
    g = generate_two_k4_gadget()
    res = brute_force_rs_colorable(g, 8, 2)
    assert res.ok
    assert verify_set_coloring(g, [frozenset(range(8))] * g.m, res.witness, 2) == []


def test_c4_colorable_with_four_colors():
    g = generate_even_cycle(4)
    res = brute_force_rs_colorable(g, 4, 2)
    assert res.ok
    assert sorted(sorted(c) for c in res.witness.chosen) == [[0, 1], [0, 1], [2, 3], [2, 3]]


def test_c4_two_colors_fail():
    g = generate_even_cycle(4)
    assert brute_force_choose(g, [frozenset({1, 2})] * 4, 2).verdict == "no"


def test_agrees_with_choose_3ec_on_k4():
    g = generate_complete(4)
    tec = find_proper_3ec(g)
    for seed in range(20):
        lists = make_uniform_assignment(g, 7, 14, seed)
        res = brute_force_choose(g, lists, 2)
        assert res.ok and choose_3ec(g, tec, lists) is not None
        assert verify_set_coloring(g, lists, res.witness, 2) == []


@settings(max_examples=150, deadline=None)
@given(
    g=subcubic_graphs(max_n=5),
    data=st.data(),
)
def test_brute_force_matches_naive(g, data):
    if g.m > 5:
        return
    lst = st.frozensets(st.integers(0, 4), min_size=2, max_size=4)
    lists = data.draw(st.lists(lst, min_size=g.m, max_size=g.m))
    res = brute_force_choose(g, lists, 2)
    assert res.ok == naive_choose(g, lists, 2)
    if res.ok:
        assert verify_set_coloring(g, lists, res.witness, 2) == []


def relabel(assign):
    # lexicographically least relabeling, by brute force
    colors = sorted(set().union(*assign))
    best = None
    for perm in itertools.permutations(range(len(colors))):
        mp = dict(zip(colors, perm))
        key = tuple(tuple(sorted(mp[c] for c in x)) for x in assign)
        if best is None or key < best:
            best = key
    return best


@pytest.mark.parametrize("m,r,palette", [(2, 2, 4), (3, 2, 4), (2, 3, 5), (3, 1, 3)])
def test_canonical_assignments_cover_every_class(m, r, palette):
    everything = list(itertools.product(itertools.combinations(range(palette), r), repeat=m))
    classes = {relabel([frozenset(x) for x in a]) for a in everything}
    ours = list(canonical_assignments(m, r, palette))
    assert len(ours) == len(set(ours))
    assert {relabel(a) for a in ours} == classes
    assert len(ours) < len(everything)


def test_exhaustive_checks():
    c4 = generate_even_cycle(4)
    assert exhaustive_choosability_check(c4, 4, 2, 6).ok
    no = exhaustive_choosability_check(c4, 3, 2, 4)
    assert no.verdict == "no"
    assert not brute_force_choose(c4, no.witness, 2).ok
    assert exhaustive_choosability_check(Graph(2, [(0, 1)]), 2, 2, 2).ok


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        brute_force_rs_colorable(generate_two_k4_gadget(), 7, 2, budget=5)
    assert info.value.nodes > 5
    with pytest.raises(BudgetExceeded):
        brute_force_choose(generate_complete(4), [frozenset(range(7))] * 6, 2, budget=2)
