import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgechoose.colors import (
    SetColoring,
    assignment_from_json,
    assignment_to_json,
    coloring_from_json,
    coloring_to_json,
    is_partial_coloring,
    make_lists,
    make_uniform_assignment,
    remaining_list,
    save_margin,
    trim,
    uniform_size,
    verify_set_coloring,
)
from edgechoose.graph import Graph, generate_complete, generate_even_cycle, generate_path, generate_petersen


def test_trim_drops_largest():
    assert trim({5, 1, 9, 3}, 2) == frozenset({1, 3})
    assert trim({1}, 4) == frozenset({1})


def test_remaining_list_removes_incident_and_own():
    g = generate_path(4)  # edges 0-1, 1-2, 2-3
    L = make_lists([{0, 1, 2}, {0, 1, 2, 3}, {1, 2, 3}])
    phi = [{0}, {3}, {1}]
    assert remaining_list(g, L, phi, 1) == frozenset({2})


def test_save_margin_examples():
    g = generate_path(4)
    L = make_lists([{0, 1, 2}, {0, 1, 2, 3}, {5, 6, 7}])
    # color 4 is outside L(middle), so one choice is saved
    assert save_margin(g, L, [{4}, set(), {1}], 1) == 1
    assert save_margin(g, L, [{4}, set(), {5}], 1) == 2
    assert save_margin(g, L, [{0}, set(), {1}], 1) == 0
    # same color on both sides of the middle edge removes it once
    assert save_margin(g, L, [{2}, set(), {2}], 1) == 1


def test_verify_reports_each_rule():
    g = generate_path(3)
    L = make_lists([{0, 1, 2, 3}, {0, 1, 2, 3}])
    assert verify_set_coloring(g, L, [{0, 1}, {2, 3}], 2) == []
    rules = {v.rule for v in verify_set_coloring(g, L, [{0, 1}, {1, 9}], 2)}
    assert rules == {"list", "disjointness"}
    assert {v.rule for v in verify_set_coloring(g, L, [{0}, {2, 3}], 2)} == {"multiplicity"}
    assert verify_set_coloring(g, L, [{0, 1}], 2)[0].rule == "shape"


def test_uniform_assignment_is_seeded():
    g = generate_petersen()
    a = make_uniform_assignment(g, 7, 14, seed=3)
    assert a == make_uniform_assignment(g, 7, 14, seed=3)
    assert uniform_size(a) == 7
    assert all(x <= frozenset(range(14)) for x in a)
    with pytest.raises(ValueError):
        make_uniform_assignment(g, 7, 6)


def test_json_roundtrip():
    g = generate_complete(4)
    L = make_uniform_assignment(g, 7, 14, seed=1)
    data = json.loads(json.dumps(assignment_to_json(g, L)))
    assert assignment_from_json(g, data) == L
    phi = SetColoring.of([{0, 1}] * g.m)
    assert coloring_from_json(json.loads(json.dumps(coloring_to_json(phi)))) == phi
    bad = dict(data, edges=data["edges"][:-1] + [[0, 0]])
    with pytest.raises(ValueError):
        assignment_from_json(g, bad)


@settings(max_examples=300, deadline=None)
@given(
    lists=st.lists(st.frozensets(st.integers(0, 9), min_size=3, max_size=7), min_size=6, max_size=6),
    order=st.permutations(range(6)),
    picks=st.lists(st.integers(0, 9), min_size=6, max_size=6),
)
def test_save_margin_never_decreases(lists, order, picks):
    # adding choices to edges around e only ever adds to the margin
    g = generate_even_cycle(6)
    phi = [set() for _ in range(6)]
    target = order[0]
    prev = save_margin(g, lists, phi, target)
    for e, c in zip(order[1:], picks[1:]):
        trial = [set(x) for x in phi]
        trial[e].add(c)
        if not is_partial_coloring(g, [frozenset(range(10))] * 6, trial, 2):
            continue
        phi = trial
        cur = save_margin(g, lists, phi, target)
        assert cur >= prev
        prev = cur


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000))
def test_remaining_list_size_bound(seed):
    # each saved choice leaves one more color in L'(e)
    g = generate_petersen()
    L = make_uniform_assignment(g, 7, 10, seed)
    phi = [frozenset(sorted(L[e])[: (e + seed) % 2]) for e in range(g.m)]
    for e in range(g.m):
        taken = sum(len(phi[f]) for f in g.incident_edges(e))
        rest = L[e] - phi[e]
        used = set().union(*(phi[f] for f in g.incident_edges(e)))
        assert save_margin(g, L, phi, e) == taken - len(used & L[e])
        assert remaining_list(g, L, phi, e) == rest - used
        assert len(rest - used) >= len(rest) - taken + save_margin(g, L, phi, e)
