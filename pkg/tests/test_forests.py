from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaforest.enumeration import enumerate_nonisomorphic
from alphaforest.errors import ParameterError
from alphaforest.families import family_graph
from alphaforest.forests import classify_case, contains, is_free, make_spec, predicted_extremal
from alphaforest.graph import (Graph, all_labeled_graphs, is_isomorphic, make_complete, make_path,
                               make_star)

from conftest import graphs, sequence_oracle

# every multiset of path orders >= 2 with total <= 6
SMALL_SPECS = [[2], [3], [4], [5], [6], [2, 2], [3, 2], [4, 2], [3, 3], [2, 2, 2]]
BATTERY = [[4], [5], [3, 3], [4, 2], [5, 3], [3, 3, 3]]


def test_make_spec_examples():
    s = make_spec([4])
    assert (s.ell, s.p) == (1, 1)
    s = make_spec([3, 3])
    assert (s.ell, s.p) == (2, 1)
    s = make_spec("3,7")
    assert (s.ks, s.ell, s.p) == ((7, 3), 2, 3)
    assert str(s) == "7,3"


@pytest.mark.parametrize("bad", [[2], [3], [1, 4], [], "4,x"])
def test_make_spec_rejects(bad):
    with pytest.raises(ParameterError):
        make_spec(bad)


def test_nonstrict_allows_small_forests():
    assert make_spec([2], strict=False).p == 0
    with pytest.raises(ParameterError):
        make_spec([1], strict=False)


def test_classify_examples():
    assert classify_case(make_spec([4])) == "i"
    assert classify_case(make_spec([5])) == "ii"
    assert classify_case(make_spec([3, 3, 3])) == "iii"
    assert classify_case(make_spec([5, 3])) == "ii"
    assert classify_case(make_spec([5, 2])) == "i"


def test_contains_examples():
    assert contains(make_path(6), make_spec([3, 3]))
    assert not contains(make_star(5), make_spec([4]))
    assert not contains(family_graph("S", 6, 2), make_spec([4, 2]))
    # S+ is built for all-odd forests; with an even path the extra edge is enough
    assert contains(family_graph("SPlus", 6, 2), make_spec([4, 2]))
    sp = family_graph("SPlus", 8, 2)
    assert not contains(sp, make_spec([5, 3]))
    free = [v for v in range(8) if sp.degree(v) == 2]
    assert len(free) == 4
    assert contains(sp.add_edge(free[0], free[1]), make_spec([5, 3]))


def test_contains_agrees_with_sequence_oracle():
    for n in range(0, 7):
        for g in enumerate_nonisomorphic(n):
            for ks in SMALL_SPECS:
                assert contains(g, make_spec(ks, strict=False)) == sequence_oracle(g, ks), (g, ks)


def test_contains_labelled_five_vertices():
    specs = [make_spec(ks, strict=False) for ks in SMALL_SPECS]
    for g in all_labeled_graphs(5):
        for ks, spec in zip(SMALL_SPECS, specs):
            assert contains(g, spec) == sequence_oracle(g, ks)


@given(graphs(max_n=8), st.sampled_from(SMALL_SPECS + [[3, 3, 2], [4, 3]]), st.data())
@settings(max_examples=150, deadline=None)
def test_contains_monotone_under_edge_addition(g, ks, data):
    spec = make_spec(ks, strict=False)
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not non_edges:
        return
    h = g.add_edge(*data.draw(st.sampled_from(non_edges)))
    if contains(g, spec):
        assert contains(h, spec)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_single_edge_forest(g):
    assert contains(g, make_spec([2], strict=False)) == (g.num_edges >= 1)


def test_complete_graph_threshold():
    for ks in BATTERY:
        spec = make_spec(ks)
        assert not contains(make_complete(spec.total - 1), spec)
        assert contains(make_complete(spec.total), spec)


def test_predicted_examples():
    assert is_isomorphic(predicted_extremal(make_spec([4]), 10).graph, make_star(9))
    pred = predicted_extremal(make_spec([5]), 10)
    assert pred.case == "ii" and pred.graph == family_graph("SPlus", 10, 1)
    pred = predicted_extremal(make_spec([3, 3]), 10)
    assert pred.case == "iii" and pred.graph == family_graph("F", 10, 1)
    assert pred.rho(0.5) > 0


def test_predicted_graphs_are_free():
    for ks in BATTERY:
        spec = make_spec(ks)
        for n in range(spec.p + 3, 13):
            assert is_free(predicted_extremal(spec, n).graph, spec)
