from __future__ import annotations

import pytest

from alphaforest.errors import ParameterError
from alphaforest.forests import make_spec
from alphaforest.graph import (canonical_form, disjoint_copies, join, make_complete,
                               make_matching_graph, union)
from alphaforest.turan import (applicable_bound, bipartite_bound, bipartite_threshold,
                               brute_force_bipartite_ex, brute_force_ex, erdos_gallai_bound,
                               lidicky_bound, lP3_bound)


def test_erdos_gallai_examples():
    assert erdos_gallai_bound(5, 3).value == 2
    b = erdos_gallai_bound(6, 4)
    assert b.value == 6 and b.regime == "divisible"
    assert b.extremal_forms() == [canonical_form(disjoint_copies(2, make_complete(3)))]
    assert erdos_gallai_bound(4, 2).value == 0
    assert erdos_gallai_bound(7, 4).regime == "not attained"
    with pytest.raises(ParameterError):
        erdos_gallai_bound(5, 1)


def test_lidicky_examples():
    b = lidicky_bound(10, make_spec([4, 2]))
    assert (b.value, b.c) == (17, 0)
    # p = 2 + 1 - 1 = 2 for [5,3], so 1 + 2*8 + 1
    b = lidicky_bound(10, make_spec([5, 3]))
    assert (b.value, b.c) == (18, 1)
    with pytest.raises(ParameterError):
        lidicky_bound(10, make_spec([3, 3]))
    with pytest.raises(ParameterError):
        lidicky_bound(10, make_spec([5]))


def test_lp3_examples():
    b = lP3_bound(7, 2)
    assert (b.value, b.regime) == (11, "3l<=n<5l-1")
    assert b.extremal_forms() == [canonical_form(union(make_complete(5), make_matching_graph(2)))]
    b = lP3_bound(9, 2)
    assert b.value == 12 and len(b.extremal_forms()) == 2
    b = lP3_bound(10, 2)
    assert b.value == 13
    assert b.extremal_forms() == [canonical_form(join(make_complete(1), make_matching_graph(9)))]
    b = lP3_bound(5, 2)
    assert (b.value, b.regime) == (10, "n<3l")


def test_lp3_regimes_are_consistent():
    for ell in range(1, 5):
        for n in range(0, 30):
            b = lP3_bound(n, ell)
            assert b.value >= 0
            for g in b.extremal_graphs:
                assert g.n == n and g.num_edges == b.value


def test_bipartite_examples():
    assert bipartite_bound(3, 20, make_spec([4, 2])).value == 40
    b = bipartite_bound(2, 20, make_spec([3, 3]))
    assert b.value == 20 and b.strict


def test_bipartite_brute_force():
    spec = make_spec([3, 3])
    # K_{1,n} holds no two disjoint P_3's
    assert brute_force_bipartite_ex(1, 4, spec) == 4
    assert brute_force_bipartite_ex(2, 2, spec) == 4
    assert bipartite_threshold(spec, 1, 5) is None


def test_brute_force_examples():
    best, forms = brute_force_ex(9, [3, 3])
    assert best == 12 and len(forms) == 2
    assert brute_force_ex(5, [3, 3]) == (10, [canonical_form(make_complete(5))])
    assert brute_force_ex(6, [4]) == (6, [canonical_form(disjoint_copies(2, make_complete(3)))])


def test_brute_force_never_beats_exact_bounds():
    for ell in (1, 2):
        for n in range(3 * ell, 9):
            best, forms = brute_force_ex(n, [3] * ell)
            b = lP3_bound(n, ell)
            assert best == b.value
            assert forms == b.extremal_forms()


def test_erdos_gallai_equality_classes():
    for k in (3, 4, 5):
        for n in range(k - 1, 9):
            best, forms = brute_force_ex(n, [k])
            b = erdos_gallai_bound(n, k)
            assert best <= b.value
            if n % (k - 1) == 0:
                assert best == b.value and b.extremal_forms() == forms


def test_applicable_bound_dispatch():
    assert applicable_bound(9, make_spec([3, 3])).regime == "n=5l-1"
    assert applicable_bound(9, make_spec([5])).regime == "not attained"
    assert applicable_bound(9, make_spec([4, 2])).regime == "large n"


def test_stream_matches_native():
    from alphaforest.enumeration import enumerate_nonisomorphic
    spec = make_spec([4, 2])
    stream = enumerate_nonisomorphic(6)
    assert brute_force_ex(6, spec, source=stream) == brute_force_ex(6, spec)
    assert brute_force_ex(6, spec, source=stream, jobs=2) == brute_force_ex(6, spec)
