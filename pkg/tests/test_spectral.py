from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaforest.enumeration import enumerate_nonisomorphic
from alphaforest.errors import ParameterError, PreconditionError
from alphaforest.families import family_graph
from alphaforest.graph import Graph, empty_graph, make_complete, make_path, make_star
from alphaforest.spectral import (assemble_alpha, jacobi_eigh, power_iteration, rayleigh_value,
                                  rayleigh_value_as_printed, signless_laplacian, spectral_radius)

from conftest import graphs, random_connected_graph


def test_assemble_examples():
    assert np.allclose(assemble_alpha(make_complete(2), 0.3), [[0.3, 0.7], [0.7, 0.3]])
    assert not assemble_alpha(empty_graph(3), 0.4).any()
    assert np.allclose(assemble_alpha(make_path(3), 1.0), np.diag([1, 2, 1]))
    with pytest.raises(ParameterError):
        assemble_alpha(make_path(3), 1.5)


def test_radius_examples():
    for n in range(2, 9):
        for a in (0.0, 0.4, 1.0):
            assert spectral_radius(make_complete(n), a).rho == pytest.approx(n - 1, abs=1e-12)
    assert spectral_radius(make_star(3), 0.0).rho == pytest.approx(math.sqrt(3), abs=1e-12)
    bowtie = family_graph("F", 5, 1)
    assert spectral_radius(bowtie, 0.5).rho == pytest.approx((7 + math.sqrt(17)) / 4, abs=1e-12)
    paw = family_graph("SPlus", 4, 1)
    assert spectral_radius(paw, 0.5).rho == pytest.approx(2.2807764064, abs=1e-9)


def test_edgeless_and_disconnected():
    r = spectral_radius(empty_graph(3), 0.5)
    assert r.rho == 0.0
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4), (2, 4)])  # K_2 + K_3 + K_1
    r = spectral_radius(g, 0.3)
    assert r.rho == pytest.approx(2.0, abs=1e-12)
    assert r.component_index == 1
    assert np.allclose(r.vector[[0, 1, 5]], 0.0)
    with pytest.raises(ParameterError):
        spectral_radius(empty_graph(0), 0.5)


def test_rayleigh_examples():
    s = 1 / math.sqrt(2)
    for a in (0.0, 0.3, 1.0):
        assert rayleigh_value(make_complete(2), a, [s, s]) == pytest.approx(1.0, abs=1e-12)
    u = np.full(3, 1 / math.sqrt(3))
    assert rayleigh_value(make_path(3), 0.0, u) == pytest.approx(4 / 3, abs=1e-12)
    with pytest.raises(PreconditionError):
        rayleigh_value(make_path(3), 0.0, [1.0, 1.0, 1.0])


def test_rayleigh_as_printed_differs():
    g = family_graph("S", 6, 2)
    r = spectral_radius(g, 0.5)
    assert rayleigh_value(g, 0.5, r.vector) == pytest.approx(r.rho, abs=1e-9)
    assert abs(rayleigh_value_as_printed(g, 0.5, r.vector) - r.rho) > 1e-3


def test_jacobi_against_lapack():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4, 7, 10, 23, 40):
        m = rng.normal(size=(n, n))
        m = m + m.T
        vals, vecs, sweeps = jacobi_eigh(m)
        assert np.allclose(np.sort(vals), np.linalg.eigvalsh(m), atol=1e-10)
        assert np.allclose(m @ vecs, vecs * vals, atol=1e-10)
        assert np.allclose(vecs.T @ vecs, np.eye(n), atol=1e-12)
        assert sweeps <= 12


def test_jacobi_already_diagonal():
    vals, vecs, sweeps = jacobi_eigh(np.diag([3.0, 1.0, 2.0]))
    assert vals.tolist() == [3.0, 1.0, 2.0] and sweeps == 0


def test_methods_agree(rng):
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 12))
        for a in (0.0, 0.5, 0.8):
            ref = spectral_radius(g, a, "eigh").rho
            assert spectral_radius(g, a).rho == pytest.approx(ref, abs=1e-10)
            assert spectral_radius(g, a, "power").rho == pytest.approx(ref, abs=1e-9)
    with pytest.raises(ParameterError):
        spectral_radius(make_path(3), 0.5, "qr")


def test_power_iteration_bipartite():
    # +-rho pairs would make an unshifted iteration oscillate
    m = assemble_alpha(make_path(4), 0.0)
    lam, x, _ = power_iteration(m)
    assert lam == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-10)


def test_oracle_consistency_small_graphs():
    for n in range(1, 8):
        for g in enumerate_nonisomorphic(n):
            a = g.adjacency_matrix()
            assert spectral_radius(g, 0.0).rho == pytest.approx(
                np.linalg.eigvalsh(a)[-1], abs=1e-9)
            q = np.linalg.eigvalsh(a + np.diag(a.sum(axis=1)))[-1]
            assert spectral_radius(g, 0.5).rho == pytest.approx(q / 2, abs=1e-9)
            assert np.allclose(signless_laplacian(g), 2 * assemble_alpha(g, 0.5))


def _connected_proper_subgraph(rng, g: Graph) -> Graph | None:
    options = []
    for u, v in g.edges():
        h = g.remove_edge(u, v)
        if h.is_connected():
            options.append(h)
    for v in range(g.n):
        h = g.remove_vertex(v)
        if h.n >= 2 and h.is_connected():
            options.append(h)
    return rng.choice(options) if options else None


def test_subgraph_monotonicity(rng):
    checked = 0
    while checked < 200:
        g = random_connected_graph(rng, rng.randint(3, 8))
        h = _connected_proper_subgraph(rng, g)
        if h is None:
            continue
        for a in (0.0, 0.3, 0.5, 0.7):
            assert spectral_radius(h, a).rho < spectral_radius(g, a).rho
        checked += 1


def test_perron_positivity(rng):
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 10), rng.random() * 0.5)
        for a in (0.0, 0.5, 0.9):
            r = spectral_radius(g, a)
            assert r.vector.min() > 0
            assert r.max_normalized().max() == pytest.approx(1.0)


@given(graphs(min_n=1, max_n=8), st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0]),
       st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_rayleigh_bound(g, a, seed):
    r = spectral_radius(g, a)
    assert rayleigh_value(g, a, r.vector) == pytest.approx(r.rho, abs=1e-9)
    rs = np.random.default_rng(seed)
    for _ in range(100):
        x = rs.normal(size=g.n)
        norm = np.linalg.norm(x)
        if norm == 0:
            continue
        assert rayleigh_value(g, a, x / norm) <= r.rho + 1e-9
