from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

import numpy as np
import pytest
from hypothesis import strategies as st

from alphaforest.graph import Graph


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, density: float = 0.4) -> Graph:
    # random spanning tree first, then extra edges
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@lru_cache(maxsize=None)
def _sequence_table(n: int, ks: tuple[int, ...]):
    """All injective vertex sequences of length sum(ks), plus the consecutive pairs
    inside each block that must be edges for the sequence to trace the forest."""
    total = sum(ks)
    if total > n:
        return None, None
    seqs = np.array(list(permutations(range(n), total)), dtype=np.intp)
    need, start = [], 0
    for k in ks:
        need += [(start + i, start + i + 1) for i in range(k - 1)]
        start += k
    return seqs, np.array(need, dtype=np.intp)


def sequence_oracle(g: Graph, ks) -> bool:
    """Brute force: does some ordered vertex sequence trace the paths one after another?"""
    seqs, need = _sequence_table(g.n, tuple(ks))
    if seqs is None:
        return False
    m = g.adjacency_matrix().astype(bool)
    hits = m[seqs[:, need[:, 0]], seqs[:, need[:, 1]]]
    return bool(hits.all(axis=1).any())


@pytest.fixture
def rng():
    return random.Random(20240611)
