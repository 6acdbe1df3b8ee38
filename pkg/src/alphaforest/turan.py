"""Turán-type edge bounds for linear forests and a brute-force ex(n, F) oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .enumeration import enumerate_nonisomorphic
from .errors import ParameterError
from .families import family_graph
from .forests import LinearForestSpec, contains, make_spec
from .graph import (Graph, canonical_form, disjoint_copies, join, make_complete,
                    make_matching_graph, union)
from .parallel import reduce_stream


@dataclass(frozen=True)
class TuranBound:
    value: int
    c: int = 0
    regime: str = ""
    extremal_families: tuple[str, ...] = ()
    extremal_graphs: tuple[Graph, ...] = field(default=(), repr=False)

    def extremal_forms(self) -> list[bytes]:
        return sorted({canonical_form(g) for g in self.extremal_graphs})


def erdos_gallai_bound(n: int, k: int) -> TuranBound:
    """Edge bound ``floor((k-2) n / 2)`` for P_k-free graphs.

    Equality needs a disjoint union of K_{k-1}'s, which exists only when
    ``k-1`` divides ``n``.
    """
    if k < 2 or n < 0:
        raise ParameterError(f"need k >= 2 and n >= 0, got n={n}, k={k}")
    value = (k - 2) * n // 2
    if n % (k - 1) == 0:
        copies = n // (k - 1)
        return TuranBound(value, regime="divisible",
                          extremal_families=(f"{copies}K_{k - 1}",),
                          extremal_graphs=(disjoint_copies(copies, make_complete(k - 1)),))
    return TuranBound(value, regime="not attained")


def lidicky_bound(n: int, spec: LinearForestSpec) -> TuranBound:
    """``C(p,2) + p(n-p) + c`` for forests with >= 2 paths, not all of order 3.

    ``c = 1`` when every path order is odd. Only claimed for large ``n``.
    """
    if spec.ell < 2 or all(k == 3 for k in spec.ks):
        raise ParameterError(f"bound needs >= 2 paths with some order != 3, got {spec.ks}")
    p = spec.p
    c = 1 if all(k % 2 for k in spec.ks) else 0
    family = "SPlus" if c else "S"
    graphs: tuple[Graph, ...] = ()
    min_n = p + 3 if c else p
    if n >= min_n:
        graphs = (family_graph(family, n, p),)
    name = "S+" if c else "S"
    return TuranBound(comb(p, 2) + p * (n - p) + c, c=c, regime="large n",
                      extremal_families=(f"{name}_{{{n},{p}}}",), extremal_graphs=graphs)


def _f_graph(n: int, p: int) -> Graph:
    # K_p join near-perfect matching; p may be 0 here
    return join(make_complete(p), make_matching_graph(n - p))


def lP3_bound(n: int, ell: int) -> TuranBound:
    """Exact ex(n, ell P_3) with its extremal graphs, branch by branch."""
    if ell < 1 or n < 0:
        raise ParameterError(f"need ell >= 1 and n >= 0, got n={n}, ell={ell}")
    big = 3 * ell - 1
    if n < 3 * ell:
        return TuranBound(comb(n, 2), regime="n<3l", extremal_families=(f"K_{n}",),
                          extremal_graphs=(make_complete(n),))
    if n < 5 * ell - 1:
        return TuranBound(comb(big, 2) + (n - big) // 2, regime="3l<=n<5l-1",
                          extremal_families=(f"K_{big} u M_{n - big}",),
                          extremal_graphs=(union(make_complete(big), make_matching_graph(n - big)),))
    if n == 5 * ell - 1:
        return TuranBound(comb(big, 2) + ell, regime="n=5l-1",
                          extremal_families=(f"K_{big} u M_{2 * ell}", f"F_{{{n},{ell - 1}}}"),
                          extremal_graphs=(union(make_complete(big), make_matching_graph(2 * ell)),
                                           _f_graph(n, ell - 1)))
    return TuranBound(comb(ell - 1, 2) + (n - ell + 1) * (ell - 1) + (n - ell + 1) // 2,
                      regime="n>5l-1", extremal_families=(f"F_{{{n},{ell - 1}}}",),
                      extremal_graphs=(_f_graph(n, ell - 1),))


def applicable_bound(n: int, spec: LinearForestSpec) -> TuranBound | None:
    """The printed bound that speaks about ex(n, spec), if any."""
    if all(k == 3 for k in spec.ks):
        return lP3_bound(n, spec.ell)
    if spec.ell == 1:
        return erdos_gallai_bound(n, spec.ks[0])
    return lidicky_bound(n, spec)


@dataclass(frozen=True)
class BipartiteBound:
    value: int
    strict: bool = True


def bipartite_bound(m: int, n: int, spec: LinearForestSpec) -> BipartiteBound:
    """``ex(m, n; F) < p n`` for ``n`` large compared to ``p`` and ``m``."""
    if m < 0 or n < 0:
        raise ParameterError("part sizes must be non-negative")
    return BipartiteBound(spec.p * n, strict=True)


def brute_force_bipartite_ex(m: int, n: int, spec: LinearForestSpec) -> int:
    """Maximum edges of an F-free bipartite graph with parts of size m and n.

    Edge counts are tried from the top down; the first F-free edge set wins.
    """
    cross = [(i, m + j) for i in range(m) for j in range(n)]
    for e in range(len(cross), -1, -1):
        for chosen in combinations(cross, e):
            if not contains(Graph.from_edges(m + n, chosen), spec):
                return e
    return 0


def bipartite_threshold(spec: LinearForestSpec, m: int, n_max: int) -> int | None:
    """Smallest n <= n_max from which ex(m, n'; F) < p n' for every n' in [n, n_max]."""
    first = None
    for n in range(1, n_max + 1):
        holds = brute_force_bipartite_ex(m, n, spec) < bipartite_bound(m, n, spec).value
        if holds and first is None:
            first = n
        elif not holds:
            first = None
    return first


# brute force ex(n, F) --------------------------------------------------------

def _edge_record(args):
    g, spec = args
    if contains(g, spec):
        return None
    return g.num_edges, [canonical_form(g)]


def _merge_edges(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a[0], a[1] + b[1]


def max_edge_classes(graphs: list[Graph]) -> tuple[int, list[bytes]]:
    """Largest edge count among already-filtered graphs and its classes."""
    best = max(g.num_edges for g in graphs)
    return best, sorted({canonical_form(g) for g in graphs if g.num_edges == best})


def brute_force_ex(n: int, spec: LinearForestSpec | list[int] | str, source=None,
                   jobs: int = 1) -> tuple[int, list[bytes]]:
    """Exact ex(n, F) and the canonical forms of every extremal class.

    Without ``source`` the F-free classes are generated natively (F-freeness
    is hereditary, so generation prunes as it goes). With ``source`` (any
    iterable of graphs) only graphs of order ``n`` are considered.
    """
    if not isinstance(spec, LinearForestSpec):
        spec = make_spec(spec, strict=False)
    if source is None:
        return max_edge_classes(enumerate_nonisomorphic(n, keep=lambda g: not contains(g, spec)))
    items = ((g, spec) for g in source if g.n == n)
    result = reduce_stream(items, _edge_record, _merge_edges, jobs=jobs)
    if result is None:
        raise ParameterError(f"no {spec}-free graph of order {n} in the supplied stream")
    return result[0], sorted(set(result[1]))

