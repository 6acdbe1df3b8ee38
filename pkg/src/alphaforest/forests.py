"""Linear forests: path orders, extremal case, containment and predicted extremal graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .families import FamilyParams, build_family, quotient_matrix
from .graph import Graph, _bits

CASE_FAMILY = {"i": "S", "ii": "SPlus", "iii": "F"}


@dataclass(frozen=True)
class LinearForestSpec:
    ks: tuple[int, ...]  # path orders, non-increasing

    @property
    def ell(self) -> int:
        return len(self.ks)

    @property
    def p(self) -> int:
        return sum(k // 2 for k in self.ks) - 1

    @property
    def total(self) -> int:
        return sum(self.ks)

    def __str__(self):
        return ",".join(map(str, self.ks))


def make_spec(ks: Iterable[int] | str, strict: bool = True) -> LinearForestSpec:
    """Build a spec from path orders (or a ``"5,3"`` string).

    With ``strict`` the extremal results' hypothesis ``p >= 1`` is enforced; containment
    tests can pass ``strict=False`` to allow ``[2]`` or ``[3]``.
    """
    if isinstance(ks, str):
        try:
            ks = [int(tok) for tok in ks.split(",") if tok.strip()]
        except ValueError as exc:
            raise ParameterError(f"bad forest spec {ks!r}: {exc}") from None
    ks = sorted(ks, reverse=True)
    if not ks:
        raise ParameterError("a linear forest needs at least one path")
    if ks[-1] < 2:
        raise ParameterError(f"every path order must be >= 2, got {ks}")
    spec = LinearForestSpec(tuple(ks))
    if strict and spec.p < 1:
        raise ParameterError(f"{ks} has p = {spec.p}; the extremal results need p >= 1")
    return spec


def classify_case(spec: LinearForestSpec) -> str:
    if any(k % 2 == 0 for k in spec.ks):
        return "i"
    if all(k == 3 for k in spec.ks):
        return "iii"
    return "ii"


def _path_masks(adj: tuple[int, ...], free: int, k: int) -> set[int]:
    """Vertex sets (as masks) of all k-vertex paths inside ``free``."""
    out: set[int] = set()

    def extend(v: int, mask: int, left: int):
        if left == 0:
            out.add(mask)
            return
        for u in _bits(adj[v] & free & ~mask):
            extend(u, mask | 1 << u, left - 1)

    for s in _bits(free):
        extend(s, 1 << s, k - 1)
    return out


def contains(g: Graph, spec: LinearForestSpec) -> bool:
    """True iff ``g`` has vertex-disjoint paths of orders ``spec.ks`` (not necessarily induced).

    Paths are placed longest first. Only the vertex set of a placed path matters
    for the rest of the search, so states are memoised on the used-vertex mask.
    Consecutive equal orders are placed with increasing minimum vertex.
    """
    ks = spec.ks
    if spec.total > g.n:
        return False
    if 2 * g.num_edges < sum(2 * (k - 1) for k in ks):
        return False
    remaining = [sum(ks[i:]) for i in range(len(ks) + 1)]
    full = (1 << g.n) - 1
    memo: dict[tuple[int, int, int], bool] = {}

    def place(i: int, used: int, min_low: int) -> bool:
        if i == len(ks):
            return True
        free = full & ~used
        if free.bit_count() < remaining[i]:
            return False
        key = (i, used, min_low)
        if key in memo:
            return memo[key]
        same_next = i + 1 < len(ks) and ks[i + 1] == ks[i]
        ok = False
        for mask in _path_masks(g.adj, free, ks[i]):
            low = (mask & -mask).bit_length() - 1
            if low <= min_low:
                continue
            if place(i + 1, used | mask, low if same_next else -1):
                ok = True
                break
        memo[key] = ok
        return ok

    return place(0, 0, -1)


def is_free(g: Graph, spec: LinearForestSpec) -> bool:
    return not contains(g, spec)


@dataclass(frozen=True)
class Prediction:
    case: str
    params: FamilyParams
    graph: Graph

    def rho(self, alpha: float) -> float:
        return quotient_matrix(self.params, alpha).largest_eigenvalue()


def predicted_extremal(spec: LinearForestSpec, n: int) -> Prediction:
    """Family predicted to be the unique spectral maximiser for this forest at large n."""
    case = classify_case(spec)
    params = FamilyParams(CASE_FAMILY[case], n, spec.p)
    return Prediction(case, params, build_family(params))
