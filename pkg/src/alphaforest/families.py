"""The three extremal families and their equitable-partition quotient matrices.

* ``S``  : ``S_{n,p}  = K_p join co-K_{n-p}``
* ``S+`` : ``S+_{n,p} = K_p join (co-K_{n-p-2} union K_2)``
* ``F``  : ``F_{n,p}  = K_p join (t K_2 union r K_1)`` with ``n - p = 2t + r``, ``r`` in {0, 1}

Vertices of the same degree share an eigenvector entry, so ``A_alpha`` collapses
to a 2x2 or 3x3 quotient whose largest eigenvalue is the family's rho_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .graph import Graph, empty_graph, join, make_complete, make_matching_graph, union

FAMILY_TOKENS = {"S": "S", "S+": "SPlus", "SPlus": "SPlus", "F": "F"}


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int
    p: int
    t: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        fam = FAMILY_TOKENS.get(self.family)
        if fam is None:
            raise ParameterError(f"unknown family {self.family!r}; use S, S+ or F")
        object.__setattr__(self, "family", fam)
        n, p = self.n, self.p
        if p < 1:
            raise ParameterError(f"p >= 1 required, got p={p}")
        if fam == "S" and n < p:
            raise ParameterError(f"S needs n >= p, got n={n}, p={p}")
        if fam in ("SPlus", "F") and n < p + 3:
            raise ParameterError(f"{self.family} needs n >= p+3, got n={n}, p={p}")
        object.__setattr__(self, "t", (n - p) // 2 if fam == "F" else 0)
        object.__setattr__(self, "r", (n - p) % 2 if fam == "F" else 0)

    @property
    def label(self) -> str:
        name = {"S": "S", "SPlus": "S+", "F": "F"}[self.family]
        return f"{name}_{{{self.n},{self.p}}}"


@dataclass(frozen=True)
class QuotientMatrix:
    entries: np.ndarray
    partition: tuple[tuple[str, int], ...]  # (orbit description, orbit size)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def largest_eigenvalue(self) -> float:
        # similar to a symmetric matrix, so the spectrum is real
        return float(np.max(np.linalg.eigvals(self.entries).real))


def build_family(params: FamilyParams) -> Graph:
    n, p = params.n, params.p
    if params.family == "S":
        rest = empty_graph(n - p)
    elif params.family == "SPlus":
        rest = union(empty_graph(n - p - 2), make_complete(2))
    else:
        rest = make_matching_graph(n - p)
    return join(make_complete(p), rest)


def family_graph(family: str, n: int, p: int) -> Graph:
    return build_family(FamilyParams(family, n, p))


def expected_edges(params: FamilyParams) -> int:
    base = params.p * (params.p - 1) // 2 + params.p * (params.n - params.p)
    return base + {"S": 0, "SPlus": 1, "F": params.t}[params.family]


def quotient_matrix(params: FamilyParams, alpha: float) -> QuotientMatrix:
    """Rows are the eigenequations on each degree class.

    Row ``i`` reads ``rho x_i = sum_j Q[i, j] x_j``. Classes of size zero are
    dropped (only ``S_{p,p} = K_p`` has one).
    """
    if not 0.0 <= alpha < 1.0:
        raise ParameterError(f"quotient matrices need 0 <= alpha < 1, got {alpha}")
    n, p, a = params.n, params.p, float(alpha)
    b = 1.0 - a
    hub = a * (n - 1) + b * (p - 1)  # clique vertex: degree n-1, p-1 clique neighbours
    if params.family == "S":
        if n == p:
            return QuotientMatrix(np.array([[hub]]), (("clique", p),))
        q = [[hub, b * (n - p)],
             [b * p, a * p]]
        part = (("clique", p), ("independent", n - p))
    elif params.family == "SPlus":
        q = [[hub, 2 * b, b * (n - p - 2)],
             [b * p, a * (p + 1) + b, 0.0],
             [b * p, 0.0, a * p]]
        part = (("clique", p), ("extra edge ends", 2), ("independent", n - p - 2))
    elif params.r == 0:
        q = [[hub, b * (n - p)],
             [b * p, a * (p + 1) + b]]
        part = (("clique", p), ("matched", n - p))
    else:
        q = [[hub, b * (n - p - 1), b],
             [b * p, a * (p + 1) + b, 0.0],
             [b * p, 0.0, a * p]]
        part = (("clique", p), ("matched", n - p - 1), ("unmatched", 1))
    return QuotientMatrix(np.array(q, dtype=float), part)


def quotient_rho(family: str, n: int, p: int, alpha: float) -> float:
    return quotient_matrix(FamilyParams(family, n, p), alpha).largest_eigenvalue()
