"""Printed closed forms and polynomials for the family spectral radii.

Every formula here is evaluated verbatim, typos included. Whether a formula is
right is decided by comparing it with the quotient-matrix eigenvalue
(:func:`check_formula`), never by editing the formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NumericError, ParameterError
from .families import FamilyParams, quotient_matrix

MATCH_TOL = 1e-9
ROOT_TOL = 1e-12

POLY_LABELS = ("f", "g", "h", "f_shift", "g_shift")


@dataclass(frozen=True)
class PolySpec:
    coeffs: tuple[float, ...]  # highest degree first
    label: str
    params: tuple[int, int, float]  # (n, p, alpha)
    upper: float  # every root of interest lies below this

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        return horner(self.coeffs, x)


def horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _f_coeffs(n: int, p: int, a: float) -> list[float]:
    return [
        1.0,
        -(p + n * a + p * a),
        p - n * p + n * a - 2 * p * a + p**2 + n * p * a**2 + 2 * n * p * a - 1,
        (p**2 * a**2 - 2 * p + p**3 * a**2 + n * p + 5 * p * a - 2 * a**2 + p**2 * a
         - p**3 * a - p**2 + n * p**2 * a - 2 * n * p**2 * a**2 - 2 * n * p * a),
    ]


def _g_coeffs(n: int, p: int) -> list[float]:
    return [1.0, -(n + 3 * p), 4 * p**2 + n * p + 2 * n - 4, -2 * p**2 * (p + 1)]


def _h_coeffs(n: int, p: int, a: float) -> list[float]:
    return [
        1.0,
        -(p + n * a),
        -((p - 1) * (a - 1) - a * (n - 1)) * (a * p + 1) - p * (n - p) * (a - 1) ** 2,
    ]


def make_poly(label: str, n: int, p: int, alpha: float | None = None) -> PolySpec:
    """Instantiate one of the printed polynomials.

    ``f`` (cubic for S+), ``g`` (the signless-Laplacian cubic, alpha fixed at 1/2),
    ``h`` (quadratic for F with n-p even), ``f_shift = f - p(alpha-1)^2 (n-p-3)``
    (F with n-p odd) and its signless counterpart ``g_shift = g - 2p(n-p-3)``.
    """
    if label not in POLY_LABELS:
        raise ParameterError(f"unknown polynomial label {label!r}")
    if p < 1 or n < p + 3:
        raise ParameterError(f"polynomial {label} needs p >= 1 and n >= p+3, got n={n}, p={p}")
    if label in ("h",) and (n - p) % 2:
        raise ParameterError("h applies only when n-p is even")
    if label in ("f_shift", "g_shift") and (n - p) % 2 == 0:
        raise ParameterError(f"{label} applies only when n-p is odd")
    if label in ("g", "g_shift"):
        if alpha is not None and alpha != 0.5:
            raise ParameterError("g is the alpha = 1/2 polynomial")
        coeffs = _g_coeffs(n, p)
        if label == "g_shift":
            coeffs[-1] -= 2 * p * (n - p - 3)
        return PolySpec(tuple(coeffs), label, (n, p, 0.5), 2.0 * n)
    if alpha is None or not 0.0 <= alpha < 1.0:
        raise ParameterError(f"polynomial {label} needs 0 <= alpha < 1, got {alpha}")
    if label == "h":
        coeffs = _h_coeffs(n, p, alpha)
    else:
        coeffs = _f_coeffs(n, p, alpha)
        if label == "f_shift":
            coeffs[-1] -= p * (alpha - 1) ** 2 * (n - p - 3)
    return PolySpec(tuple(coeffs), label, (n, p, alpha), float(n))


def _derivative(coeffs: Sequence[float]) -> list[float]:
    d = len(coeffs) - 1
    return [c * (d - i) for i, c in enumerate(coeffs[:-1])]


def _refine_root(coeffs, lo: float, hi: float, tol: float) -> float:
    """Root of a polynomial that is monotone on [lo, hi] with a sign change."""
    flo = horner(coeffs, lo)
    if flo == 0.0:
        return lo
    dcoeffs = _derivative(coeffs)
    x = 0.5 * (lo + hi)
    for _ in range(200):
        fx = horner(coeffs, x)
        if fx == 0.0:
            return x
        if (fx < 0) == (flo < 0):
            lo, flo = x, fx
        else:
            hi = x
        if hi - lo <= tol * max(1.0, abs(x)):
            return 0.5 * (lo + hi)
        dfx = horner(dcoeffs, x)
        step = x - fx / dfx if dfx != 0.0 else None
        # Newton only while it stays strictly inside the bracket
        x = step if step is not None and lo < step < hi else 0.5 * (lo + hi)
    return x


def _real_roots(coeffs: Sequence[float], lo: float, hi: float, tol: float) -> list[float]:
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        r = -coeffs[1] / coeffs[0]
        return [r] if lo <= r <= hi else []
    crit = _real_roots(_derivative(coeffs), lo, hi, tol)
    knots = [lo] + [c for c in crit if lo < c < hi] + [hi]
    roots = []
    scale = max(abs(c) for c in coeffs)
    for a, b in zip(knots, knots[1:]):
        fa, fb = horner(coeffs, a), horner(coeffs, b)
        if abs(fa) <= 1e-14 * scale:
            roots.append(a)
        elif fa * fb < 0:
            roots.append(_refine_root(coeffs, a, b, tol))
    if abs(horner(coeffs, hi)) <= 1e-14 * scale:
        roots.append(hi)
    return sorted(set(roots))


def largest_real_root(poly: PolySpec, lower: float = 0.0, tol: float = ROOT_TOL) -> float:
    """Greatest real root of a monic quadratic or cubic inside ``[lower, poly.upper]``.

    The interval is cut at the critical points so every piece is monotone, then
    each sign change is closed in by bisection with guarded Newton steps.
    """
    if poly.degree not in (2, 3) or poly.coeffs[0] != 1.0:
        raise ParameterError("largest_real_root expects a monic quadratic or cubic")
    if poly(poly.upper) <= 0.0:
        raise NumericError(f"{poly.label} is not positive at the bracket end {poly.upper}")
    roots = _real_roots(poly.coeffs, lower, poly.upper, tol)
    if not roots:
        raise NumericError(f"{poly.label} has no real root in [{lower}, {poly.upper}]")
    return roots[-1]


# printed closed forms --------------------------------------------------------

def _sqrt(radicand: float, what: str) -> float:
    if radicand < 0:
        raise NumericError(f"negative discriminant {radicand} in {what}")
    return math.sqrt(radicand)


def rho_S_closed(n: int, p: int, alpha: float) -> float:
    """rho_alpha(S_{n,p}) by the printed quadratic formula."""
    if not (0.0 <= alpha < 1.0 and p >= 1 and n >= p):
        raise ParameterError(f"needs 0 <= alpha < 1, p >= 1, n >= p; got n={n}, p={p}, alpha={alpha}")
    a = alpha
    lead = a * n + p - 1
    disc = lead**2 - 4 * p * (2 * a - 1) * n - 4 * p * (p - (p + 1) * a)
    return (lead + _sqrt(disc, "rho_S_closed")) / 2


def rho_S_lower_bounds(n: int, p: int, alpha: float) -> tuple[float, float | None]:
    """``(alpha(n-1) + (1-alpha)(p-1), second)``; ``second`` only past its n threshold."""
    bound1 = alpha * (n - 1) + (1 - alpha) * (p - 1)
    if not 0.0 < alpha < 1.0:
        return bound1, None
    threshold = ((2 * p - 1) ** 2 / (2 * alpha**2) - (8 * p**2 - 2 * p - 1) / (2 * alpha)
                 + 2 * p * (p + 1))
    if n < threshold:
        return bound1, None
    return bound1, alpha * n + (2 * p - 1 - (2 * p + 1) * alpha) / (2 * alpha)


def rho_S_lower_bound_threshold(p: int, alpha: float) -> float:
    return ((2 * p - 1) ** 2 / (2 * alpha**2) - (8 * p**2 - 2 * p - 1) / (2 * alpha)
            + 2 * p * (p + 1))


def t_alpha_even_printed(n: int, p: int, alpha: float) -> float:
    a = alpha
    disc = (a * n - 3 * p) ** 2 + 4 * (p - a) * n + 4 * (p + 2) * (a * p - 3 * p + 5)
    return (p + a * n + _sqrt(disc, "t_alpha")) / 2


def q_S_printed(n: int, p: int) -> float:
    disc = (n + 2 * p - 2) ** 2 - 8 * p * (p - 1)
    return (2 * n + 2 * p - 2 + _sqrt(disc, "q_S")) / 2


def q_F_even_printed(n: int, p: int) -> float:
    disc = (n + 2 * p - 4) ** 2 - 8 * p * (p - 2)
    return (n + 2 * p + _sqrt(disc, "q_F_even")) / 2


def root_of(label: str, n: int, p: int, alpha: float | None = None) -> float:
    return largest_real_root(make_poly(label, n, p, alpha))


# verification against the quotient oracle -------------------------------------

@dataclass(frozen=True)
class Formula:
    name: str
    family: str
    parity: int | None  # required (n-p) % 2, or None
    signless: bool  # value is q = 2 rho_{1/2}; alpha is fixed at 1/2
    gating: bool  # a mismatch here is a failure, not an expected typo
    evaluate: Callable[[int, int, float], float]

    def applies(self, n: int, p: int) -> bool:
        min_n = p if self.family == "S" else p + 3
        return n >= min_n and (self.parity is None or (n - p) % 2 == self.parity)


FORMULAS: dict[str, Formula] = {f.name: f for f in [
    Formula("S_closed", "S", None, False, True, rho_S_closed),
    Formula("SPlus_f_root", "SPlus", None, False, True, lambda n, p, a: root_of("f", n, p, a)),
    Formula("F_even_h_root", "F", 0, False, True, lambda n, p, a: root_of("h", n, p, a)),
    Formula("F_odd_f_shift_root", "F", 1, False, True, lambda n, p, a: root_of("f_shift", n, p, a)),
    Formula("F_even_closed", "F", 0, False, False, t_alpha_even_printed),
    Formula("q_S_closed", "S", None, True, False, lambda n, p, a: q_S_printed(n, p)),
    Formula("q_SPlus_g_root", "SPlus", None, True, False, lambda n, p, a: root_of("g", n, p)),
    Formula("q_F_even_closed", "F", 0, True, False, lambda n, p, a: q_F_even_printed(n, p)),
    Formula("q_F_odd_g_shift_root", "F", 1, True, False, lambda n, p, a: root_of("g_shift", n, p)),
]}

# headline bound for each extremal case (i, ii, iii), by parity of n-p where it matters
THEOREM_FORMULAS = {
    "i": {None: "S_closed"},
    "ii": {None: "SPlus_f_root"},
    "iii": {0: "F_even_closed", 1: "F_odd_f_shift_root"},
}
SIGNLESS_FORMULAS = {
    "i": {None: "q_S_closed"},
    "ii": {None: "q_SPlus_g_root"},
    "iii": {0: "q_F_even_closed", 1: "q_F_odd_g_shift_root"},
}


@dataclass(frozen=True)
class ClosedFormReport:
    formula: str
    n: int
    p: int
    alpha: float
    printed_value: float
    oracle_value: float
    delta: float
    verdict: str  # "Match" or "SuspectedTypo"
    gating: bool

    def as_row(self) -> dict:
        return {
            "formula": self.formula, "n": self.n, "p": self.p, "alpha": self.alpha,
            "printed": self.printed_value, "oracle": self.oracle_value,
            "delta": self.delta, "verdict": self.verdict, "gating": self.gating,
        }


def oracle_value(family: str, n: int, p: int, alpha: float, signless: bool = False) -> float:
    if signless:
        return 2.0 * quotient_matrix(FamilyParams(family, n, p), 0.5).largest_eigenvalue()
    return quotient_matrix(FamilyParams(family, n, p), alpha).largest_eigenvalue()


def check_formula(name: str, n: int, p: int, alpha: float) -> ClosedFormReport:
    """Evaluate a printed formula and compare it with the quotient oracle.

    A printed formula that cannot be evaluated (negative discriminant, no root
    in the bracket) is reported with a NaN value rather than raised.
    """
    f = FORMULAS[name]
    if not f.applies(n, p):
        raise ParameterError(f"{name} does not apply at n={n}, p={p}")
    a = 0.5 if f.signless else float(alpha)
    try:
        printed = f.evaluate(n, p, a)
    except NumericError:
        printed = math.nan
    oracle = oracle_value(f.family, n, p, a, f.signless)
    delta = printed - oracle
    verdict = "Match" if abs(delta) <= MATCH_TOL else "SuspectedTypo"
    return ClosedFormReport(name, n, p, a, printed, oracle, delta, verdict, f.gating)


def _case_formula(table: dict, case: str, n: int, p: int) -> str:
    if case not in table:
        raise ParameterError(f"case must be one of i, ii, iii; got {case!r}")
    options = table[case]
    return options[None] if None in options else options[(n - p) % 2]


def theorem_value(case: str, n: int, p: int, alpha: float) -> ClosedFormReport:
    return check_formula(_case_formula(THEOREM_FORMULAS, case, n, p), n, p, alpha)


def signless_theorem_value(case: str, n: int, p: int) -> ClosedFormReport:
    """The alpha = 1/2 (signless Laplacian, q = 2 rho) version of :func:`theorem_value`."""
    return check_formula(_case_formula(SIGNLESS_FORMULAS, case, n, p), n, p, 0.5)
