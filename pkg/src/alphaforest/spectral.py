"""Numeric A_alpha matrices and their spectral radius.

``A_alpha(G) = alpha * D(G) + (1 - alpha) * A(G)``. The largest eigenvalue is
found with a cyclic Jacobi eigensolver (round-robin ordering, so each step
applies ``n/2`` disjoint rotations at once). Disconnected graphs are solved
block by block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NumericError, ParameterError, PreconditionError
from .graph import Graph

OFFDIAG_TOL = 1e-12
RESIDUAL_TOL = 1e-8
MAX_SWEEPS = 60


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    vector: np.ndarray  # unit 2-norm, zero outside the attaining component
    residual: float  # inf-norm of A_alpha x - rho x
    component_index: int
    sweeps: int
    method: str

    def max_normalized(self) -> np.ndarray:
        """Perron vector scaled so its largest entry is 1."""
        return self.vector / np.max(np.abs(self.vector))


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def assemble_alpha(g: Graph, alpha: float) -> np.ndarray:
    alpha = check_alpha(alpha)
    a = g.adjacency_matrix()
    return alpha * np.diag(a.sum(axis=1)) + (1.0 - alpha) * a


def signless_laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix()
    return a + np.diag(a.sum(axis=1))


@lru_cache(maxsize=None)
def _schedule(m: int) -> tuple[tuple[np.ndarray, np.ndarray, np.ndarray], ...]:
    """Round-robin pairings of ``m`` (even) indices, ``m - 1`` rounds.

    Each round is ``(p, q, flat)`` where ``flat`` indexes the entries
    ``(p,p), (q,q), (p,q), (q,p)`` of a flattened ``m x m`` rotation matrix.
    """
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [tuple(sorted((players[i], players[m - 1 - i]))) for i in range(m // 2)]
        p = np.array([x for x, _ in pairs])
        q = np.array([y for _, y in pairs])
        flat = np.concatenate((p * m + p, q * m + q, p * m + q, q * m + p))
        rounds.append((p, q, flat))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _offdiag(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - np.diag(a.diagonal()))))


def jacobi_eigh(matrix: np.ndarray, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, sweeps)`` with eigenvectors in columns.
    Each round applies ``n/2`` disjoint rotations at once as one orthogonal
    matrix; the rotation angle is the small one, ``|phi| <= pi/4``.
    """
    a0 = np.array(matrix, dtype=float)
    n = a0.shape[0]
    if n == 1:
        return a0.diagonal().copy(), np.eye(1), 0
    m = n + (n % 2)
    # an odd order gets a decoupled zero row and column, dropped at the end
    a = np.zeros((m, m))
    a[:n, :n] = a0
    v = np.eye(m)
    scale = max(1.0, float(np.max(np.abs(a0))))
    rounds = _schedule(m)
    done = None
    for sweep in range(max_sweeps + 1):
        if _offdiag(a) <= tol * scale:
            done = sweep
            break
        if sweep == max_sweeps:
            break
        for p, q, flat in rounds:
            apq = a[p, q]
            if not apq.any():
                continue
            d = a.diagonal()
            diff = d[q] - d[p]
            sg = np.copysign(1.0, diff)
            # tan(2 phi) = 2 a_pq / (a_qq - a_pp), folded into [-pi/4, pi/4]
            phi = 0.5 * np.arctan2(2.0 * apq * sg, diff * sg)
            c, s = np.cos(phi), np.sin(phi)
            rot = np.zeros(m * m)
            rot[flat] = np.concatenate((c, c, s, -s))
            rot = rot.reshape(m, m)
            a = rot.T @ a @ rot
            v = v @ rot
    if done is None:
        raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps", residual=_offdiag(a))
    vals = a.diagonal().copy()
    if m != n:
        k = int(np.argmax(np.abs(v[n])))
        keep = np.arange(m) != k
        vals, v = vals[keep], v[:n][:, keep]
    return vals, v, done


def power_iteration(matrix: np.ndarray, tol: float = 1e-13, max_iter: int = 100000):
    """Largest eigenpair of a symmetric nonnegative matrix by shifted power iteration.

    The shift by the identity keeps bipartite (two-sided) spectra from oscillating.
    """
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    shifted = m + np.eye(n)
    x = np.ones(n) / np.sqrt(n)
    lam = 0.0
    for it in range(1, max_iter + 1):
        y = shifted @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0, x, it
        y /= norm
        lam = float(y @ m @ y)
        if np.max(np.abs(m @ y - lam * y)) <= tol * max(1.0, abs(lam)):
            return lam, y, it
        x = y
    raise NumericError("power iteration hit its iteration cap",
                       residual=float(np.max(np.abs(m @ x - lam * x))))


def _largest_pair(block: np.ndarray, method: str):
    if method == "jacobi":
        vals, vecs, sweeps = jacobi_eigh(block)
        k = int(np.argmax(vals))
        return float(vals[k]), vecs[:, k], sweeps
    if method == "eigh":
        vals, vecs = np.linalg.eigh(block)
        return float(vals[-1]), vecs[:, -1], 0
    if method == "power":
        return power_iteration(block)
    raise ParameterError(f"unknown method {method!r}")


def spectral_radius(g: Graph, alpha: float, method: str = "jacobi") -> SpectralResult:
    """Largest eigenvalue of ``A_alpha(g)`` with its Perron vector.

    For a disconnected graph the maximum over components is returned and the
    vector is supported on the first component attaining it.
    """
    if g.n < 1:
        raise ParameterError("spectral radius needs at least one vertex")
    full = assemble_alpha(g, alpha)
    best = None
    for idx, comp in enumerate(g.components()):
        if len(comp) == 1:
            rho, vec, sweeps = 0.0, np.ones(1), 0
        else:
            rho, vec, sweeps = _largest_pair(full[np.ix_(comp, comp)], method)
        if best is None or rho > best[0]:
            best = (rho, vec, sweeps, idx, comp)
    rho, vec, sweeps, idx, comp = best
    x = np.zeros(g.n)
    x[comp] = vec / np.linalg.norm(vec)
    if x.sum() < 0:
        x = -x
    residual = float(np.max(np.abs(full @ x - rho * x)))
    if residual > RESIDUAL_TOL * max(1.0, rho):
        raise NumericError(f"eigenpair residual {residual:.3e} above tolerance", residual=residual)
    return SpectralResult(rho, x, residual, idx, sweeps, method)


def rho_alpha(g: Graph, alpha: float, method: str = "jacobi") -> float:
    return spectral_radius(g, alpha, method).rho


def signless_radius(g: Graph) -> float:
    """q(G), the largest eigenvalue of A + D, i.e. twice rho at alpha = 1/2."""
    return 2.0 * rho_alpha(g, 0.5)


def rayleigh_value(g: Graph, alpha: float, x) -> float:
    """Quadratic form ``x^T A_alpha x`` written as a sum over edges.

    Each edge ``uv`` contributes ``alpha x_u^2 + 2(1-alpha) x_u x_v + alpha x_v^2``.
    """
    alpha = check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise PreconditionError(f"vector length {x.shape} does not match n={g.n}")
    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-12:
        raise PreconditionError("rayleigh_value needs a unit vector")
    return float(sum(alpha * x[u] ** 2 + 2 * (1 - alpha) * x[u] * x[v] + alpha * x[v] ** 2
                     for u, v in g.edges()))


def rayleigh_value_as_printed(g: Graph, alpha: float, x) -> float:
    """Edge sum with the cross term ``2(1-alpha) x_u`` (no ``x_v`` factor), ``u < v``.

    Kept only so the discrepancy report can show how far it is from the true form.
    """
    alpha = check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    return float(sum(alpha * x[u] ** 2 + 2 * (1 - alpha) * x[u] + alpha * x[v] ** 2
                     for u, v in g.edges()))
