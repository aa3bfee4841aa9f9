"""
Cyclic Jacobi eigenvalue iteration for small dense symmetric matrices.

Each rotation zeroes one off-diagonal pair (p, q):
θ = (a_qq − a_pp)/(2a_pq), t = sgn(θ)/(|θ| + √(θ² + 1)), c = 1/√(t² + 1), s = tc.
Sweeps visit every pair in row order until the off-diagonal Frobenius norm
falls below ``tol`` times the full Frobenius norm.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ArgumentError, ConvergenceError
from ..utils.format import log_debug

_TINY = np.finfo(np.float64).tiny


def off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a)))) if a.size else 0.0


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        sign = 1.0 if theta >= 0 else -1.0
        t = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    ap = a[:, p].copy()
    aq = a[:, q].copy()
    a[:, p] = c * ap - s * aq
    a[:, q] = s * ap + c * aq

    ap = a[p, :].copy()
    aq = a[q, :].copy()
    a[p, :] = c * ap - s * aq
    a[q, :] = s * ap + c * aq

    a[p, q] = 0.0
    a[q, p] = 0.0


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = 1e-12,
    max_sweeps: int = 100,
) -> list[float]:
    """Eigenvalues of a real symmetric matrix, ascending.

    Raises ConvergenceError if ``max_sweeps`` sweeps leave the off-diagonal
    norm above ``tol``·‖A‖_F.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return []
    if not np.allclose(a, a.T, rtol=1e-10, atol=0.0):
        raise ArgumentError("Jacobi iteration needs a symmetric matrix")
    a = 0.5 * (a + a.T)

    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return [0.0] * n

    for sweep in range(max_sweeps + 1):
        off = off_diagonal_norm(a)
        if off <= tol * scale:
            log_debug(f"Jacobi converged: n={n}, sweeps={sweep}, off/‖A‖={off / scale:.2e}")
            return sorted(float(x) for x in np.diag(a))
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > _TINY:
                    _rotate(a, p, q)

    raise ConvergenceError(
        f"Jacobi did not converge in {max_sweeps} sweeps (n={n}, off/‖A‖={off / scale:.2e})"
    )
