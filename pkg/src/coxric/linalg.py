"""Dense symmetric eigensolver.

Two routes behind one entry point: a self-contained cyclic Jacobi
iteration for small orders (all curvature forms and rank-sized Gram
matrices land here) and LAPACK via ``numpy.linalg.eigh`` for the large
graph Laplacians, where sweeping 2x2 rotations from Python would take
minutes.  Both return eigenvalues in ascending order.
"""

from __future__ import annotations

import numpy as np

#: Largest order solved by the cyclic Jacobi route.
JACOBI_MAX_ORDER = 16

#: Asymmetry below this is averaged away; anything larger is an error.
SYMMETRY_TOL = 1e-12

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class NonConvergenceError(RuntimeError):
    """Jacobi sweeps did not reach the requested tolerance."""


def symmetrized(a, max_deviation: float = SYMMETRY_TOL) -> np.ndarray:
    """Validate and return the symmetric average of a square matrix.

    Deviation up to ``max_deviation`` is treated as accumulation noise;
    more than that is a caller bug and raises.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    deviation = np.abs(a - a.T).max() if a.size else 0.0
    if deviation > max_deviation:
        raise ValueError(f"matrix asymmetry {deviation:.3e} exceeds {max_deviation:.1e}")
    return (a + a.T) / 2.0


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt((off * off).sum()))


def jacobi_eigh(a, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS,
                vectors: bool = False):
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Sweeps rotate every off-diagonal pair (p, q) in row order until the
    off-diagonal Frobenius norm falls below ``tol * (1 + max |diag|)``.
    Returns ascending eigenvalues, plus the orthonormal eigenvector
    columns when ``vectors`` is set.
    """
    a = symmetrized(a).copy()
    n = a.shape[0]
    v = np.eye(n)
    if n > 1:
        for _ in range(max_sweeps):
            threshold = tol * (1.0 + np.abs(np.diag(a)).max())
            if _offdiag_norm(a) <= threshold:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= 1e-300:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    rp, rq = a[p, :].copy(), a[q, :].copy()
                    a[p, :] = c * rp - s * rq
                    a[q, :] = s * rp + c * rq
                    cp, cq = a[:, p].copy(), a[:, q].copy()
                    a[:, p] = c * cp - s * cq
                    a[:, q] = s * cp + c * cq
                    a[p, q] = a[q, p] = 0.0
                    vp, vq = v[:, p].copy(), v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        else:
            raise NonConvergenceError(
                f"no convergence after {max_sweeps} Jacobi sweeps "
                f"(off-diagonal norm {_offdiag_norm(a):.3e})"
            )
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    if vectors:
        return eigenvalues, v[:, order]
    return eigenvalues


def sym_eigen(a, tol: float = DEFAULT_TOL, vectors: bool = False,
              max_sweeps: int = MAX_SWEEPS):
    """Eigendecompose a symmetric matrix; ascending eigenvalues.

    Dispatches to :func:`jacobi_eigh` up to order ``JACOBI_MAX_ORDER``
    and to LAPACK beyond it.
    """
    a = symmetrized(a)
    if a.shape[0] <= JACOBI_MAX_ORDER:
        return jacobi_eigh(a, tol=tol, max_sweeps=max_sweeps, vectors=vectors)
    if vectors:
        w, v = np.linalg.eigh(a)
        return w, v
    return np.linalg.eigvalsh(a)
