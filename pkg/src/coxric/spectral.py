"""Laplacian spectrum, spectral gap, and the curvature comparison."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .graphs import Graph

SIZE_GUARD = 1500
FORCE_SIZE_LIMIT = 20_000
ZERO_THRESHOLD_SCALE = 1e-8
COMPARISON_TOL = 1e-8


class GraphTooLargeError(RuntimeError):
    """Dense eigensolve refused; pass force=True to override."""


@dataclass
class SpectralReport:
    n: int
    gap: float
    lambda_max: float
    zero_multiplicity: int
    connected: bool
    eigenvalues: np.ndarray = field(repr=False)


def laplacian(g: Graph) -> np.ndarray:
    """D - A: positive semidefinite, row sums zero."""
    m = np.zeros((g.n, g.n))
    us, vs = g.edge_arrays()
    m[us, vs] = -1.0
    m[vs, us] = -1.0
    np.fill_diagonal(m, g.degrees())
    return m


def spectral_gap(g: Graph, force: bool = False,
                 tol: float = linalg.DEFAULT_TOL) -> SpectralReport:
    """Least nonzero Laplacian eigenvalue.

    Eigenvalues below 1e-8 * max(1, lambda_max) count as zero; their
    multiplicity is the number of connected components, so a value
    above 1 flags a disconnected graph.
    """
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    if g.n > FORCE_SIZE_LIMIT:
        raise GraphTooLargeError(
            f"{g.n} vertices exceeds the hard eigensolve limit of "
            f"{FORCE_SIZE_LIMIT}; force does not lift this one"
        )
    if g.n > SIZE_GUARD and not force:
        raise GraphTooLargeError(
            f"{g.n} vertices exceeds the dense eigensolve guard of {SIZE_GUARD}"
        )
    evals = np.asarray(linalg.sym_eigen(laplacian(g), tol=tol, vectors=False))
    lambda_max = float(evals[-1])
    threshold = ZERO_THRESHOLD_SCALE * max(1.0, lambda_max)
    zero_mult = int((evals < threshold).sum())
    if zero_mult == len(evals):
        raise ValueError("graph has no nonzero Laplacian eigenvalue")
    return SpectralReport(
        n=g.n,
        gap=float(evals[zero_mult]),
        lambda_max=lambda_max,
        zero_multiplicity=zero_mult,
        connected=zero_mult == 1,
        eigenvalues=evals,
    )


def check_gap_vs_ricci(report: SpectralReport, ric: float) -> dict:
    """PASS iff the theorem is vacuous (ric <= 0) or gap >= ric - 1e-8."""
    vacuous = ric <= 0.0
    passed = vacuous or report.gap >= ric - COMPARISON_TOL
    return {
        "gap": report.gap,
        "ric": ric,
        "vacuous": vacuous,
        "passed": passed,
    }
