"""Discrete curvature operators and exact local Ricci bounds.

The operators follow the Bakry-Emery pattern on graphs:

    delta f(x)  = sum over neighbors v of (f(v) - f(x))
    Gamma(f,h)  = half the sum of (f(x)-f(v)) (h(x)-h(v))
    Gamma2(f)   = half delta Gamma(f,f) - Gamma(f, delta f)

``gamma2_formula`` is the closed form of 2*Gamma2 for f(x) = 0: a
square over the second sphere, the squared neighbor sum, a term per
edge inside the first sphere, and a degree correction.  Everything
Gamma2 reads lives within distance 2 of x, so the local curvature

    Ric_x = max { K : Gamma2(f)(x) >= K * Gamma(f)(x) for all f }

reduces to a finite eigenvalue problem: eliminate the second-sphere
values at their optimum (each appears in a single separable square) and
take the least eigenvalue of the remaining quadratic form in the
neighbor values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .graphs import Graph

MINIMIZER_CHECK_TOL = 1e-8
SIGN_TOL = 1e-12


@dataclass(frozen=True)
class LocalFunction:
    """Function germ at ``base``: values on the two-ball, zero elsewhere."""

    base: int
    values: dict[int, float]

    def to_array(self, g: Graph) -> np.ndarray:
        f = np.zeros(g.n)
        for v, val in self.values.items():
            f[v] = val
        return f


@dataclass
class CurvatureReport:
    vertex: int
    ric: float
    minimizer: LocalFunction
    form_order: int
    solver: str
    solver_tol: float
    eigenvalues: np.ndarray = field(repr=False)


@dataclass
class GlobalCurvatureReport:
    ric: float
    argmin: int
    transitive: bool
    locals: list[CurvatureReport] = field(repr=False)


def _as_values(f) -> np.ndarray:
    return np.asarray(f, dtype=float)


def delta_op(g: Graph, f, x: int) -> float:
    f = _as_values(f)
    nbrs = list(g.adj[x])
    return float(f[nbrs].sum() - g.degree(x) * f[x])


def gamma_op(g: Graph, f, h, x: int) -> float:
    f = _as_values(f)
    h = _as_values(h)
    nbrs = list(g.adj[x])
    return 0.5 * float(((f[x] - f[nbrs]) * (h[x] - h[nbrs])).sum())


def gamma2_def(g: Graph, f, x: int) -> float:
    """Gamma2 evaluated strictly from the definition.

    Reads f only on the two-ball around x.
    """
    f = _as_values(f)
    gamma_ff = np.zeros(g.n)
    delta_f = np.zeros(g.n)
    for y in [x, *g.adj[x]]:
        gamma_ff[y] = gamma_op(g, f, f, y)
        delta_f[y] = delta_op(g, f, y)
    return 0.5 * delta_op(g, gamma_ff, x) - gamma_op(g, f, delta_f, x)


def gamma2_formula(g: Graph, f, x: int, include_triangle_term: bool = True) -> float:
    """Closed form of Gamma2 at x, valid when f(x) = 0.

    The triangle term collects the edges inside the first sphere; on a
    triangle-free graph it is empty and may be dropped.
    """
    f = _as_values(f)
    if f[x] != 0.0:
        raise ValueError("the closed form requires f(x) = 0")
    b1, b2 = g.two_ball(x)
    b1_set = g.neighbor_set(x)
    fb1 = f[list(b1)]

    total = (fb1.sum()) ** 2
    total += sum(
        (4.0 - g.degree(x) - g.degree(v)) / 2.0 * f[v] ** 2 for v in b1
    )
    for u in b2:
        for v in g.adj[u]:
            if v in b1_set:
                total += 0.5 * (f[u] - 2.0 * f[v]) ** 2
    if include_triangle_term:
        for v in b1:
            for w in g.adj[v]:
                if w > v and w in b1_set:
                    total += 2.0 * (f[v] - f[w]) ** 2 + 0.5 * (f[v] ** 2 + f[w] ** 2)
    return 0.5 * total


def local_patch(g: Graph, x: int):
    """First and second spheres plus the neighbor sets S_u = B(1,u) and B(1,x).

    Returns (b1, b2, s_sets) where s_sets[k] lists positions within b1
    of the common neighbors of x and b2[k].
    """
    b1, b2 = g.two_ball(x)
    pos = {v: i for i, v in enumerate(b1)}
    s_sets = []
    b1_set = g.neighbor_set(x)
    for u in b2:
        s_sets.append(tuple(pos[v] for v in g.adj[u] if v in b1_set))
    return b1, b2, s_sets


def assemble_reduced_form(g: Graph, x: int) -> np.ndarray:
    """Symmetric M with min over second-sphere values of 2*Gamma2 = y' M y.

    y is f on the neighbors of x (f(x) = 0).  Each second-sphere value
    z_u enters 2*Gamma2 only through (1/2) sum over S_u of (z_u-2y_v)^2,
    so it is eliminated at z_u* = (2/n_u) sum over S_u of y_v; the other
    terms of the closed form are quadratic in y already.
    """
    b1, b2, s_sets = local_patch(g, x)
    d = len(b1)
    if d == 0:
        raise ValueError(f"vertex {x} is isolated; curvature is undefined")
    m = np.zeros((d, d))

    for s in s_sets:
        idx = np.array(s)
        m[idx, idx] += 2.0
        m[np.ix_(idx, idx)] -= 2.0 / len(idx)

    m += 1.0

    pos = {v: i for i, v in enumerate(b1)}
    b1_set = g.neighbor_set(x)
    for v in b1:
        for w in g.adj[v]:
            if w > v and w in b1_set:
                i, j = pos[v], pos[w]
                m[i, i] += 2.5
                m[j, j] += 2.5
                m[i, j] -= 2.0
                m[j, i] -= 2.0

    for v in b1:
        m[pos[v], pos[v]] += (4.0 - g.degree(x) - g.degree(v)) / 2.0
    return linalg.symmetrized(m)


def _extend_minimizer(g: Graph, x: int, y: np.ndarray) -> LocalFunction:
    b1, b2, s_sets = local_patch(g, x)
    values = {x: 0.0}
    for v, val in zip(b1, y):
        values[v] = float(val)
    for u, s in zip(b2, s_sets):
        values[u] = float(2.0 * y[list(s)].sum() / len(s))
    return LocalFunction(x, values)


def local_ricci(g: Graph, x: int, tol: float = linalg.DEFAULT_TOL) -> CurvatureReport:
    """Exact local curvature: least eigenvalue of the reduced form.

    Gamma(f)(x) is half the squared norm of y, so the Rayleigh quotient
    of M is exactly Gamma2/Gamma.

    The reported minimizer is normalized to Gamma(f)(x) = 1 with its
    first nonzero neighbor value positive.
    """
    m = assemble_reduced_form(g, x)
    evals, evecs = linalg.sym_eigen(m, tol=tol, vectors=True)
    y = evecs[:, 0]
    y = y * (np.sqrt(2.0) / np.linalg.norm(y))
    for val in y:
        if abs(val) > SIGN_TOL:
            if val < 0:
                y = -y
            break
    return CurvatureReport(
        vertex=x,
        ric=float(evals[0]),
        minimizer=_extend_minimizer(g, x, y),
        form_order=m.shape[0],
        solver="jacobi" if m.shape[0] <= linalg.JACOBI_MAX_ORDER else "lapack",
        solver_tol=tol,
        eigenvalues=evals,
    )


def global_ricci(g: Graph, transitive: bool = False,
                 vertices=None) -> GlobalCurvatureReport:
    """Minimum local curvature over the graph.

    With ``transitive=True`` the caller asserts a vertex-transitive
    graph and only the first vertex (or the supplied ones) is computed.
    """
    if g.n == 0:
        raise ValueError("empty graph has no curvature")
    if g.has_isolated_vertices():
        raise ValueError("curvature requires a graph with no isolated vertices")
    if vertices is None:
        vertices = [0] if transitive else range(g.n)
    reports = [local_ricci(g, x) for x in vertices]
    best = min(reports, key=lambda r: r.ric)
    return GlobalCurvatureReport(
        ric=best.ric,
        argmin=best.vertex,
        transitive=transitive,
        locals=reports,
    )


def pair_square_sum(f, vertices) -> float:
    """Sum of (f(v) - f(v'))^2 over unordered pairs from ``vertices``."""
    f = _as_values(f)
    y = f[list(vertices)]
    n = len(y)
    return float(n * (y ** 2).sum() - y.sum() ** 2)


def second_sphere_square_sum(g: Graph, f, x: int) -> float:
    """Sum over u in B(2,x) and v in B(1,u) and B(1,x) of (f(u)-2f(v))^2."""
    f = _as_values(f)
    b1, b2, s_sets = local_patch(g, x)
    fb1 = f[list(b1)]
    total = 0.0
    for u, s in zip(b2, s_sets):
        total += ((f[u] - 2.0 * fb1[list(s)]) ** 2).sum()
    return float(total)


def proof_inequalities(g: Graph, f, x: int) -> dict[str, float]:
    """Slacks of the two estimates used in the curvature lower bound.

    ``per_sphere``: for each u in B(2,x), the square sum over S_u
    dominates (4/n_u) times the pair sum over S_u; the reported value
    is the worst slack.  ``pair``: half the full second-sphere square
    sum dominates the pair sum over the whole first sphere.
    """
    f = _as_values(f)
    if f[x] != 0.0:
        raise ValueError("estimates assume f(x) = 0")
    b1, b2, s_sets = local_patch(g, x)
    fb1 = f[list(b1)]
    worst = np.inf
    total = 0.0
    if not s_sets:
        worst = 0.0
    for u, s in zip(b2, s_sets):
        idx = list(s)
        lhs = float(((f[u] - 2.0 * fb1[idx]) ** 2).sum())
        rhs = (4.0 / len(idx)) * pair_square_sum(fb1, idx)
        worst = min(worst, lhs - rhs)
        total += lhs
    pair_slack = 0.5 * total - pair_square_sum(f, b1)
    return {"per_sphere": float(worst), "pair": float(pair_slack)}
