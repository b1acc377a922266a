import numpy as np
import pytest

from coxric import build_group, parse_spec
from coxric.curvature import (
    assemble_reduced_form,
    delta_op,
    gamma2_def,
    gamma2_formula,
    gamma_op,
    global_ricci,
    local_ricci,
    pair_square_sum,
    proof_inequalities,
)
from coxric.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    path_graph,
)

ORACLE_TOL = 1e-9
IDENTITY_TOL = 1e-10


def test_delta_and_gamma_by_hand():
    g = path_graph(3)
    f = [0.0, 1.0, 4.0]
    assert delta_op(g, f, 1) == pytest.approx(2.0)
    assert gamma_op(g, f, f, 1) == pytest.approx(5.0)
    # polarization: Gamma(f, h) = (Gamma(f+h) - Gamma(f) - Gamma(h)) / 2
    h = [2.0, -1.0, 0.5]
    fh = [a + b for a, b in zip(f, h)]
    lhs = gamma_op(g, f, h, 1)
    rhs = (gamma_op(g, fh, fh, 1) - gamma_op(g, f, f, 1)
           - gamma_op(g, h, h, 1)) / 2.0
    assert lhs == pytest.approx(rhs)


def test_gamma2_requires_zero_at_base():
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        gamma2_formula(g, [1.0, 0.0, 0.0, 0.0], 0)


def test_gamma2_def_is_shift_invariant():
    g = cycle_graph(5)
    rng = np.random.default_rng(2)
    f = rng.normal(size=5)
    for x in range(5):
        assert gamma2_def(g, f, x) == pytest.approx(
            gamma2_def(g, f + 0.731, x), abs=1e-10)


def test_gamma2_formula_matches_definition_with_triangles():
    rng = np.random.default_rng(5)
    found = 0
    while found < 10:
        n = int(rng.integers(5, 10))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        if g.is_triangle_free() or g.has_isolated_vertices():
            continue
        found += 1
        for _ in range(20):
            x = int(rng.integers(0, n))
            f = rng.normal(size=n)
            f[x] = 0.0
            a = gamma2_def(g, f, x)
            b = gamma2_formula(g, f, x)
            assert abs(a - b) <= IDENTITY_TOL * max(1.0, abs(a), abs(b))


# closed-form local curvatures worked out by hand
CURVATURE_ORACLES = [
    (complete_graph(2), 0, 2.0),
    (cycle_graph(4), 0, 2.0),
    (cycle_graph(5), 0, 0.0),
    (cycle_graph(6), 0, 0.0),
    (path_graph(3), 1, 0.5),
    (complete_graph(4), 0, 3.0),
]


@pytest.mark.parametrize("g,x,expected", CURVATURE_ORACLES)
def test_local_curvature_oracles(g, x, expected):
    assert local_ricci(g, x).ric == pytest.approx(expected, abs=ORACLE_TOL)


def test_path_center_form_is_known():
    # two neighbors, no second sphere: M = [[1.5, 1], [1, 1.5]]
    m = assemble_reduced_form(path_graph(3), 1)
    assert np.allclose(m, [[1.5, 1.0], [1.0, 1.5]])
    evals = local_ricci(path_graph(3), 1).eigenvalues
    assert np.allclose(evals, [0.5, 2.5])


def test_minimizer_achieves_the_minimum():
    """The reported minimizer is a certificate: Gamma = 1 and the
    Rayleigh quotient equals the returned curvature."""
    for g, x in [(cycle_graph(6), 2), (hypercube_graph(3), 5),
                 (complete_graph(4), 1)]:
        rep = local_ricci(g, x)
        f = rep.minimizer.to_array(g)
        assert gamma_op(g, f, f, x) == pytest.approx(1.0, abs=1e-9)
        assert gamma2_def(g, f, x) == pytest.approx(rep.ric, abs=1e-9)


def test_minimizer_sign_convention():
    y = local_ricci(cycle_graph(6), 0).minimizer
    first = [y.values[v] for v in sorted(y.values) if v != 0 and
             abs(y.values[v]) > 1e-12][0]
    assert first > 0


def test_local_equals_two_ball_restriction():
    g = hypercube_graph(3)
    for x in range(g.n):
        sub = g.two_ball_subgraph(x)
        assert local_ricci(g, x).ric == pytest.approx(
            local_ricci(sub, 0).ric, abs=IDENTITY_TOL)


def test_global_ricci_modes():
    g = cycle_graph(5)
    full = global_ricci(g)
    assert len(full.locals) == 5
    assert full.ric == pytest.approx(0.0, abs=ORACLE_TOL)
    fast = global_ricci(g, transitive=True)
    assert fast.transitive and len(fast.locals) == 1
    some = global_ricci(g, vertices=[1, 3])
    assert [r.vertex for r in some.locals] == [1, 3]


def test_global_ricci_rejects_degenerate_graphs():
    with pytest.raises(ValueError):
        global_ricci(Graph(0, []))
    with pytest.raises(ValueError):
        global_ricci(Graph(2, []))


def test_pair_square_sum():
    f = [0.0, 1.0, 3.0]
    # pairs: (0,1), (0,2), (1,2) -> 1 + 9 + 4
    assert pair_square_sum(f, [0, 1, 2]) == pytest.approx(14.0)


def test_per_sphere_estimate_holds_on_any_graph():
    g = cycle_graph(8)
    rng = np.random.default_rng(9)
    for _ in range(200):
        f = rng.normal(size=8)
        f[0] = 0.0
        assert proof_inequalities(g, f, 0)["per_sphere"] >= -1e-9


def test_pair_estimate_needs_shared_second_sphere_neighbors():
    # on C8, first-sphere vertices 1 and 7 have no common neighbor at
    # distance 2 from vertex 0, and the pair estimate fails there
    g = cycle_graph(8)
    f = np.zeros(8)
    f[1], f[7], f[2], f[6] = 1.0, -1.0, 2.0, -2.0
    assert proof_inequalities(g, f, 0)["pair"] < -1.0

    grp = build_group(parse_spec("I2(4)"))
    bruhat = grp.bruhat_graph()
    rng = np.random.default_rng(9)
    for _ in range(200):
        f = rng.normal(size=bruhat.n)
        f[grp.identity] = 0.0
        slacks = proof_inequalities(bruhat, f, grp.identity)
        assert slacks["per_sphere"] >= -1e-9
        assert slacks["pair"] >= -1e-9


def test_triangle_term_required_on_triangle_graphs():
    g = complete_graph(3)
    f = np.array([0.0, 1.0, -2.0])
    with_t = gamma2_formula(g, f, 0, include_triangle_term=True)
    without = gamma2_formula(g, f, 0, include_triangle_term=False)
    assert with_t == pytest.approx(gamma2_def(g, f, 0), abs=1e-12)
    assert with_t != pytest.approx(without, abs=1e-6)
