import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxric.linalg import (
    JACOBI_MAX_ORDER,
    jacobi_eigh,
    sym_eigen,
    symmetrized,
)

EIG_TOL = 1e-10


def _random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2.0


@settings(max_examples=40, deadline=None)
@given(n=st.integers(min_value=1, max_value=JACOBI_MAX_ORDER),
       seed=st.integers(min_value=0, max_value=10_000))
def test_jacobi_matches_lapack(n, seed):
    a = _random_symmetric(n, seed)
    ours = jacobi_eigh(a.copy())
    ref = np.linalg.eigvalsh(a)
    assert np.max(np.abs(ours - ref)) < EIG_TOL * max(1.0, np.abs(ref).max())


def test_eigenvalues_ascending():
    a = _random_symmetric(12, 3)
    evals = sym_eigen(a)
    assert np.all(np.diff(evals) >= 0)


def test_eigenvectors_satisfy_definition():
    a = _random_symmetric(10, 7)
    evals, evecs = sym_eigen(a, vectors=True)
    for k in range(10):
        v = evecs[:, k]
        assert np.allclose(a @ v, evals[k] * v, atol=1e-9)
    # orthonormal basis
    assert np.allclose(evecs.T @ evecs, np.eye(10), atol=1e-9)


def test_dispatch_above_jacobi_order():
    n = JACOBI_MAX_ORDER + 5
    a = _random_symmetric(n, 11)
    evals = sym_eigen(a)
    assert np.allclose(evals, np.linalg.eigvalsh(a), atol=1e-9)


def test_symmetrized_rejects_lopsided_input():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        symmetrized(a)


def test_symmetrized_cleans_roundoff():
    a = _random_symmetric(6, 5)
    noisy = a + np.triu(np.full((6, 6), 1e-15), k=1)
    b = symmetrized(noisy)
    assert np.array_equal(b, b.T)


def test_known_spectrum():
    # 2x2 with eigenvalues 1 and 3
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    evals = sym_eigen(a)
    assert np.allclose(evals, [1.0, 3.0], atol=1e-14)
