import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxric.coxeter import CoxeterMatrix, parse_spec
from coxric.roots import generate_roots

# number of roots for each classical type
ROOT_COUNTS = {
    "A1": 2,
    "A2": 6,
    "A3": 12,
    "A4": 20,
    "B2": 8,
    "B3": 18,
    "B4": 32,
    "D4": 24,
    "F4": 48,
    "H3": 30,
    "I2(5)": 10,
    "I2(7)": 14,
}


@pytest.mark.parametrize("spec,count", sorted(ROOT_COUNTS.items()))
def test_root_counts(spec, count):
    rs = generate_roots(parse_spec(spec))
    assert rs.num_roots == count
    assert rs.num_positive == count // 2


def test_roots_are_unit_and_closed():
    rs = generate_roots(parse_spec("B3"))
    for i in range(rs.num_roots):
        assert abs(rs.inner(rs.coords[i], rs.coords[i]) - 1.0) < 1e-10
    # closure: reflecting any root in any simple root lands on a root
    for s in range(rs.rank):
        for i in range(rs.num_roots):
            j = rs.find_root(rs.reflect(rs.coords[i], s))
            assert j is not None


def test_positive_negative_layout():
    rs = generate_roots(parse_spec("A3"))
    for i in range(rs.num_positive):
        assert rs.is_positive(i)
        j = rs.neg_of(i)
        assert not rs.is_positive(j)
        assert np.allclose(rs.coords[i], -rs.coords[j])
        assert rs.neg_of(j) == i


def test_simple_roots_come_first():
    rs = generate_roots(parse_spec("B3"))
    expected = np.eye(3)
    assert np.allclose(rs.coords[:3], expected)


def test_reflection_perm_is_involution():
    rs = generate_roots(parse_spec("H3"))
    for r in range(rs.num_positive):
        p = rs.reflection_perm(r)
        assert np.array_equal(p[p], np.arange(rs.num_roots))
        # the defining root is sent to its negative
        assert p[r] == rs.neg_of(r)


def test_simple_reflection_permutes_other_positives():
    rs = generate_roots(parse_spec("A3"))
    for s in range(rs.rank):
        p = rs.reflection_perm(s)
        sent_negative = [i for i in range(rs.num_positive)
                         if not rs.is_positive(int(p[i]))]
        assert sent_negative == [s]


def test_infinite_type_rejected():
    cm = CoxeterMatrix([[1, float("inf")], [float("inf"), 1]])
    with pytest.raises(ValueError):
        generate_roots(cm)


@settings(max_examples=11, deadline=None)
@given(m=st.integers(min_value=2, max_value=12))
def test_rank_two_has_2m_roots(m):
    rs = generate_roots(CoxeterMatrix([[1, m], [m, 1]]))
    assert rs.num_roots == 2 * m
