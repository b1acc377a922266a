import math

import numpy as np
import pytest

from coxric.coxeter import (
    INFINITY,
    CoxeterMatrix,
    DegenerateTypeError,
    SpecError,
    bilinear_form,
    is_finite_type,
    parse_spec,
)


def test_parse_classical_types():
    assert parse_spec("A3").n == 3
    assert parse_spec("B4").n == 4
    assert parse_spec("D4").n == 4
    assert parse_spec("F4").n == 4
    assert parse_spec("H3").n == 3
    assert parse_spec("I2(7)").m[0][1] == 7


def test_parse_products_block_diagonal():
    cm = parse_spec("A1xA2")
    assert cm.n == 3
    assert cm.m[0][1] == 2 and cm.m[0][2] == 2
    assert cm.m[1][2] == 3
    assert cm.label == "A1xA2"


def test_parse_spec_tolerates_spaces():
    assert parse_spec(" B3 ") == parse_spec("B3")


@pytest.mark.parametrize("bad", ["", "Z9", "A0", "I2(1)", "AxB", "A2x", "D1"])
def test_parse_rejects_bad_specs(bad):
    with pytest.raises(SpecError):
        parse_spec(bad)


def test_matrix_validation():
    with pytest.raises(SpecError):
        CoxeterMatrix([[1, 3], [3, 1], [2, 2]])
    with pytest.raises(SpecError):
        CoxeterMatrix([[2, 3], [3, 1]])
    with pytest.raises(SpecError):
        CoxeterMatrix([[1, 3], [4, 1]])
    with pytest.raises(SpecError):
        CoxeterMatrix([[1, 1], [1, 1]])


def test_json_round_trip_uses_zero_for_infinity():
    cm = CoxeterMatrix([[1, INFINITY], [INFINITY, 1]])
    data = cm.to_json_dict()
    assert data == {"m": [[1, 0], [0, 1]]}
    assert CoxeterMatrix.from_json_dict(data) == cm


def test_key_distinguishes_types():
    assert parse_spec("A2").key() != parse_spec("B2").key()
    assert parse_spec("A2").key() == parse_spec("I2(3)").key()


def test_bilinear_form_values():
    b = bilinear_form(parse_spec("A2"))
    assert np.allclose(b, [[1, -0.5], [-0.5, 1]])
    b7 = bilinear_form(parse_spec("I2(7)"))
    assert math.isclose(b7[0][1], -math.cos(math.pi / 7), rel_tol=1e-15)
    binf = bilinear_form(CoxeterMatrix([[1, INFINITY], [INFINITY, 1]]))
    assert binf[0][1] == -1.0


@pytest.mark.parametrize("spec", ["A1", "A4", "B4", "D4", "F4", "H3", "H4",
                                  "I2(2)", "I2(12)", "A1xA2"])
def test_finite_types_recognized(spec):
    assert is_finite_type(parse_spec(spec))


def test_infinite_bond_is_not_finite():
    cm = CoxeterMatrix([[1, INFINITY], [INFINITY, 1]])
    assert is_finite_type(cm) is False


def test_degenerate_type_raises():
    # affine triangle: the form is positive semidefinite, not definite
    cm = CoxeterMatrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    with pytest.raises(DegenerateTypeError):
        is_finite_type(cm)


def test_indefinite_type_is_not_finite():
    cm = CoxeterMatrix([[1, 7, 7], [7, 1, 7], [7, 7, 1]])
    assert is_finite_type(cm) is False
