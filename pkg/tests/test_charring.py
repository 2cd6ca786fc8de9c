"""Character ring: orbit basis, Freudenthal multiplicities, Weyl formulas."""

import pytest

from thetasummands.charring import (CharElem, char_from_json,
                                    decompose_into_irreducibles,
                                    freudenthal_character, multiply,
                                    orbit_char, tensor_decompose, unit_char,
                                    weight_system, weyl_character_direct,
                                    weyl_dimension)
from thetasummands.errors import InvalidInputError, ResourceCapError
from thetasummands.rootsys import E6, SlA, SpC, build_root_system


@pytest.fixture(scope="module")
def c2():
    return build_root_system(SpC(2))


@pytest.fixture(scope="module")
def sl4():
    return build_root_system(SlA(2))


def test_char_elem_normalizes(c2):
    x = CharElem(c2, {(1, 0): 2, (0, 0): 0})
    assert x.coeffs == {(1, 0): 2}
    assert x.dimension() == 8
    with pytest.raises(InvalidInputError):
        CharElem(c2, {(0, 1): 1})


def test_char_arithmetic(c2):
    a, b = orbit_char(c2, (1, 0)), orbit_char(c2, (1, 1))
    assert (a + b - a) == b
    assert a.scale(3).dimension() == 12
    assert (a - a).is_zero
    assert not (a - b).is_effective


def test_char_json_roundtrip(c2):
    x = orbit_char(c2, (2, 1)) + unit_char(c2).scale(-3)
    assert char_from_json(c2, x.to_json()) == x


def test_multiply_standard_squared(c2):
    # We_(1,0) * We_(1,0) = We_(2,0) + 2 We_(1,1) + 4 We_(0,0)
    x = orbit_char(c2, (1, 0))
    sq = multiply(x, x)
    assert sq.coeffs == {(2, 0): 1, (1, 1): 2, (0, 0): 4}
    assert sq.dimension() == 16


def test_multiply_cap(c2):
    x = orbit_char(c2, (3, 2))
    with pytest.raises(ResourceCapError):
        multiply(x, x, cap=5)


def test_weight_system_c2(c2):
    ws = weight_system(c2, (1, 1))
    # weights of the 5-dimensional irreducible: orbit of (1,1) plus 0
    assert ws == {(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0)}


def test_freudenthal_known_multiplicities(c2):
    # adjoint of Sp4: dimension 10, zero weight multiplicity 2
    ch = freudenthal_character(c2, (2, 0))
    assert ch.coeffs == {(2, 0): 1, (1, 1): 1, (0, 0): 2}
    assert ch.dimension() == 10


def test_freudenthal_sl4(sl4):
    # adjoint of Sl4: dimension 15, zero weight multiplicity 3
    ch = freudenthal_character(sl4, (2, 1, 1, 0))
    assert ch.dimension() == 15
    assert ch.coeffs[(0, 0, 0, 0)] == 3


def test_weyl_dimension_values(c2, sl4):
    assert weyl_dimension(c2, (1, 0)) == 4
    assert weyl_dimension(c2, (1, 1)) == 5
    assert weyl_dimension(c2, (2, 0)) == 10
    assert weyl_dimension(c2, (2, 1)) == 16
    assert weyl_dimension(sl4, (1, 0, 0, 0)) == 4
    assert weyl_dimension(sl4, (1, 1, 0, 0)) == 6
    assert weyl_dimension(sl4, (2, 1, 1, 0)) == 15


def test_weyl_dimension_e6():
    rs = build_root_system(E6)
    assert weyl_dimension(rs, (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dimension(rs, (0, 0, 0, 0, 0, 1)) == 27
    assert weyl_dimension(rs, (0, 1, 0, 0, 0, 0)) == 78


def test_character_oracle_agreement(c2, sl4):
    for rs, lam in ((c2, (2, 1)), (c2, (3, 1)), (sl4, (2, 1, 0, 0)),
                    (sl4, (2, 1, 1, 0))):
        assert freudenthal_character(rs, lam) == weyl_character_direct(rs, lam)


def test_character_oracle_group_cap():
    rs = build_root_system(E6)
    with pytest.raises(ResourceCapError):
        weyl_character_direct(rs, (1, 0, 0, 0, 0, 0))


def test_freudenthal_dimension_consistency(c2):
    for lam in ((3, 0), (2, 2), (3, 2)):
        assert freudenthal_character(c2, lam).dimension() == weyl_dimension(c2, lam)


def test_decompose_roundtrip(c2):
    x = (freudenthal_character(c2, (2, 1))
         + freudenthal_character(c2, (1, 0)).scale(2))
    dec = decompose_into_irreducibles(x)
    assert dec.coeffs == {(2, 1): 1, (1, 0): 2}
    assert dec.to_char() == x


def test_tensor_standard_squared(c2):
    # V_(1,0) x V_(1,0) = V_(2,0) + V_(1,1) + V_(0,0)  (4 x 4 = 10 + 5 + 1)
    dec = tensor_decompose(c2, (1, 0), (1, 0))
    assert dec.coeffs == {(2, 0): 1, (1, 1): 1, (0, 0): 1}
    assert dec.dimension() == 16


def test_tensor_sl4(sl4):
    # standard x dual = adjoint + trivial
    dual = (1, 1, 1, 0)
    dec = tensor_decompose(sl4, (1, 0, 0, 0), dual)
    assert dec.coeffs == {(1, 0, 0, -1): 1, (0, 0, 0, 0): 1}


def test_mixing_systems_rejected(c2, sl4):
    with pytest.raises(InvalidInputError):
        multiply(orbit_char(c2, (1, 0)), orbit_char(sl4, (1, 0, 0, 0)))
