"""Root system construction, coordinates, and exact linear algebra."""

from fractions import Fraction

import pytest

from thetasummands.errors import InvalidInputError
from thetasummands.rootsys import (E6, SlA, SpC, build_root_system,
                                   convert_coordinates, parse_kind,
                                   weight_from_dynkin)


def test_parse_kind():
    assert parse_kind("C3") == SpC(3)
    assert parse_kind("SL6") == SlA(3)
    assert parse_kind("A5") == SlA(3)
    assert parse_kind("e6") == E6
    for bad in ("B2", "SL5", "A4", "C0", "X"):
        with pytest.raises(InvalidInputError):
            parse_kind(bad)


def test_kind_str():
    assert str(SpC(3)) == "C3"
    assert str(SlA(3)) == "A5"
    assert str(E6) == "E6"


def test_c2_cartan_matrix():
    rs = build_root_system(SpC(2))
    assert rs.cartan == ((2, -1), (-2, 2))


def test_c2_simple_roots_and_rho():
    rs = build_root_system(SpC(2))
    assert rs.simple_roots == ((1, -1), (0, 2))
    assert rs.weyl_vector_rho == (2, 1)
    assert set(rs.positive_roots) == {(1, -1), (0, 2), (1, 1), (2, 0)}


def test_positive_root_counts():
    # n^2 for C_n, n(2n-1) for A_{2n-1}, 36 for E6
    assert len(build_root_system(SpC(3)).positive_roots) == 9
    assert len(build_root_system(SlA(2)).positive_roots) == 6
    assert len(build_root_system(SlA(3)).positive_roots) == 15
    assert len(build_root_system(E6).positive_roots) == 36


def test_a_normalization():
    rs = build_root_system(SlA(2))
    # representatives differ by multiples of (1,1,1,1)
    assert rs.normalize((2, 1, 1, 0)) == (1, 0, 0, -1)
    assert rs.normalize((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert rs.equal_weights((5, 5, 5, 5), (0, 0, 0, 0))
    assert rs.add((1, 0, 0, -1), (1, 0, 0, -1)) == (2, 0, 0, -2)


def test_dynkin_labels_c():
    rs = build_root_system(SpC(3))
    assert rs.dynkin_labels((2, 1, 1)) == (1, 0, 1)
    assert rs.dynkin_labels(rs.weyl_vector_rho) == (1, 1, 1)


def test_dynkin_labels_a_and_e6():
    rsa = build_root_system(SlA(2))
    assert rsa.dynkin_labels((1, 0, 0, -1)) == (1, 0, 1)
    rs6 = build_root_system(E6)
    assert rs6.dynkin_labels(rs6.weyl_vector_rho) == (1, 1, 1, 1, 1, 1)


def test_root_basis_coords_c2():
    rs = build_root_system(SpC(2))
    # (3,0) - (2,1) = (1,-1) = 1*alpha_1 + 0*alpha_2
    diff = rs.sub((3, 0), (2, 1))
    assert rs.root_basis_coords(diff) == (Fraction(1), Fraction(0))
    # fundamental weight (1,1) = alpha_1 + alpha_2
    assert rs.root_basis_coords((1, 1)) == (Fraction(1), Fraction(1))


def test_cartan_inverse_exact():
    for kind in (SpC(4), SlA(3), E6):
        rs = build_root_system(kind)
        r = rs.rank
        for i in range(r):
            for j in range(r):
                entry = sum(rs.cartan[i][k] * rs.cartan_inv[k][j] for k in range(r))
                assert entry == (1 if i == j else 0)


def test_simple_root_dynkin_rows():
    # row i of the Cartan matrix = Dynkin labels of alpha_i
    for kind in (SpC(3), SlA(2), E6):
        rs = build_root_system(kind)
        for i, alpha in enumerate(rs.simple_roots):
            assert rs.dynkin_labels(alpha) == rs.cartan[i]


def test_inner_product_norms():
    rs = build_root_system(SpC(2))
    assert rs.inner((1, -1), (1, -1)) == 2  # short root
    assert rs.inner((0, 2), (0, 2)) == 4  # long root
    rs6 = build_root_system(E6)
    for alpha in rs6.simple_roots:
        assert rs6.inner(alpha, alpha) == 2


def test_inner_product_a_kind_mod_det():
    rs = build_root_system(SlA(2))
    w = (1, 0, 0, -1)
    shifted = tuple(c + 3 for c in w)
    v = (1, 1, 0, 0)
    assert rs.inner(w, v) == rs.inner(shifted, v)


def test_weight_from_dynkin_roundtrip():
    rs = build_root_system(SpC(3))
    for labels in ((1, 0, 0), (0, 1, 0), (2, 1, 3)):
        w = weight_from_dynkin(rs, labels)
        assert rs.dynkin_labels(w) == labels
    rsa = build_root_system(SlA(3))
    w = weight_from_dynkin(rsa, (1, 0, 2, 0, 1))
    assert rsa.dynkin_labels(w) == (1, 0, 2, 0, 1)


def test_convert_coordinates():
    rs = build_root_system(SpC(2))
    assert convert_coordinates(rs, (2, 1), "dynkin") == (1, 1)
    assert convert_coordinates(rs, (2, 1), "epsilon") == (2, 1)
    rs6 = build_root_system(E6)
    with pytest.raises(InvalidInputError):
        convert_coordinates(rs6, (1, 0, 0, 0, 0, 0), "epsilon")
    with pytest.raises(InvalidInputError):
        convert_coordinates(rs, (2, 1), "weird")


def test_fundamental_weights():
    rs = build_root_system(SpC(3))
    assert rs.fundamental_weights == ((1, 0, 0), (1, 1, 0), (1, 1, 1))
    rsa = build_root_system(SlA(2))
    assert rsa.fundamental_weights[0] == (1, 0, 0, 0)
    assert rsa.fundamental_weights[-1] == (0, 0, 0, -1)


def test_fundamental_group_exponent():
    assert build_root_system(SpC(5)).fundamental_group_exponent == 2
    assert build_root_system(SlA(3)).fundamental_group_exponent == 6
    assert build_root_system(E6).fundamental_group_exponent == 3
