"""Weyl orbits, dominant projection, signed orbits and group orders."""

from math import factorial

import pytest

from thetasummands.errors import InvalidInputError, ResourceCapError
from thetasummands.rootsys import E6, SlA, SpC, build_root_system
from thetasummands.weyl import (dominant_projection, is_dominant, orbit,
                                orbit_size, signed_orbit, weyl_group_order)


def test_is_dominant():
    rs = build_root_system(SpC(3))
    assert is_dominant(rs, (3, 1, 0))
    assert not is_dominant(rs, (1, 3, 0))
    assert not is_dominant(rs, (1, 0, -1))
    rsa = build_root_system(SlA(2))
    assert is_dominant(rsa, (2, 1, 0, -1))
    assert is_dominant(rsa, (5, 4, 3, 2))  # dominant after normalization
    assert not is_dominant(rsa, (0, 1, 0, 0))


def test_orbit_c2():
    rs = build_root_system(SpC(2))
    # signed permutations of (1,0): 4 elements
    orb = orbit(rs, (1, 0))
    assert orb.size == 4
    assert set(orb.elements) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    # (2,1): all signed permutations, 8 elements
    assert orbit_size(rs, (2, 1)) == 8
    assert orbit_size(rs, (0, 0)) == 1


def test_orbit_accepts_nondominant_input():
    rs = build_root_system(SpC(2))
    assert orbit(rs, (-1, 0)) == orbit(rs, (1, 0))
    assert orbit(rs, (-1, 0)).dominant_rep == (1, 0)


def test_orbit_a_kind():
    rs = build_root_system(SlA(2))
    # permutation orbit of (1,0,0,0) in Z^4 / det
    orb = orbit(rs, (1, 0, 0, 0))
    assert orb.size == 4
    assert (-1, -1, 0, -1) in set(orb.elements)  # = e_3 modulo det


def test_weyl_group_orders():
    assert weyl_group_order(build_root_system(SpC(2))) == 8
    assert weyl_group_order(build_root_system(SpC(3))) == 48
    assert weyl_group_order(build_root_system(SlA(2))) == factorial(4)
    assert weyl_group_order(build_root_system(SlA(3))) == factorial(6)


def test_orbit_sizes_divide_group_order():
    for kind in (SpC(3), SlA(2)):
        rs = build_root_system(kind)
        order = weyl_group_order(rs)
        for w in (rs.fundamental_weights + (rs.weyl_vector_rho,)):
            assert order % orbit_size(rs, w) == 0


def test_e6_minuscule_orbit():
    rs = build_root_system(E6)
    assert orbit_size(rs, (1, 0, 0, 0, 0, 0)) == 27
    assert orbit_size(rs, (0, 0, 0, 0, 0, 1)) == 27
    assert orbit_size(rs, (0, 1, 0, 0, 0, 0)) == 72  # the root orbit


def test_dominant_projection():
    rs = build_root_system(SpC(2))
    dom, length = dominant_projection(rs, (-1, 2))
    assert dom == (2, 1)
    assert length >= 1
    dom0, length0 = dominant_projection(rs, (2, 1))
    assert (dom0, length0) == ((2, 1), 0)


def test_orbit_cap():
    rs = build_root_system(SpC(3))
    with pytest.raises(ResourceCapError):
        orbit(rs, (3, 2, 1), cap=5)


def test_signed_orbit_rho():
    rs = build_root_system(SpC(2))
    signed = signed_orbit(rs, rs.weyl_vector_rho)
    assert len(signed) == 8
    assert signed[rs.weyl_vector_rho] == 1
    assert sum(signed.values()) == 0  # signs cancel in pairs


def test_signed_orbit_rejects_singular():
    rs = build_root_system(SpC(2))
    with pytest.raises(InvalidInputError):
        signed_orbit(rs, (1, 0))  # stabilized by a reflection
