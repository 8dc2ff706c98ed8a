import math

import pytest
from hypothesis import given

from monogenica.core import I, MultiPoly, x1, x2, x3, y0, z, z_bar
from monogenica.errors import SpaceMismatch
from monogenica.sl2 import (h12, h23, h31, harmonic_basis, harmonic_primitive, iterate,
                            laplacian, op_H, op_Xminus, op_Xplus)

from conftest import polys


def test_H_examples():
    assert op_H(z_bar) == z_bar
    assert op_H(x3).is_zero()
    assert op_H(z) == -z


def test_Xplus_examples():
    for k in range(4):
        assert op_Xplus(z_bar ** k / (math.factorial(k) * 2 ** k)).is_zero()
    assert op_Xplus(x3) == z_bar
    assert op_Xplus(MultiPoly.constant(5)).is_zero()


def test_Xminus_examples():
    assert op_Xminus(z_bar / 2) == x3
    assert op_Xminus(x3) == -z
    assert op_Xminus(MultiPoly.constant(3)).is_zero()


def test_operators_reject_y_space():
    for op in (op_H, op_Xplus, op_Xminus, laplacian):
        with pytest.raises(SpaceMismatch):
            op(y0)


def test_primitive_examples():
    assert harmonic_primitive(0) == 1
    assert harmonic_primitive(1) == (x1 - I * x2) / 2
    assert harmonic_primitive(2) == (x1 ** 2 - (x1 * x2).scale(2 * I) - x2 ** 2) / 8


def test_basis_examples():
    assert [e.poly for e in harmonic_basis(0)] == [MultiPoly.constant(1)]
    assert [e.poly for e in harmonic_basis(1)] == [(x1 - I * x2) / 2, x3, -(x1 + I * x2)]
    basis = harmonic_basis(2)
    assert len(basis) == 5
    for e, w in zip(basis, [2, 1, 0, -1, -2]):
        assert op_H(e.poly) == e.poly.scale(w)


def test_laplacian_examples():
    assert laplacian(x1 ** 2 - x2 ** 2).is_zero()
    assert laplacian(x1 ** 2) == 2
    assert laplacian(harmonic_basis(3)[4].poly).is_zero()


@pytest.mark.parametrize("k", range(13))
def test_harmonic_basis_invariants(k):
    basis = harmonic_basis(k)
    assert len(basis) == 2 * k + 1
    for e in basis:
        assert not e.poly.is_zero()
        assert e.poly.is_homogeneous(k)
        assert laplacian(e.poly).is_zero()
        assert op_H(e.poly) == e.poly.scale(k - e.j)
    assert op_Xminus(basis[-1].poly).is_zero()
    assert iterate(op_Xminus, 2 * k + 1, basis[0].poly).is_zero()


def _comm(a, b, p):
    return a(b(p)) - b(a(p))


@given(polys())
def test_sl2_commutators(p):
    assert _comm(op_Xplus, op_Xminus, p) == op_H(p).scale(2)
    assert _comm(op_H, op_Xplus, p) == op_Xplus(p)
    assert _comm(op_H, op_Xminus, p) == -op_Xminus(p)


@given(polys())
def test_rotation_commutators(p):
    assert _comm(h12, h23, p) == h31(p)
    assert _comm(h23, h31, p) == h12(p)
    assert _comm(h31, h12, p) == h23(p)


@given(polys())
def test_ladder_definitions_match_rotations(p):
    # X+ = h31 + i h23, X- = -h31 + i h23
    assert op_Xplus(p) == h31(p) + h23(p).scale(I)
    assert op_Xminus(p) == -h31(p) + h23(p).scale(I)
