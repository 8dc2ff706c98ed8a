from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from monogenica.core import I, MultiPoly, x1, x3, y0, y1, y2, z, z_bar
from monogenica.errors import DecompositionMismatch, IndexOutOfRange, RealizationMismatch
from monogenica.sl2 import harmonic_basis, iterate, op_Xminus
from monogenica.spinor import (Realization, SpinorPoly, appell_derivative, cr_residual,
                               decompose_against_harmonics, monogenic_basis, monogenic_element,
                               monogenic_primitive, omega_minus, op_Htilde, op_Xminus_spinor,
                               op_Xtilde_minus, recurrence_step, regenerate_next_degree)

from conftest import polys

P, M = Realization.PLUS, Realization.MINUS
ZERO = MultiPoly.zero()
ONE = MultiPoly.constant(1)


def sp(a, b, r=P):
    return SpinorPoly(MultiPoly.constant(a) if not isinstance(a, MultiPoly) else a,
                      MultiPoly.constant(b) if not isinstance(b, MultiPoly) else b, r)


spinors = st.builds(SpinorPoly, polys(), polys(), st.sampled_from(list(Realization)))


def test_omega_examples():
    assert omega_minus(sp(1, 0, P)) == sp(0, 1, P)
    assert omega_minus(sp(1, 0, M)) == sp(0, -1, M)
    for r in Realization:
        assert omega_minus(sp(0, x3, r)).is_zero()


def test_Xtilde_examples():
    assert op_Xtilde_minus(sp(1, 0)) == sp(0, 1)
    assert iterate(op_Xtilde_minus, 2, sp(1, 0)).is_zero()
    F10 = monogenic_primitive(1, P)
    assert op_Xtilde_minus(F10) == sp(x3, z_bar / 2)


def test_Htilde_examples():
    assert op_Htilde(sp(1, 0)) == sp(Fraction(1, 2), 0)
    assert op_Htilde(sp(0, 1)) == sp(0, Fraction(-1, 2))
    F11 = sp(x3, z_bar / 2)
    assert op_Htilde(F11) == F11 * Fraction(1, 2)


def test_primitive_examples():
    assert monogenic_primitive(0) == sp(1, 0)
    assert monogenic_primitive(1) == sp((x1 - I * MultiPoly.var("x2")) / 2, 0)
    assert monogenic_primitive(2, M) == sp(z_bar ** 2 / 8, 0, M)


def test_basis_examples():
    assert monogenic_basis(0, P) == [sp(1, 0), sp(0, 1)]
    plus = [sp(z_bar / 2, 0), sp(x3, z_bar / 2), sp(-z, x3.scale(2)), sp(0, z.scale(-3))]
    assert monogenic_basis(1, P) == plus
    minus = monogenic_basis(1, M)
    assert [F.plus for F in minus] == [F.plus for F in plus]
    assert [F.minus for F in minus] == [-F.minus for F in plus]


def test_decomposition_examples():
    F = monogenic_basis(1, P)
    assert decompose_against_harmonics(F[1], 1, 1) == (x3, z_bar / 2)
    assert decompose_against_harmonics(F[3], 1, 3) == (ZERO, z.scale(-3))
    for k in range(4):
        assert decompose_against_harmonics(monogenic_basis(k, M)[0], k, 0) == \
            (harmonic_basis(k)[0].poly, ZERO)


def test_decomposition_detects_mismatch():
    with pytest.raises(DecompositionMismatch):
        decompose_against_harmonics(sp(x3, -z_bar / 2, P), 1, 1)
    with pytest.raises(IndexOutOfRange):
        decompose_against_harmonics(sp(x3, 0), 1, 4)


def test_appell_examples():
    assert appell_derivative(sp(x3, z_bar / 2)) == sp(1, 0)
    for k in range(13):
        assert appell_derivative(monogenic_basis(k, P)[0]).is_zero()
    assert appell_derivative(sp(0, z.scale(-3))).is_zero()


def test_recurrence_examples():
    F0, F1 = monogenic_basis(0, P), monogenic_basis(1, P)
    assert recurrence_step(F0[0], sp(0, 0), F1[0], 0, k=0) == F1[1]
    assert recurrence_step(F0[1], F0[0], F1[1], 1, k=0) == F1[2]
    for k in range(4):
        Fk, Fk1 = monogenic_basis(k, M), monogenic_basis(k + 1, M)
        assert recurrence_step(Fk[0], sp(0, 0, M), Fk1[0], 0, k=k) == x3 * Fk[0] + omega_minus(Fk1[0])
    with pytest.raises(IndexOutOfRange):
        recurrence_step(F0[0], F0[0], F1[0], 2, k=0)


def test_cr_residual_examples():
    F = sp(x3, -z_bar / 2, M)
    first, second = cr_residual(F)
    assert first.is_zero() and second.is_zero()
    # the substituted components, computed by hand
    assert F.plus.substitute_linear(((0, 0, -1), (0, 1, 0), (1, 0, 0)), "y") == y0
    assert F.minus.substitute_linear(((0, 0, -1), (0, 1, 0), (1, 0, 0)), "y") == (y2 + I * y1) / 2
    for r in Realization:
        assert all(p.is_zero() for p in cr_residual(sp(7, -3, r)))
    first, second = cr_residual(sp(x1, 0))
    assert (first, second) != (MultiPoly.zero("y"), MultiPoly.zero("y"))
    assert second == -1


def test_realization_mismatch():
    with pytest.raises(RealizationMismatch):
        sp(1, 0, P) + sp(1, 0, M)


def test_json_roundtrip():
    F = monogenic_basis(2, M)[3]
    doc = F.to_json()
    assert doc["realization"] == "S4-"
    assert SpinorPoly.from_json(doc) == F


@pytest.mark.parametrize("r", list(Realization))
@pytest.mark.parametrize("k", range(13))
def test_basis_invariants(k, r):
    basis = monogenic_basis(k, r)
    assert len(basis) == 2 * k + 2
    for j, F in enumerate(basis):
        assert not F.is_zero()
        assert all(p.is_zero() for p in cr_residual(F))
        decompose_against_harmonics(F, k, j)
        assert op_Htilde(F) == F * Fraction(2 * k + 1 - 2 * j, 2)
        expected = monogenic_element(k - 1, j - 1, r) * j if 1 <= j <= 2 * k else F * 0
        assert appell_derivative(F) == expected
    assert op_Xtilde_minus(basis[-1]).is_zero()
    if k < 12:
        assert regenerate_next_degree(basis, k) == monogenic_basis(k + 1, r)


def test_non_monogenic_breaks_residual():
    # a harmonic but non-monogenic pair: wrong sign on the minus component
    for k in range(1, 5):
        F = monogenic_basis(k, P)[1]
        assert not all(p.is_zero() for p in cr_residual(SpinorPoly(F.plus, -F.minus, P)))


@given(spinors)
def test_omega_relations(s):
    assert omega_minus(omega_minus(s)).is_zero()
    assert op_Xminus_spinor(omega_minus(s)) == omega_minus(op_Xminus_spinor(s))


@given(spinors, st.integers(1, 6))
def test_xtilde_power_expansion(s, j):
    lhs = iterate(op_Xtilde_minus, j, s)
    rhs = iterate(op_Xminus_spinor, j, s) + iterate(op_Xminus_spinor, j - 1, omega_minus(s)) * j
    assert lhs == rhs


@given(spinors, st.integers(1, 6))
def test_x3_commutator(s, j):
    # [x3, (X~-)^j] = j (X~-)^(j-1) z
    lhs = x3 * iterate(op_Xtilde_minus, j, s) - iterate(op_Xtilde_minus, j, x3 * s)
    rhs = iterate(op_Xtilde_minus, j - 1, z * s) * j
    assert lhs == rhs


@given(polys())
def test_scalar_commutators_behind_the_appell_property(p):
    from monogenica.sl2 import d_zbar
    # [d/dx3, X-] = 2 d/dz_bar and [d/dz_bar, X-] = 0
    assert op_Xminus(p).diff("x3") - op_Xminus(p.diff("x3")) == d_zbar(p).scale(2)
    assert d_zbar(op_Xminus(p)) == op_Xminus(d_zbar(p))
