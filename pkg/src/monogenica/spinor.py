"""Spinor-valued spherical monogenics in dimension 3.

A spinor polynomial is a pair ``(plus, minus)`` of x-space polynomials, the
components on v+ and v-.  Two realizations S4+ and S4- of the spinor space are
supported; they differ only in the sign with which omega^- sends v+ to v-.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import sl2
from .core import I, MultiPoly, z, x3
from .errors import DecompositionMismatch, IndexOutOfRange, RealizationMismatch


class Realization(str, Enum):
    PLUS = "S4+"
    MINUS = "S4-"

    @property
    def sign(self) -> int:
        return 1 if self is Realization.PLUS else -1

    @classmethod
    def parse(cls, value) -> "Realization":
        if isinstance(value, Realization):
            return value
        text = str(value).strip()
        aliases = {"+": "S4+", "plus": "S4+", "-": "S4-", "minus": "S4-"}
        return cls(aliases.get(text.lower(), text))


# omega^- v+ = OMEGA_SIGN[r] * v-, omega^- v- = 0
OMEGA_SIGN = {Realization.PLUS: 1, Realization.MINUS: -1}

# (x1, x2, x3) -> (-y2, y1, y0), rows index the source variables
MONOGENIC_SUBSTITUTION = ((0, 0, -1), (0, 1, 0), (1, 0, 0))


@dataclass(frozen=True)
class SpinorPoly:
    plus: MultiPoly
    minus: MultiPoly
    realization: Realization = Realization.PLUS

    def __post_init__(self):
        object.__setattr__(self, "realization", Realization.parse(self.realization))

    def _same(self, other: "SpinorPoly"):
        if self.realization != other.realization:
            raise RealizationMismatch(f"{self.realization.value} vs {other.realization.value}")

    def __add__(self, other: "SpinorPoly") -> "SpinorPoly":
        self._same(other)
        return SpinorPoly(self.plus + other.plus, self.minus + other.minus, self.realization)

    def __sub__(self, other: "SpinorPoly") -> "SpinorPoly":
        self._same(other)
        return SpinorPoly(self.plus - other.plus, self.minus - other.minus, self.realization)

    def __neg__(self):
        return SpinorPoly(-self.plus, -self.minus, self.realization)

    def __mul__(self, c):
        return SpinorPoly(self.plus.scale(c), self.minus.scale(c), self.realization)

    def __rmul__(self, other):
        # scalar polynomial times spinor
        if isinstance(other, MultiPoly):
            return SpinorPoly(other * self.plus, other * self.minus, self.realization)
        return self * other

    def map(self, op) -> "SpinorPoly":
        """Apply a scalar operator to both components."""
        return SpinorPoly(op(self.plus), op(self.minus), self.realization)

    def diff(self, var) -> "SpinorPoly":
        return self.map(lambda p: p.diff(var))

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def to_json(self) -> dict:
        return {
            "realization": self.realization.value,
            "plus": self.plus.to_json(),
            "minus": self.minus.to_json(),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SpinorPoly":
        return cls(MultiPoly.from_json(obj["plus"]), MultiPoly.from_json(obj["minus"]),
                   Realization.parse(obj["realization"]))

    def __str__(self):
        return f"({self.plus}, {self.minus}) [{self.realization.value}]"


def omega_minus(s: SpinorPoly) -> SpinorPoly:
    sign = OMEGA_SIGN[s.realization]
    return SpinorPoly(MultiPoly.zero(s.plus.space), s.plus.scale(sign), s.realization)


def op_Xminus_spinor(s: SpinorPoly) -> SpinorPoly:
    """The scalar lowering operator applied componentwise."""
    return s.map(sl2.op_Xminus)


def op_Xtilde_minus(s: SpinorPoly) -> SpinorPoly:
    return op_Xminus_spinor(s) + omega_minus(s)


def op_Htilde(s: SpinorPoly) -> SpinorPoly:
    half = Fraction(1, 2)
    return SpinorPoly(
        sl2.op_H(s.plus) + s.plus.scale(half),
        sl2.op_H(s.minus) - s.minus.scale(half),
        s.realization,
    )


def monogenic_primitive(k: int, realization=Realization.PLUS) -> SpinorPoly:
    return SpinorPoly(sl2.harmonic_primitive(k), MultiPoly.zero("x"), realization)


@lru_cache(maxsize=None)
def _monogenic_tuple(k: int, realization: Realization) -> tuple[SpinorPoly, ...]:
    elements = [monogenic_primitive(k, realization)]
    for _ in range(2 * k + 1):
        elements.append(op_Xtilde_minus(elements[-1]))
    return tuple(elements)


def monogenic_basis(k: int, realization=Realization.PLUS) -> list[SpinorPoly]:
    """F^k_j = (X~^-)^j F^k_0 for j = 0..2k+1."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return list(_monogenic_tuple(k, Realization.parse(realization)))


def monogenic_element(k: int, j: int, realization=Realization.PLUS) -> SpinorPoly:
    realization = Realization.parse(realization)
    if k < 0 or j < 0 or j > 2 * k + 1:
        zero = MultiPoly.zero("x")
        return SpinorPoly(zero, zero, realization)
    return _monogenic_tuple(k, realization)[j]


def decompose_against_harmonics(F: SpinorPoly, k: int, j: int) -> tuple[MultiPoly, MultiPoly]:
    """Check F = (f^k_j, +-j f^k_{j-1}) and return that pair.

    Raises DecompositionMismatch when either component disagrees.
    """
    if not 0 <= j <= 2 * k + 1:
        raise IndexOutOfRange(f"j={j} outside [0, {2 * k + 1}]")
    expected_plus = sl2.harmonic_element(k, j)
    expected_minus = sl2.harmonic_element(k, j - 1).scale(j * F.realization.sign)
    if F.plus != expected_plus:
        raise DecompositionMismatch(
            f"plus component of F^{k}_{j} is {F.plus}, expected f^{k}_{j} = {expected_plus}")
    if F.minus != expected_minus:
        raise DecompositionMismatch(
            f"minus component of F^{k}_{j} is {F.minus}, expected {expected_minus}")
    return expected_plus, expected_minus


def appell_derivative(F: SpinorPoly) -> SpinorPoly:
    return F.diff("x3")


def recurrence_step(Fkj: SpinorPoly, Fkjm1: SpinorPoly, Fk1j: SpinorPoly, j: int,
                    k: int | None = None) -> SpinorPoly:
    """x3 F^k_j - j z F^k_{j-1} + omega^- F^{k+1}_j, which equals F^{k+1}_{j+1}."""
    if k is None:
        k = max(Fkj.plus.degree, Fkj.minus.degree, 0)
    if not 0 <= j <= 2 * k + 1:
        raise IndexOutOfRange(f"j={j} outside [0, {2 * k + 1}]")
    return x3 * Fkj - (z * Fkjm1) * j + omega_minus(Fk1j)


def regenerate_next_degree(basis_k: list[SpinorPoly], k: int) -> list[SpinorPoly]:
    """Build F^{k+1}_0 .. F^{k+1}_{2k+3} from the degree-k basis by the recurrence.

    The last element uses j = 2k+2 with F^k_{2k+2} = 0.
    """
    realization = basis_k[0].realization
    zero = MultiPoly.zero("x")
    zero_spinor = SpinorPoly(zero, zero, realization)

    def old(j):
        return basis_k[j] if 0 <= j < len(basis_k) else zero_spinor

    new = [monogenic_primitive(k + 1, realization)]
    for j in range(0, 2 * k + 3):
        new.append(x3 * old(j) - (z * old(j - 1)) * j + omega_minus(new[j]))
    return new


def cr_residual(F: SpinorPoly) -> tuple[MultiPoly, MultiPoly]:
    """Residual of the matrix Cauchy-Riemann system after moving to y-space.

    Both returned polynomials vanish exactly iff F is monogenic.  The S4+
    realization is mapped onto S4- by negating its minus-component first.
    """
    minus = F.minus if F.realization is Realization.MINUS else -F.minus
    u = F.plus.substitute_linear(MONOGENIC_SUBSTITUTION, "y")
    w = minus.substitute_linear(MONOGENIC_SUBSTITUTION, "y")
    return cauchy_riemann_pair(u, w)


def cauchy_riemann_pair(top: MultiPoly, bottom: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """D applied to the column (top, bottom) through the 2x2 matrix units."""
    first = top.diff("y0") + bottom.diff("y1").scale(I) - bottom.diff("y2")
    second = top.diff("y1").scale(I) + top.diff("y2") + bottom.diff("y0")
    return first, second


def clear_caches():
    _monogenic_tuple.cache_clear()
