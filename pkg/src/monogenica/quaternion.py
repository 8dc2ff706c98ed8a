"""Quaternion-valued monogenics g^k_j in the variables (y0, y1, y2).

A quaternion q0 + q1 i1 + q2 i2 + q3 i3 is identified with the complex matrix

    [[q0 + i q3, -q2 + i q1],
     [q2 + i q1,  q0 - i q3]]

and each of its two columns is a C^2-valued polynomial (a :class:`ColumnPair`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import spinor
from .core import ComplexScalar, I, MultiPoly
from .errors import IndexOutOfRange, SpaceMismatch


@dataclass(frozen=True)
class ColumnPair:
    top: MultiPoly
    bottom: MultiPoly

    def __add__(self, other: "ColumnPair") -> "ColumnPair":
        return ColumnPair(self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: "ColumnPair") -> "ColumnPair":
        return ColumnPair(self.top - other.top, self.bottom - other.bottom)

    def __mul__(self, c) -> "ColumnPair":
        return ColumnPair(self.top.scale(c), self.bottom.scale(c))

    __rmul__ = __mul__

    def map(self, op) -> "ColumnPair":
        return ColumnPair(op(self.top), op(self.bottom))

    def is_zero(self) -> bool:
        return self.top.is_zero() and self.bottom.is_zero()

    @property
    def space(self) -> str:
        return self.top.space

    def to_json(self) -> dict:
        return {"top": self.top.to_json(), "bottom": self.bottom.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ColumnPair":
        return cls(MultiPoly.from_json(obj["top"]), MultiPoly.from_json(obj["bottom"]))

    def __str__(self):
        return f"({self.top}, {self.bottom})"


@dataclass(frozen=True)
class QuatPoly:
    """Quaternion with real-coefficient polynomial components on 1, i1, i2, i3."""

    e0: MultiPoly
    e1: MultiPoly
    e2: MultiPoly
    e3: MultiPoly

    def __post_init__(self):
        spaces = {c.space for c in self.components}
        if len(spaces) != 1:
            raise SpaceMismatch(f"quaternion components in several spaces {sorted(spaces)}")
        for c in self.components:
            if not c.is_real():
                raise ValueError(f"quaternion component {c} has non-real coefficients")

    @classmethod
    def constant(cls, q0=0, q1=0, q2=0, q3=0, space: str = "y") -> "QuatPoly":
        return cls(*(MultiPoly.constant(q, space) for q in (q0, q1, q2, q3)))

    @classmethod
    def from_scalar(cls, p: MultiPoly, unit: int = 0) -> "QuatPoly":
        """Embed a real polynomial as the coefficient of 1, i1, i2 or i3."""
        parts = [MultiPoly.zero(p.space)] * 4
        parts[unit] = p
        return cls(*parts)

    @property
    def components(self) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
        return (self.e0, self.e1, self.e2, self.e3)

    @property
    def space(self) -> str:
        return self.e0.space

    def __add__(self, other: "QuatPoly") -> "QuatPoly":
        return QuatPoly(*(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "QuatPoly") -> "QuatPoly":
        return QuatPoly(*(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return QuatPoly(*(-a for a in self.components))

    def scale(self, c) -> "QuatPoly":
        return QuatPoly(*(a.scale(c) for a in self.components))

    def __mul__(self, other):
        if isinstance(other, QuatPoly):
            return quat_mul(self, other)
        return self.scale(other)

    def conj(self) -> "QuatPoly":
        return QuatPoly(self.e0, -self.e1, -self.e2, -self.e3)

    def map(self, op) -> "QuatPoly":
        return QuatPoly(*(op(a) for a in self.components))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.components)

    def columns(self) -> tuple[ColumnPair, ColumnPair]:
        """The two columns of the 2x2 complex matrix of this quaternion."""
        q0, q1, q2, q3 = self.components
        first = ColumnPair(q0 + q3.scale(I), q2 + q1.scale(I))
        second = ColumnPair(-q2 + q1.scale(I), q0 - q3.scale(I))
        return first, second

    def to_json(self) -> dict:
        return {f"e{n}": c.to_json() for n, c in enumerate(self.components)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "QuatPoly":
        return cls(*(MultiPoly.from_json(obj[f"e{n}"]) for n in range(4)))

    def __str__(self):
        parts = []
        for unit, c in zip(("", "i1", "i2", "i3"), self.components):
            if c.is_zero():
                continue
            text = str(c)
            if unit:
                text = f"({text})*{unit}" if len(c) > 1 or text.startswith("-") else f"{text}*{unit}"
            parts.append(text)
        return " + ".join(parts) or "0"


def quat_mul(a: QuatPoly, b: QuatPoly) -> QuatPoly:
    """Hamilton product with i1 i2 = i3, i2 i3 = i1, i3 i1 = i2."""
    if a.space != b.space:
        raise SpaceMismatch(f"{a.space}-space vs {b.space}-space")
    a0, a1, a2, a3 = a.components
    b0, b1, b2, b3 = b.components
    return QuatPoly(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_power(q: QuatPoly, n: int) -> QuatPoly:
    result = QuatPoly.constant(1, space=q.space)
    for _ in range(n):
        result = quat_mul(result, q)
    return result


def from_column(h: ColumnPair) -> QuatPoly:
    """Real recombination Re top + i1 Im bottom + i2 Re bottom + i3 Im top."""
    return QuatPoly(h.top.real_part(), h.bottom.imag_part(), h.bottom.real_part(),
                    h.top.imag_part())


def c_constant(k: int, j: int) -> ComplexScalar:
    """(2i)^(k-j) k!/j!, the normalisation turning F^{k,-}_j into h^k_j."""
    return ComplexScalar(0, 2) ** (k - j) * Fraction(math.factorial(k), math.factorial(j))


def _check_range(k: int, j: int, top: int):
    if k < 0 or not 0 <= j <= top:
        raise IndexOutOfRange(f"(k, j) = ({k}, {j}) outside 0 <= j <= {top}")


@lru_cache(maxsize=None)
def _build_h(k: int, j: int) -> ColumnPair:
    F = spinor.monogenic_element(k, j, spinor.Realization.MINUS)
    sub = spinor.MONOGENIC_SUBSTITUTION
    c = c_constant(k, j)
    return ColumnPair(F.plus.substitute_linear(sub, "y").scale(c),
                      F.minus.substitute_linear(sub, "y").scale(c))


def build_h(k: int, j: int) -> ColumnPair:
    """h^k_j = c^k_j F^{k,-}_j(-y2, y1, y0), for 0 <= j <= 2k+1."""
    _check_range(k, j, 2 * k + 1)
    return _build_h(k, j)


def build_g(k: int, j: int) -> QuatPoly:
    """The quaternionic Appell basis element g^k_j, 0 <= j <= k."""
    _check_range(k, j, k)
    return from_column(_build_h(k, j))


def quaternion_basis(k: int) -> list[QuatPoly]:
    return [build_g(k, j) for j in range(k + 1)]


def cr_operator_D(h: ColumnPair) -> ColumnPair:
    return ColumnPair(*spinor.cauchy_riemann_pair(h.top, h.bottom))


def cr_operator_D_quat(g: QuatPoly) -> QuatPoly:
    """D g = dg/dy0 + i1 dg/dy1 + i2 dg/dy2 as a quaternion product."""
    i1 = QuatPoly.constant(0, 1, 0, 0, space=g.space)
    i2 = QuatPoly.constant(0, 0, 1, 0, space=g.space)
    return g.map(lambda p: p.diff("y0")) + quat_mul(i1, g.map(lambda p: p.diff("y1"))) \
        + quat_mul(i2, g.map(lambda p: p.diff("y2")))


def appell_derivative_g(g: QuatPoly) -> QuatPoly:
    return g.map(lambda p: p.diff("y0"))


def op_H_column(h: ColumnPair) -> ColumnPair:
    """-i (i3/2 + y2 d/dy1 - y1 d/dy2) acting on a column."""
    def rot(p: MultiPoly) -> MultiPoly:
        return (p.diff("y1").mul_var("y2") - p.diff("y2").mul_var("y1")).scale(-I)

    half = Fraction(1, 2)
    return ColumnPair(h.top.scale(half) + rot(h.top), -h.bottom.scale(half) + rot(h.bottom))


def weight_check_g(g: QuatPoly, expected_weight: Fraction) -> tuple[ColumnPair, ColumnPair]:
    """Residuals H h - w h for the first column and H h + w h for the second."""
    w = Fraction(expected_weight)
    first, second = g.columns()
    return op_H_column(first) - first * w, op_H_column(second) + second * w


def clear_caches():
    _build_h.cache_clear()
