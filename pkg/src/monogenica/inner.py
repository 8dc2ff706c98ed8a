"""Exact inner products: Fischer pairing, L2 on the unit ball of R^3, the
quaternion-valued ball product, and Gram matrices of basis families.

Every ball integral of a monomial is a rational multiple of pi, so L2 values
are carried as :class:`PiScaledRational` and stay exact.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .core import ComplexScalar, MultiPoly, _rational_json
from .errors import HeterogeneousFamily, SpaceMismatch
from .quaternion import ColumnPair, QuatPoly
from .spinor import SpinorPoly

FISCHER = "fischer"
L2BALL = "l2ball"
PRODUCTS = (FISCHER, L2BALL)


@dataclass(frozen=True)
class PiScaledRational:
    """The real number ``coeff * pi``."""

    coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __add__(self, other: "PiScaledRational") -> "PiScaledRational":
        return PiScaledRational(self.coeff + other.coeff)

    def __sub__(self, other: "PiScaledRational") -> "PiScaledRational":
        return PiScaledRational(self.coeff - other.coeff)

    def __neg__(self):
        return PiScaledRational(-self.coeff)

    def __mul__(self, q) -> "PiScaledRational":
        return PiScaledRational(self.coeff * Fraction(q))

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeff)

    def is_zero(self) -> bool:
        return not self.coeff

    def __float__(self):
        return float(self.coeff) * math.pi

    def __str__(self):
        return "0" if not self.coeff else f"{self.coeff}*pi"

    def to_json(self) -> dict:
        return {"pi_coeff": _rational_json(self.coeff)}


class PiScaledComplex(NamedTuple):
    """A complex value (re + i im) whose parts are rational multiples of pi."""

    re: PiScaledRational
    im: PiScaledRational

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        return f"({self.re.coeff} + {self.im.coeff}*i)*pi"

    def to_json(self) -> dict:
        return {"re": self.re.to_json(), "im": self.im.to_json()}


class QuatConstant(NamedTuple):
    """A constant quaternion; components are Fractions or PiScaledRationals."""

    e0: object
    e1: object
    e2: object
    e3: object

    def is_zero(self) -> bool:
        return not any(self)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self) + "]"

    def to_json(self) -> dict:
        return {f"e{n}": (c.to_json() if hasattr(c, "to_json") else _rational_json(c))
                for n, c in enumerate(self)}


@lru_cache(maxsize=None)
def _half_gamma_sqrt_pi(p: int) -> Fraction:
    """Gamma(p + 1/2) / sqrt(pi) = (2p)! / (4^p p!)."""
    return Fraction(math.factorial(2 * p), 4 ** p * math.factorial(p))


@lru_cache(maxsize=None)
def ball_monomial_integral(a: int, b: int, c: int) -> PiScaledRational:
    """Integral of u^a v^b w^c over the unit ball of R^3."""
    if min(a, b, c) < 0:
        raise ValueError("exponents must be non-negative")
    if a % 2 or b % 2 or c % 2:
        return PiScaledRational(0)
    n = (a + b + c) // 2
    numer = 2 * _half_gamma_sqrt_pi(a // 2) * _half_gamma_sqrt_pi(b // 2) * _half_gamma_sqrt_pi(c // 2)
    denom = (2 * n + 3) * _half_gamma_sqrt_pi(n + 1)
    return PiScaledRational(numer / denom)


def _parity(exp) -> tuple[int, int, int]:
    return (exp[0] & 1, exp[1] & 1, exp[2] & 1)


def _check_space(p: MultiPoly, q: MultiPoly):
    if p.space != q.space:
        raise SpaceMismatch(f"{p.space}-space vs {q.space}-space")


def l2_ball_inner(p: MultiPoly, q: MultiPoly) -> PiScaledComplex:
    """Integral over the unit ball of conj(p) q."""
    _check_space(p, q)
    by_parity: dict = {}
    for exp, c in q.terms.items():
        by_parity.setdefault(_parity(exp), []).append((exp, c))
    total = ComplexScalar(0)
    for (a, b, c), u in p.terms.items():
        u = u.conjugate()
        for (d, e, f), v in by_parity.get(_parity((a, b, c)), ()):
            total = total + u * v * ball_monomial_integral(a + d, b + e, c + f).coeff
    return PiScaledComplex(PiScaledRational(total.re), PiScaledRational(total.im))


def fischer_inner(p: MultiPoly, q: MultiPoly) -> ComplexScalar:
    """conj(p)(d/dx) applied to q at the origin: sum of conj(p_a) q_a a!."""
    _check_space(p, q)
    total = ComplexScalar(0)
    qt = q.terms
    for exp, u in p.terms.items():
        v = qt.get(exp)
        if v is not None:
            weight = math.factorial(exp[0]) * math.factorial(exp[1]) * math.factorial(exp[2])
            total = total + u.conjugate() * v * weight
    return total


def _scalar_product(product: str):
    if product == FISCHER:
        return fischer_inner
    if product == L2BALL:
        return l2_ball_inner
    raise ValueError(f"unknown inner product {product!r}; expected one of {PRODUCTS}")


def _add(a, b):
    if isinstance(a, PiScaledComplex):
        return PiScaledComplex(a.re + b.re, a.im + b.im)
    return a + b


def spinor_inner(s: SpinorPoly, t: SpinorPoly, product: str = FISCHER):
    """Sum of the componentwise pairings; v+ and v- are taken orthonormal."""
    s._same(t)
    pair = _scalar_product(product)
    return _add(pair(s.plus, t.plus), pair(s.minus, t.minus))


def column_inner(h: ColumnPair, k: ColumnPair, product: str = FISCHER):
    pair = _scalar_product(product)
    return _add(pair(h.top, k.top), pair(h.bottom, k.bottom))


def _quat_pairing(Q: QuatPoly, R: QuatPoly, pair) -> QuatConstant:
    # conj(Q) R with every component product p*q replaced by pair(p, q)
    if Q.space != R.space:
        raise SpaceMismatch(f"{Q.space}-space vs {R.space}-space")
    a0, a1, a2, a3 = Q.e0, -Q.e1, -Q.e2, -Q.e3
    b0, b1, b2, b3 = R.components
    P = pair
    return QuatConstant(
        P(a0, b0) - P(a1, b1) - P(a2, b2) - P(a3, b3),
        P(a0, b1) + P(a1, b0) + P(a2, b3) - P(a3, b2),
        P(a0, b2) - P(a1, b3) + P(a2, b0) + P(a3, b1),
        P(a0, b3) + P(a1, b2) - P(a2, b1) + P(a3, b0),
    )


def quat_inner(Q: QuatPoly, R: QuatPoly) -> QuatConstant:
    """The quaternion-valued ball product: integral of conj(Q) R."""
    return _quat_pairing(Q, R, lambda p, q: l2_ball_inner(p, q).re)


def quat_fischer(Q: QuatPoly, R: QuatPoly) -> QuatConstant:
    """Fischer analogue of :func:`quat_inner` (component pairings are real)."""
    return _quat_pairing(Q, R, lambda p, q: fischer_inner(p, q).re)


def inner(a, b, product: str = FISCHER):
    """Dispatch on the element type of a basis family."""
    if isinstance(a, MultiPoly):
        return _scalar_product(product)(a, b)
    if isinstance(a, SpinorPoly):
        return spinor_inner(a, b, product)
    if isinstance(a, ColumnPair):
        return column_inner(a, b, product)
    if isinstance(a, QuatPoly):
        _scalar_product(product)
        return quat_inner(a, b) if product == L2BALL else quat_fischer(a, b)
    raise TypeError(f"no inner product for {type(a).__name__}")


def _degree(element) -> int:
    if isinstance(element, MultiPoly):
        parts = [element]
    elif isinstance(element, SpinorPoly):
        parts = [element.plus, element.minus]
    elif isinstance(element, ColumnPair):
        parts = [element.top, element.bottom]
    elif isinstance(element, QuatPoly):
        parts = list(element.components)
    else:
        raise HeterogeneousFamily(f"unsupported element type {type(element).__name__}")
    degrees = {sum(e) for p in parts for e in p.terms}
    if len(degrees) > 1:
        raise HeterogeneousFamily(f"element is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop() if degrees else -1


def gram_matrix(family: Sequence, product: str = FISCHER) -> list[list]:
    """Full Gram matrix G[m][n] = (family[m], family[n])."""
    family = list(family)
    kinds = {type(e) for e in family}
    if len(kinds) > 1:
        raise HeterogeneousFamily(f"mixed element types {sorted(k.__name__ for k in kinds)}")
    degrees = {_degree(e) for e in family} - {-1}
    if len(degrees) > 1:
        raise HeterogeneousFamily(f"mixed degrees {sorted(degrees)}")
    return [[inner(a, b, product) for b in family] for a in family]


def entry_is_zero(entry) -> bool:
    if hasattr(entry, "is_zero"):
        return entry.is_zero()
    return not entry


def offdiagonal_zero(G) -> bool:
    return all(entry_is_zero(G[m][n]) for m in range(len(G)) for n in range(len(G)) if m != n)


def diagonal_nonzero(G) -> bool:
    return all(not entry_is_zero(G[m][m]) for m in range(len(G)))


def is_diagonal(G) -> bool:
    """Off-diagonal entries exactly zero and every diagonal entry nonzero."""
    return offdiagonal_zero(G) and diagonal_nonzero(G)


def _entry_json(entry):
    if isinstance(entry, Fraction):
        return _rational_json(entry)
    return entry.to_json()


def gram_to_json(G) -> str:
    return json.dumps({"size": len(G), "entries": [[_entry_json(e) for e in row] for row in G]})


def gram_to_csv(G) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in G:
        writer.writerow([str(e) for e in row])
    return buf.getvalue()
