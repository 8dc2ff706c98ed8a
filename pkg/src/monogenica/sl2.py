"""The sl(2, C) action on scalar polynomials in (x1, x2, x3) and the
canonical bases of spherical harmonics obtained by lowering a primitive.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .core import I, MultiPoly, z, z_bar
from .errors import SpaceMismatch

_AXES = {1: "x1", 2: "x2", 3: "x3"}


def _require_x(p: MultiPoly):
    if p.space != "x":
        raise SpaceMismatch(f"operator acts on x-space polynomials, got {p.space}-space")


def rotation(i: int, j: int) -> Callable[[MultiPoly], MultiPoly]:
    """Return the infinitesimal rotation h_ij = x_j d/dx_i - x_i d/dx_j."""
    xi, xj = _AXES[i], _AXES[j]

    def h(p: MultiPoly) -> MultiPoly:
        _require_x(p)
        return p.diff(xi).mul_var(xj) - p.diff(xj).mul_var(xi)

    h.__name__ = f"h{i}{j}"
    return h


h12 = rotation(1, 2)
h23 = rotation(2, 3)
h31 = rotation(3, 1)


def op_H(p: MultiPoly) -> MultiPoly:
    """Cartan element H = -i h12."""
    return h12(p).scale(-I)


def op_Xplus(p: MultiPoly) -> MultiPoly:
    """Raising operator: -x3 (d1 - i d2) p + z_bar d3 p."""
    _require_x(p)
    d_z2 = p.diff("x1") - p.diff("x2").scale(I)  # 2 d/dz
    return z_bar * p.diff("x3") - d_z2.mul_var("x3")


def op_Xminus(p: MultiPoly) -> MultiPoly:
    """Lowering operator: x3 (d1 + i d2) p - z d3 p."""
    _require_x(p)
    d_zbar2 = p.diff("x1") + p.diff("x2").scale(I)  # 2 d/dz_bar
    return d_zbar2.mul_var("x3") - z * p.diff("x3")


def d_zbar(p: MultiPoly) -> MultiPoly:
    _require_x(p)
    return (p.diff("x1") + p.diff("x2").scale(I)).scale(Fraction(1, 2))


def d_z(p: MultiPoly) -> MultiPoly:
    _require_x(p)
    return (p.diff("x1") - p.diff("x2").scale(I)).scale(Fraction(1, 2))


def iterate(op, n: int, p):
    """Apply ``op`` to ``p`` ``n`` times."""
    for _ in range(n):
        p = op(p)
    return p


def laplacian(p: MultiPoly) -> MultiPoly:
    _require_x(p)
    return p.diff("x1").diff("x1") + p.diff("x2").diff("x2") + p.diff("x3").diff("x3")


@dataclass(frozen=True)
class HarmonicBasisElement:
    k: int
    j: int
    poly: MultiPoly

    @property
    def weight(self) -> int:
        return self.k - self.j


def harmonic_primitive(k: int) -> MultiPoly:
    """z_bar^k / (k! 2^k), the highest-weight vector of degree k."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return (z_bar ** k).scale(Fraction(1, math.factorial(k) * 2 ** k))


@lru_cache(maxsize=None)
def _harmonic_polys(k: int) -> tuple[MultiPoly, ...]:
    polys = [harmonic_primitive(k)]
    for _ in range(2 * k):
        polys.append(op_Xminus(polys[-1]))
    return tuple(polys)


def harmonic_basis(k: int) -> list[HarmonicBasisElement]:
    """The 2k+1 weight vectors f^k_j = (X^-)^j f^k_0, j = 0..2k."""
    return [HarmonicBasisElement(k, j, p) for j, p in enumerate(_harmonic_polys(k))]


def harmonic_element(k: int, j: int) -> MultiPoly:
    """f^k_j, with the convention that it vanishes outside 0 <= j <= 2k."""
    if k < 0 or j < 0 or j > 2 * k:
        return MultiPoly.zero("x")
    return _harmonic_polys(k)[j]
