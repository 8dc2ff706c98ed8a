"""Associated Legendre functions from the Rodrigues-type formula and the
spherical-coordinate closed forms of the three basis families, with a
cross-validation harness against the exact constructions.

Spherical conventions (fixed):
    x-space: x1 = r sin(theta) sin(phi), x2 = r sin(theta) cos(phi), x3 = r cos(theta)
    y-space: y0 = r cos(theta), y1 = r sin(theta) cos(phi), y2 = r sin(theta) sin(phi)
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.stats import qmc

from . import quaternion, sl2, spinor
from .errors import IndexOutOfRange, OrderOutOfRange

FAMILIES = ("harmonic", "spinor+", "spinor-", "quaternion")


# ----------------------------------------------------------------------------
# univariate exact polynomials, coefficient lists in ascending order

def _trim(c: list[Fraction]) -> tuple[Fraction, ...]:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _deriv(c: list[Fraction], m: int) -> list[Fraction]:
    for _ in range(m):
        c = [n * c[n] for n in range(1, len(c))]
    return c


def _divide(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(quot) - 1, -1, -1):
        q = num[i + len(den) - 1] / den[-1]
        quot[i] = q
        for n, d in enumerate(den):
            num[i + n] -= q * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@dataclass(frozen=True)
class AssocLegendre:
    """P^l_k(s) = poly_part(s) * (1 - s^2)^(|l|/2).

    For negative order the factor (s^2 - 1)^|l| carried by the derivative is
    divided out exactly, so the stored form is finite on all of [-1, 1].
    """

    k: int
    order: int
    poly_part: tuple[Fraction, ...] = field(default=())

    @property
    def half_power(self) -> int:
        return self.order

    def is_zero(self) -> bool:
        return not self.poly_part

    @property
    def poly_degree(self) -> int:
        return len(self.poly_part) - 1


@lru_cache(maxsize=None)
def assoc_legendre(k: int, l: int) -> AssocLegendre:
    if k < 0:
        raise ValueError("degree must be non-negative")
    if abs(l) > k + 1:
        raise OrderOutOfRange(f"order {l} outside [-{k + 1}, {k + 1}]")
    m = l + k
    if m < 0 or m > 2 * k:
        return AssocLegendre(k, l, ())
    base = [Fraction(0)] * (2 * k + 1)
    for i in range(k + 1):
        base[2 * i] = Fraction(math.comb(k, i) * (-1) ** (k - i))
    poly = _deriv(base, m)
    if l < 0:
        s2m1 = [Fraction(-1), Fraction(0), Fraction(1)]
        den = [Fraction(1)]
        for _ in range(-l):
            den = [sum((den[i] * s2m1[n - i] for i in range(len(den)) if 0 <= n - i < 3), Fraction(0))
                   for n in range(len(den) + 2)]
        poly = [c * (-1) ** (-l) for c in _divide(poly, den)]
    scale = Fraction(1, math.factorial(k) * 2 ** k)
    return AssocLegendre(k, l, _trim([c * scale for c in poly]))


def eval_assoc_legendre(f: AssocLegendre, s):
    """Evaluate in double precision; ``s`` may be an array with entries in [-1, 1]."""
    s = np.asarray(s, dtype=float)
    if np.any(np.abs(s) > 1 + 1e-12):
        raise ValueError("associated Legendre functions are evaluated on [-1, 1] only")
    if f.is_zero():
        out = np.zeros_like(s)
    else:
        coeffs = [float(c) for c in f.poly_part]
        envelope = np.clip(1.0 - s * s, 0.0, None) ** (abs(f.order) / 2)
        out = np.polynomial.polynomial.polyval(s, coeffs) * envelope
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class SphericalPoint:
    r: float
    theta: float
    phi: float

    def to_x(self):
        st = np.sin(self.theta)
        return (self.r * st * np.sin(self.phi), self.r * st * np.cos(self.phi),
                self.r * np.cos(self.theta))

    def to_y(self):
        st = np.sin(self.theta)
        return (self.r * np.cos(self.theta), self.r * st * np.cos(self.phi),
                self.r * st * np.sin(self.phi))


def _P(k, l, theta):
    if abs(l) > k + 1:
        return np.zeros_like(np.asarray(theta, dtype=float))
    return eval_assoc_legendre(assoc_legendre(k, l), np.cos(theta))


def _check_index(k, j, top):
    if k < 0 or not 0 <= j <= top:
        raise IndexOutOfRange(f"(k, j) = ({k}, {j}) outside 0 <= j <= {top}")


def closed_form_f(k: int, j: int, p: SphericalPoint):
    """i^(k-j) r^k e^{i(k-j)phi} P^{j-k}_k(cos theta)."""
    _check_index(k, j, 2 * k)
    return (1j ** (k - j)) * p.r ** k * np.exp(1j * (k - j) * p.phi) * _P(k, j - k, p.theta)


def closed_form_F(k: int, j: int, sign: int, p: SphericalPoint):
    """Both spinor components of F^{k,+-}_j; ``sign`` is +1 or -1."""
    _check_index(k, j, 2 * k + 1)
    sign = spinor.Realization.parse(sign).sign if isinstance(sign, str) else int(sign)
    front = (1j ** (k - j)) * p.r ** k * np.exp(1j * (k - j) * p.phi)
    plus = front * _P(k, j - k, p.theta)
    minus = front * sign * 1j * j * np.exp(1j * p.phi) * _P(k, j - k - 1, p.theta)
    return plus, minus


def closed_form_g(k: int, j: int, p: SphericalPoint):
    """The four real components of g^k_j on 1, i1, i2, i3."""
    _check_index(k, j, k)
    d = math.factorial(k) / math.factorial(j) * (-2.0) ** (k - j) * p.r ** k
    a = _P(k, j - k, p.theta)
    b = _P(k, j - k - 1, p.theta)
    return (
        d * a * np.cos((j - k) * p.phi),
        -d * j * b * np.cos((j - k - 1) * p.phi),
        d * j * b * np.sin((j - k - 1) * p.phi),
        d * a * np.sin((j - k) * p.phi),
    )


def sample_points(n: int, seed: int = 0, theta_margin: float = 0.05,
                  r_range: tuple[float, float] = (0.25, 1.5)) -> SphericalPoint:
    """Scrambled Halton points; returns one SphericalPoint holding arrays."""
    u = qmc.Halton(d=3, scramble=True, seed=seed).random(n)
    r = r_range[0] + (r_range[1] - r_range[0]) * u[:, 0]
    theta = theta_margin + (math.pi - 2 * theta_margin) * u[:, 1]
    phi = -math.pi + 2 * math.pi * u[:, 2]
    return SphericalPoint(r, theta, phi)


def _family_size(family: str, k: int) -> int:
    return {"harmonic": 2 * k + 1, "spinor+": 2 * k + 2, "spinor-": 2 * k + 2,
            "quaternion": k + 1}[family]


def constructive_values(family: str, k: int, j: int, p: SphericalPoint) -> list:
    """Component values of the exact basis element evaluated in floating point."""
    if family == "harmonic":
        return [sl2.harmonic_element(k, j).eval_float(p.to_x())]
    if family in ("spinor+", "spinor-"):
        F = spinor.monogenic_element(k, j, "S4+" if family == "spinor+" else "S4-")
        xs = p.to_x()
        return [F.plus.eval_float(xs), F.minus.eval_float(xs)]
    if family == "quaternion":
        g = quaternion.build_g(k, j)
        ys = p.to_y()
        return [np.real(c.eval_float(ys)) for c in g.components]
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def closed_form_values(family: str, k: int, j: int, p: SphericalPoint) -> list:
    if family == "harmonic":
        return [closed_form_f(k, j, p)]
    if family in ("spinor+", "spinor-"):
        return list(closed_form_F(k, j, 1 if family == "spinor+" else -1, p))
    if family == "quaternion":
        return list(closed_form_g(k, j, p))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass
class CrossValidationReport:
    family: str
    k: int
    n_points: int
    tolerance: float
    errors: list[float]

    @property
    def max_rel_error(self) -> float:
        return max(self.errors, default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_rel_error <= self.tolerance

    def to_json(self) -> dict:
        return {"family": self.family, "k": self.k, "points": self.n_points,
                "tolerance": self.tolerance, "max_rel_error": self.max_rel_error,
                "per_index": self.errors, "passed": self.passed}


def _as_arrays(points) -> SphericalPoint:
    if isinstance(points, SphericalPoint):
        return SphericalPoint(*(np.atleast_1d(np.asarray(v, dtype=float))
                                for v in (points.r, points.theta, points.phi)))
    pts = list(points)
    return SphericalPoint(np.array([q.r for q in pts], dtype=float),
                          np.array([q.theta for q in pts], dtype=float),
                          np.array([q.phi for q in pts], dtype=float))


def cross_validate(family: str, k: int, points, tolerance: float = 1e-9) -> CrossValidationReport:
    """Compare construction and closed form for every index of a family.

    The error for index j is max|difference| / max|closed form| over all
    points and components, i.e. relative to the element's size on the sample.
    """
    p = _as_arrays(points)
    errors = []
    for j in range(_family_size(family, k)):
        got = np.array(constructive_values(family, k, j, p))
        want = np.array(closed_form_values(family, k, j, p))
        scale = float(np.max(np.abs(want))) if want.size else 0.0
        diff = float(np.max(np.abs(got - want))) if want.size else 0.0
        errors.append(diff / scale if scale > 0 else diff)
    return CrossValidationReport(family, k, len(p.r), tolerance, errors)
