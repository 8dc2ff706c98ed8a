"""Exact Gaussian-rational scalars and sparse polynomials in three variables.

Every polynomial carries a variable-space tag: ``"x"`` for (x1, x2, x3) and
``"y"`` for (y0, y1, y2).  Terms are stored as a map from exponent triples to
nonzero :class:`ComplexScalar` coefficients.  All values are immutable.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import SpaceMismatch, UnknownVariable

Rational = Fraction

VARIABLES = {"x": ("x1", "x2", "x3"), "y": ("y0", "y1", "y2")}

Exponent = tuple[int, int, int]


class ComplexScalar:
    """A complex number whose real and imaginary parts are exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "ComplexScalar":
        if isinstance(value, ComplexScalar):
            return value
        if isinstance(value, (_RationalABC, int)):
            return cls(value, 0)
        if isinstance(value, complex):
            # only integral-valued complex literals such as 2j are accepted
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise TypeError(f"refusing inexact complex literal {value!r}")
            return cls(int(value.real), int(value.imag))
        raise TypeError(f"cannot convert {type(value).__name__} to ComplexScalar")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __add__(self, other):
        other = ComplexScalar.coerce(other)
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ComplexScalar.coerce(other)
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ComplexScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return NotImplemented
        other = ComplexScalar.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return ComplexScalar(a * c, 0)
        return ComplexScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ComplexScalar.coerce(other)
        den = other.abs2()
        if not den:
            raise ZeroDivisionError("division by zero ComplexScalar")
        num = self * other.conjugate()
        return ComplexScalar(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return ComplexScalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (ComplexScalar(1) / self) ** (-n)
        result = ComplexScalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexScalar({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"

    def to_json(self) -> dict:
        return {"re": _rational_json(self.re), "im": _rational_json(self.im)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ComplexScalar":
        return cls(_rational_from_json(obj["re"]), _rational_from_json(obj["im"]))


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}*i"


def _rational_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _rational_from_json(obj: Mapping) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


I = ComplexScalar(0, 1)
ZERO = ComplexScalar(0)
ONE = ComplexScalar(1)

Scalar = Union[ComplexScalar, int, Fraction]


def _var_index(space: str, var: Union[str, int]) -> int:
    names = VARIABLES[space]
    if isinstance(var, int) and not isinstance(var, bool):
        if 0 <= var < 3:
            return var
    elif var in names:
        return names.index(var)
    raise UnknownVariable(f"{var!r} is not a variable of space {space!r} {names}")


def _grlex_key(exp: Exponent):
    return (-sum(exp), tuple(-e for e in exp))


class MultiPoly:
    """Sparse polynomial in three variables with Gaussian-rational coefficients.

    >>> z_bar = MultiPoly.var("x1") - I * MultiPoly.var("x2")
    >>> print(z_bar * z_bar)
    x1^2 - 2*i*x1*x2 - x2^2
    """

    __slots__ = ("_space", "_terms", "_float_cache", "_hash")

    def __init__(self, space: str = "x", terms: Mapping[Exponent, Scalar] | None = None):
        if space not in VARIABLES:
            raise SpaceMismatch(f"unknown variable space {space!r}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent triple {exp}")
            c = ComplexScalar.coerce(c)
            if c:
                clean[exp] = c
        self._space = space
        self._terms = clean
        self._float_cache = None
        self._hash = None

    @classmethod
    def _raw(cls, space: str, terms: dict) -> "MultiPoly":
        # trusted constructor: terms already normalized
        obj = cls.__new__(cls)
        obj._space = space
        obj._terms = terms
        obj._float_cache = None
        obj._hash = None
        return obj

    # ----- constructors -------------------------------------------------
    @classmethod
    def zero(cls, space: str = "x") -> "MultiPoly":
        return cls._raw(space, {})

    @classmethod
    def constant(cls, c: Scalar, space: str = "x") -> "MultiPoly":
        return cls(space, {(0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        for space, names in VARIABLES.items():
            if name in names:
                exp = [0, 0, 0]
                exp[names.index(name)] = 1
                return cls._raw(space, {tuple(exp): ONE})
        raise UnknownVariable(name)

    # ----- accessors ----------------------------------------------------
    @property
    def space(self) -> str:
        return self._space

    @property
    def terms(self) -> Mapping[Exponent, ComplexScalar]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return k is None or degrees == {k}

    def is_real(self) -> bool:
        return all(not c.im for c in self._terms.values())

    def coefficient(self, exp: Exponent) -> ComplexScalar:
        return self._terms.get(tuple(exp), ZERO)

    def sorted_terms(self) -> list[tuple[Exponent, ComplexScalar]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    # ----- arithmetic ---------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if self._space != other._space:
            raise SpaceMismatch(f"{self._space}-space vs {other._space}-space")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(ComplexScalar.coerce(other), self._space)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self._space, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self._space, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c: Scalar) -> "MultiPoly":
        c = ComplexScalar.coerce(c)
        if not c:
            return MultiPoly.zero(self._space)
        return MultiPoly._raw(self._space, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                exp = (a1 + a2, b1 + b2, c1 + c2)
                p = u * v
                s = out.get(exp)
                out[exp] = p if s is None else s + p
        return MultiPoly._raw(self._space, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(ComplexScalar(1) / ComplexScalar.coerce(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self._space)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._space == other._space and self._terms == other._terms
        try:
            return self == MultiPoly.constant(ComplexScalar.coerce(other), self._space)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._space, frozenset(self._terms.items())))
        return self._hash

    # ----- calculus and maps ------------------------------------------
    def diff(self, var: Union[str, int]) -> "MultiPoly":
        i = _var_index(self._space, var)
        out = {}
        for exp, c in self._terms.items():
            n = exp[i]
            if n:
                e = list(exp)
                e[i] = n - 1
                out[tuple(e)] = c * n
        return MultiPoly._raw(self._space, out)

    def mul_var(self, var: Union[str, int]) -> "MultiPoly":
        """Multiply by a single coordinate variable (cheap shift of exponents)."""
        i = _var_index(self._space, var)
        out = {}
        for exp, c in self._terms.items():
            e = list(exp)
            e[i] += 1
            out[tuple(e)] = c
        return MultiPoly._raw(self._space, out)

    def conj(self) -> "MultiPoly":
        """Conjugate every coefficient (complex conjugation for real variables)."""
        return MultiPoly._raw(self._space, {e: c.conjugate() for e, c in self._terms.items()})

    def real_part(self) -> "MultiPoly":
        return MultiPoly(self._space, {e: c.re for e, c in self._terms.items()})

    def imag_part(self) -> "MultiPoly":
        return MultiPoly(self._space, {e: c.im for e, c in self._terms.items()})

    def substitute_linear(self, matrix, target_space: str) -> "MultiPoly":
        """Substitute each variable by a linear form in the target space.

        ``matrix`` has three rows, one per source variable.  A row is either a
        triple of scalars (coefficients of the target variables) or a linear
        :class:`MultiPoly` already in ``target_space``.
        """
        if target_space not in VARIABLES:
            raise SpaceMismatch(f"unknown variable space {target_space!r}")
        if len(matrix) != 3:
            raise ValueError("substitution needs exactly three rows")
        images = []
        for row in matrix:
            if isinstance(row, MultiPoly):
                if row.space != target_space:
                    raise SpaceMismatch(
                        f"image lives in {row.space}-space, declared target {target_space}-space"
                    )
                images.append(row)
            else:
                img = MultiPoly.zero(target_space)
                for j, c in enumerate(row):
                    exp = [0, 0, 0]
                    exp[j] = 1
                    img = img + MultiPoly(target_space, {tuple(exp): c})
                images.append(img)
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.constant(1, target_space)} for _ in range(3)]

        def power(i, n):
            cache = powers[i]
            if n not in cache:
                cache[n] = power(i, n - 1) * images[i]
            return cache[n]

        result = MultiPoly.zero(target_space)
        for (a, b, c), coef in self._terms.items():
            result = result + (power(0, a) * power(1, b) * power(2, c)).scale(coef)
        return result

    def eval_exact(self, point: Sequence[Scalar]) -> ComplexScalar:
        pt = [ComplexScalar.coerce(v) for v in point]
        total = ZERO
        for (a, b, c), coef in self._terms.items():
            total = total + coef * (pt[0] ** a) * (pt[1] ** b) * (pt[2] ** c)
        return total

    def _float_terms(self):
        if self._float_cache is None:
            exps = np.array(list(self._terms.keys()) or np.zeros((0, 3)), dtype=np.int64).reshape(-1, 3)
            coefs = np.array([complex(c) for c in self._terms.values()], dtype=complex)
            self._float_cache = (exps, coefs)
        return self._float_cache

    def eval_float(self, point):
        """Evaluate in double precision; the coordinates may be numpy arrays."""
        exps, coefs = self._float_terms()
        u, v, w = (np.asarray(p, dtype=float) for p in point)
        shape = np.broadcast(u, v, w).shape
        total = np.zeros(shape, dtype=complex)
        if len(coefs):
            deg = int(exps.max())
            pu = [np.ones(shape)]
            pv = [np.ones(shape)]
            pw = [np.ones(shape)]
            for _ in range(deg):
                pu.append(pu[-1] * u)
                pv.append(pv[-1] * v)
                pw.append(pw[-1] * w)
            for (a, b, c), coef in zip(exps, coefs):
                total = total + coef * (pu[a] * pv[b] * pw[c])
        if total.ndim == 0:
            return complex(total)
        return total

    # ----- presentation -------------------------------------------------
    def __repr__(self):
        return f"MultiPoly({self._space!r}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = VARIABLES[self._space]
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            negative = (not c.im and c.re < 0) or (not c.re and c.im < 0)
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("- " if negative else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {
            "space": self._space,
            "terms": [{"exp": list(e), **c.to_json()} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MultiPoly":
        terms = {}
        for t in obj["terms"]:
            exp = tuple(t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in serialized polynomial")
            terms[exp] = ComplexScalar.from_json(t)
        return cls(obj["space"], terms)


def variables(space: str) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    return tuple(MultiPoly.var(n) for n in VARIABLES[space])


x1, x2, x3 = variables("x")
y0, y1, y2 = variables("y")
z = x1 + I * x2
z_bar = x1 - I * x2


# Functional aliases of the methods above.

def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p * q


def poly_diff(p: MultiPoly, var) -> MultiPoly:
    return p.diff(var)


def poly_substitute_linear(p: MultiPoly, matrix, target_space: str) -> MultiPoly:
    return p.substitute_linear(matrix, target_space)


def poly_eval_exact(p: MultiPoly, point) -> ComplexScalar:
    return p.eval_exact(point)


def poly_eval_float(p: MultiPoly, point):
    return p.eval_float(point)


def random_poly(rng, max_degree: int, space: str = "x", n_terms: int = 8,
                max_coeff: int = 10, homogeneous: bool = False) -> MultiPoly:
    """Random polynomial with small Gaussian-integer coefficients, for property checks.

    ``rng`` is a :class:`random.Random`.  When ``homogeneous`` is set every term
    has total degree exactly ``max_degree``.
    """
    terms = {}
    for _ in range(n_terms):
        d = max_degree if homogeneous else rng.randint(0, max_degree)
        a = rng.randint(0, d)
        b = rng.randint(0, d - a)
        exp = (a, b, d - a - b)
        terms[exp] = ComplexScalar(
            rng.randint(-max_coeff, max_coeff), rng.randint(-max_coeff, max_coeff)
        )
    return MultiPoly(space, terms)


def sum_polys(polys: Iterable[MultiPoly], space: str = "x") -> MultiPoly:
    total = MultiPoly.zero(space)
    for p in polys:
        total = total + p
    return total
