"""Deliberate defects for mutation testing of the verification suite."""
from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

from . import quaternion, spinor
from .core import ComplexScalar

MUTATIONS = ("omega-sign", "ck-constant", "substitution")


def _clear():
    spinor.clear_caches()
    quaternion.clear_caches()


def _wrong_c_constant(k: int, j: int) -> ComplexScalar:
    return ComplexScalar(0, -2) ** (k - j) * Fraction(math.factorial(k), math.factorial(j))


@contextmanager
def inject(name: str | None):
    """Temporarily corrupt one convention; ``None`` is a no-op."""
    if name is None:
        yield
        return
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; expected one of {MUTATIONS}")
    saved = (dict(spinor.OMEGA_SIGN), spinor.MONOGENIC_SUBSTITUTION, quaternion.c_constant)
    if name == "omega-sign":
        spinor.OMEGA_SIGN[spinor.Realization.PLUS] = -1
    elif name == "ck-constant":
        quaternion.c_constant = _wrong_c_constant
    else:
        spinor.MONOGENIC_SUBSTITUTION = ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    _clear()
    try:
        yield
    finally:
        spinor.OMEGA_SIGN.clear()
        spinor.OMEGA_SIGN.update(saved[0])
        spinor.MONOGENIC_SUBSTITUTION = saved[1]
        quaternion.c_constant = saved[2]
        _clear()
