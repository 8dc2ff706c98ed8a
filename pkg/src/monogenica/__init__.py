"""Exact construction and verification of canonical orthogonal bases of
spherical harmonics and spherical monogenics in dimension 3."""
from .core import ComplexScalar, MultiPoly, Rational, I, x1, x2, x3, y0, y1, y2, z, z_bar
from .sl2 import harmonic_basis, harmonic_primitive, laplacian, op_H, op_Xminus, op_Xplus
from .spinor import Realization, SpinorPoly, monogenic_basis, monogenic_primitive
from .quaternion import ColumnPair, QuatPoly, build_g, build_h, quat_mul
from .inner import PiScaledRational, fischer_inner, gram_matrix, l2_ball_inner, quat_inner
from .closed_forms import SphericalPoint, assoc_legendre, cross_validate

__version__ = "0.1.0"
