# Spherical-coordinate closed forms against the exact constructions.
# Run: python demos/05_closed_forms.py

# %%
import numpy as np

from monogenica import closed_forms as cf

f = cf.assoc_legendre(2, -1)
print("P^-1_2(s) = (1 - s^2)^(1/2) *", [str(c) for c in f.poly_part], "(ascending powers of s)")
s = np.linspace(-0.9, 0.9, 5)
print("P^1_3 on a grid:", np.round(cf.eval_assoc_legendre(cf.assoc_legendre(3, 1), s), 6))

# %%
pts = cf.sample_points(200, seed=0)
for family in cf.FAMILIES:
    worst = max(cf.cross_validate(family, k, pts).max_rel_error for k in range(11))
    print(f"{family:10s} k<=10  max relative error {worst:.2e}")

# %%
# One point by hand: g^1_1 at the point theta = pi/3, phi = pi/4.
p = cf.SphericalPoint(1.0, np.pi / 3, np.pi / 4)
print("closed form  ", np.round(cf.closed_form_g(1, 1, p), 12))
print("construction ", np.round([float(v) for v in cf.constructive_values("quaternion", 1, 1, p)], 12))
