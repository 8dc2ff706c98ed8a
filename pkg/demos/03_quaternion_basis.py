# Quaternion-valued spherical monogenics and their complex columns.
# Run: python demos/03_quaternion_basis.py

# %%
from monogenica import quaternion as Q
from monogenica.core import y1, y2, MultiPoly

for k in range(3):
    for j, g in enumerate(Q.quaternion_basis(k)):
        print(f"g^{k}_{j} = {g}")

# %%
# The lowest element is a power of y1 - i3 y2 under the Hamilton product.
zero = MultiPoly.zero("y")
base = Q.QuatPoly(y1, zero, zero, -y2)
print("g^4_0 == (y1 - i3 y2)^4:", Q.build_g(4, 0) == Q.quat_power(base, 4))

# %%
# Both complex columns are annihilated by D; the first column is h^k_j.
g = Q.build_g(3, 1)
first, second = g.columns()
print("first column is h^3_1:", first == Q.build_h(3, 1))
print("D residuals zero:", Q.cr_operator_D(first).is_zero(), Q.cr_operator_D(second).is_zero())

# %%
# d/dy0 lowers the degree: d g^k_j / dy0 = k g^(k-1)_(j-1).
print(Q.appell_derivative_g(Q.build_g(5, 2)) == Q.build_g(4, 1).scale(5))
