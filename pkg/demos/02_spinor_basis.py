# Spherical monogenics with values in the spinor space, in both realizations.
# Run: python demos/02_spinor_basis.py

# %%
from monogenica import spinor

for r in ("S4+", "S4-"):
    print(f"-- degree 1, {r}")
    for j, F in enumerate(spinor.monogenic_basis(1, r)):
        print(f"  F^1_{j} = {F}")

# %%
# Monogenicity: the Cauchy-Riemann residual vanishes for every element.
k = 5
for r in ("S4+", "S4-"):
    for F in spinor.monogenic_basis(k, r):
        assert all(c.is_zero() for c in spinor.cr_residual(F))
print(f"degree {k}: all {2 * k + 2} elements monogenic in both realizations")

# %%
# The x3-derivative is an Appell system: dF^k_j/dx3 = j F^(k-1)_(j-1).
F = spinor.monogenic_element(4, 3, "S4-")
lhs = spinor.appell_derivative(F)
rhs = spinor.monogenic_element(3, 2, "S4-") * 3
print("Appell relation at k=4, j=3:", lhs == rhs)

# %%
# Degree k+1 regenerated from degree k by the three-term recurrence.
basis3 = spinor.monogenic_basis(3, "S4+")
print("recurrence reproduces degree 4:",
      spinor.regenerate_next_degree(basis3, 3) == spinor.monogenic_basis(4, "S4+"))
