# Spherical harmonics in three variables, built exactly by lowering a primitive.
# Run: python demos/01_harmonic_basis.py

# %%
from monogenica import sl2
from monogenica.core import z_bar

# The primitive of degree k is zbar^k / (k! 2^k); each X- step lowers the weight by one.
k = 2
for e in sl2.harmonic_basis(k):
    print(f"f^{k}_{e.j}  weight {e.weight:+d}   {e.poly}")

# %%
# Every element is harmonic and a weight vector of H.
for e in sl2.harmonic_basis(4):
    assert sl2.laplacian(e.poly).is_zero()
    assert sl2.op_H(e.poly) == e.poly.scale(e.weight)
print("degree 4: laplacian zero, H eigenvalues", [e.weight for e in sl2.harmonic_basis(4)])

# %%
# The ends of the ladder: X+ kills the top, X- kills the bottom.
top, bottom = sl2.harmonic_element(4, 0), sl2.harmonic_element(4, 8)
print("X+ f^4_0 =", sl2.op_Xplus(top), "  X- f^4_8 =", sl2.op_Xminus(bottom))

# %%
# Lowering any harmonic f^k_j is the same as iterating X- from the primitive.
p = z_bar ** 3 / 48
print(sl2.iterate(sl2.op_Xminus, 3, p) == sl2.harmonic_element(3, 3))
