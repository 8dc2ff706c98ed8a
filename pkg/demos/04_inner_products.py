# Exact Gram matrices under the Fischer pairing and the unit-ball L2 product.
# Run: python demos/04_inner_products.py

# %%
from monogenica import inner, sl2, spinor, quaternion

harm = [e.poly for e in sl2.harmonic_basis(2)]
G = inner.gram_matrix(harm, inner.FISCHER)
print("Fischer Gram, harmonic degree 2:")
print(inner.gram_to_csv(G))

# %%
G = inner.gram_matrix(harm, inner.L2BALL)
print("L2 ball Gram (entries are rational multiples of pi):")
print(inner.gram_to_csv(G))
print("diagonal:", inner.is_diagonal(G))

# %%
# Spinor and quaternion families are orthogonal too.
for r in ("S4+", "S4-"):
    print(r, "degree 4 Fischer diagonal:",
          inner.is_diagonal(inner.gram_matrix(spinor.monogenic_basis(4, r), inner.FISCHER)))
Gq = inner.gram_matrix(quaternion.quaternion_basis(3), inner.L2BALL)
print("quaternionic Gram, degree 3, diagonal entries:", [str(Gq[n][n]) for n in range(4)])
print("off-diagonal zero:", inner.offdiagonal_zero(Gq))
