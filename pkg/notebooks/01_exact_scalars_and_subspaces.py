"""
Exact scalars and canonical subspaces
=====================================

Everything is computed over the Gaussian rationals, so subspaces can be
compared by their reduced row echelon bases.
"""
from linrel import Matrix, Subspace, canonicalize, compare, gq, image, preimage
from linrel.exact import arith, format_scalar

# %%
# Scalars are written ``a/b+c/di``; arithmetic never rounds.
a = gq("1+1i")
b = gq("1-1i")
print(format_scalar(arith(a, b, "div")))   # 0+1i
print(format_scalar(gq("1/2") + gq("1/3")))

# %%
# A subspace is stored by its RREF basis, whatever spanning set it came from.
U = canonicalize(3, [(1, 1, 0), (0, 1, 1), (1, 2, 1)])
print(U.dim, [[format_scalar(c) for c in v] for v in U.basis])

# %%
# Sums and intersections (the latter by Zassenhaus elimination).
V = canonicalize(3, [(1, 0, 0), (0, 1, 0)])
print("U & V:", (U & V).dim, " U + V:", (U + V).dim)
print(compare(canonicalize(2, [(1, 1)]), canonicalize(2, [(1, 0)])))

# %%
# Images and preimages under a matrix.
N = Matrix([[gq(0), gq(1)], [gq(0), gq(0)]])
e1 = canonicalize(2, [(1, 0)])
print(image(N, e1).is_zero(), preimage(N, e1) == Subspace.full(2))
