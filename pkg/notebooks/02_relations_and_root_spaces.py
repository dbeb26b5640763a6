"""
Linear relations and their root spaces
======================================

A relation in C^m is a subspace of C^m x C^m.  It has a domain, range,
kernel and multivalued part, and root spaces at every point of C and at
infinity.
"""
from linrel import INF, LinearRelation, Matrix, gq, kernel_sequence, root_space, singular_chain_space


def show(U):
    return [tuple(str(c) for c in v) for v in U.basis]


# %%
# The graph of a nilpotent Jordan block.
N = LinearRelation.from_matrix(Matrix([[gq(0), gq(1)], [gq(0), gq(0)]]))
print({k: U.dim for k, U in N.parts().items()})
print("ker N^i:", [K.dim for K in kernel_sequence(N, 0)])
print("R_0 =", show(root_space(N, 0)), " R_inf =", show(root_space(N, INF)))

# %%
# A relation that is not an operator: (0, e1) and (e1, 0).
e1, z = (1, 0), (0, 0)
A = LinearRelation.from_generators(2, [(z, e1), (e1, z)])
for name, U in A.parts().items():
    print(name, show(U))

# %%
# Its root spaces at 0 and at infinity coincide, and so does R_c.
print(show(root_space(A, 0)), show(root_space(A, INF)), show(singular_chain_space(A)))

# %%
# The algebra: inverse, shift, scalar multiple, product and powers.
B = A.shift(gq("1/2")).inverse()
print(B.dim, A.compose(A) == A.power(2), A.scale(3).mul == A.mul)
