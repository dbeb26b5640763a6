"""
Jordan chains, singular chains and chain transforms
===================================================

Root-space membership is witnessed by chains of pairs in the relation.
"""
from linrel import (
    KcfSpec,
    LinearRelation,
    Matrix,
    confluent_vandermonde,
    extract_singular_chain,
    gq,
    jordan_chain,
    jordan_extend_transform,
    kcf_generate,
    pencil_to_relation,
    shift_chain_transform,
)


def fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


# %%
# A Jordan chain of the nilpotent block ending at e2.
N = LinearRelation.from_matrix(Matrix([[gq(0), gq(1)], [gq(0), gq(0)]]))
ch = jordan_chain(N, 0, (0, 1))
print([fmt(v) for v in ch.vectors], ch.verify(N))

# %%
# A singular chain: it starts at (0, .) and ends at (., 0).
P, _ = kcf_generate(KcfSpec([], [], [4], []))
A = pencil_to_relation(P)
sc = extract_singular_chain(A)
for x, y in sc.pairs():
    print(fmt(x), "->", fmt(y))

# %%
# Shift transform: a chain (0,x1),(x1,x2),(x2,x3) in A - 1 becomes one in A.
xs = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
print([fmt(z) for z in shift_chain_transform(1, xs)])

# %%
# Extension transform: z_m = sum_i binom(m, i) lam^(m-i) x_i.
print([fmt(z) for z in jordan_extend_transform(1, [(1, 0), (0, 1)], 4)])

# %%
# The confluent Vandermonde matrix for nodes 2 (two columns) and 3 (one column).
W = confluent_vandermonde(2, [(2, 1), (3, 0)])
print(W, W.det())
