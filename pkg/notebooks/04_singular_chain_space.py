"""
The singular chain space
========================

For a relation with both Jordan and singular structure, any two distinct
root spaces meet exactly in the singular chain space R_c.
"""
from linrel import INF, KcfSpec, gq, kcf_generate, pencil_to_relation, root_space, singular_chain_space
from linrel.harness import DEFAULT_POOL, Sampler

import random

S = Sampler(random.Random(0), DEFAULT_POOL)
spec = KcfSpec([(gq(1), 2), (gq("0+1i"), 1)], [2], [3], [])
spec.W, spec.T = S.invertible(spec.shape[0]), S.invertible(spec.shape[1])
A = pencil_to_relation(kcf_generate(spec)[0])
Rc = singular_chain_space(A)
print("dim R_c =", Rc.dim)

# %%
# Pairwise intersections.
points = [gq(1), gq("0+1i"), gq(0), INF]
for i, lam in enumerate(points):
    for mu in points[i + 1:]:
        meet = root_space(A, lam) & root_space(A, mu)
        print(lam, mu, meet.dim, meet == Rc)

# %%
# Sums over disjoint sets of points still meet in R_c.
left = root_space(A, 1) + root_space(A, INF)
right = root_space(A, "0+1i") + root_space(A, 5)
print((left & right) == Rc)
