"""
Kronecker structure of matrix pencils
=====================================

The block sizes of sE - F come out of the Wong sequences; generated pencils
let us compare every root space with its block formula.
"""
import random

from linrel import KcfSpec, gq, kcf_generate, kronecker_structure, verify_kcf_subspaces
from linrel.harness import DEFAULT_POOL, Sampler
from linrel.poly import format_poly

S = Sampler(random.Random(3), DEFAULT_POOL)
spec = KcfSpec([(gq(2), 2)], [1, 2], [1, 3], [2])
m, d = spec.shape
spec.W, spec.T = S.invertible(m), S.invertible(d)
P, truth = kcf_generate(spec)
ks = kronecker_structure(P)
print(f"{m}x{d} pencil: n0={ks.n0} alpha={list(ks.alpha)} eps={list(ks.epsilon)} eta={list(ks.eta)}")
print("det(sE_r - F_r) =", format_poly(ks.regular_charpoly()))
print("matches the generating spec:", ks == truth)

# %%
# Equivalent pencils have identical structure.
Q = P.transform(S.invertible(m), S.invertible(d))
print(kronecker_structure(Q) == ks)

# %%
# Block formulas for R_c, R_inf, R_lam and the proper spectrum.
report = verify_kcf_subspaces(P, spec)
print(report.clauses, report.ok)
