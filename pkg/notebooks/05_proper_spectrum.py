"""
Point spectrum and proper point spectrum
========================================

Once R_c is nonzero every point is an eigenvalue; the proper eigenvalues
are the points whose root space is strictly larger than R_c.
"""
from linrel import (
    INF,
    KcfSpec,
    LinearRelation,
    Matrix,
    gq,
    independence_certificate,
    is_eigenvalue,
    kcf_generate,
    pencil_to_relation,
    proper_point_spectrum,
)
from linrel.poly import format_poly

spec = KcfSpec([(gq("1/2"), 2), (gq(-1), 1)], [1], [2], [])
A = pencil_to_relation(kcf_generate(spec)[0])
rep = proper_point_spectrum(A)
print("proper eigenvalues:", [(str(l), d) for l, d in rep.proper_eigenvalues])
print("every point an eigenvalue:", rep.full_spectrum_flag, [is_eigenvalue(A, x) for x in (7, "2+3i", INF)])

# %%
# Characteristic polynomial factors without roots in Q(i) are kept symbolically.
M = Matrix([[gq(0), gq(2)], [gq(1), gq(0)]])
rep = proper_point_spectrum(LinearRelation.from_matrix(M))
print(rep.proper_eigenvalues, format_poly(rep.residual_polynomial))

# %%
# Vectors from root spaces of distinct proper eigenvalues, outside R_c, are independent.
D = LinearRelation.from_matrix(Matrix([[gq(1), gq(0)], [gq(0), gq(2)]]))
print(independence_certificate(D, [(1, (1, 0)), (2, (0, 1))]))
