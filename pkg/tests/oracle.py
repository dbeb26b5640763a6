"""Reference computations with sympy, sharing no code with the package.

Relations are given by generator pairs; every subspace is returned as a list
of sympy column vectors spanning it.
"""
import sympy as sp


def sym(c):
    """GaussianRational (or int/str) to a sympy number."""
    if isinstance(c, (int, str)):
        from linrel import gq

        c = gq(c)
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)


def cols(vectors, n):
    if not vectors:
        return sp.zeros(n, 0)
    return sp.Matrix.hstack(*[sp.Matrix([sym(c) for c in v]) for v in vectors])


def rank(M):
    return M.rank(simplify=True) if M.cols and M.rows else 0


def span_dim(vectors, n):
    return rank(cols(vectors, n))


def same_span(U, V, n):
    """U, V lists of sympy columns or package vectors."""
    a, b = _as_matrix(U, n), _as_matrix(V, n)
    ru, rv = rank(a), rank(b)
    return ru == rv == rank(sp.Matrix.hstack(a, b))


def _as_matrix(U, n):
    if isinstance(U, sp.MatrixBase):
        return U
    if U and isinstance(U[0], sp.MatrixBase):
        return sp.Matrix.hstack(*U)
    return cols(list(U), n)


def _null_combos(M, B, n):
    """Columns ``B c`` for ``c`` in the nullspace of ``M``."""
    if M.cols == 0:
        return sp.zeros(n, 0)
    ns = M.nullspace(simplify=True)
    if not ns:
        return sp.zeros(n, 0)
    return B * sp.Matrix.hstack(*ns)


def graph_blocks(m, pairs):
    X = cols([x for x, _ in pairs], m)
    Y = cols([y for _, y in pairs], m)
    return X, Y


def kernel(m, pairs):
    X, Y = graph_blocks(m, pairs)
    return _null_combos(Y, X, m)


def multivalued(m, pairs):
    X, Y = graph_blocks(m, pairs)
    return _null_combos(X, Y, m)


def iterate_root(m, pairs, lam, steps):
    """``K_1 .. K_steps`` from the definition; ``lam=None`` means infinity."""
    X, Y = graph_blocks(m, pairs)
    K = sp.zeros(m, 0)
    out = []
    for _ in range(steps):
        if lam is None:
            lhs, take = X, Y            # (z, y) in A with z in K  ->  y
        else:
            lhs, take = Y - sym(lam) * X, X   # (x, z + lam x) in A with z in K  ->  x
        M = sp.Matrix.hstack(lhs, -K) if K.cols else lhs
        B = sp.Matrix.hstack(take, sp.zeros(m, K.cols)) if K.cols else take
        K = _null_combos(M, B, m)
        out.append(K)
    return out


def intersection(U, V, n):
    a, b = _as_matrix(U, n), _as_matrix(V, n)
    if a.cols == 0 or b.cols == 0:
        return sp.zeros(n, 0)
    return _null_combos(sp.Matrix.hstack(a, -b), sp.Matrix.hstack(a, sp.zeros(n, b.cols)), n)


def charpoly_coeffs(rows):
    """Ascending coefficients of det(sI - M)."""
    M = sp.Matrix([[sym(c) for c in r] for r in rows])
    s = sp.Symbol("s")
    return [sp.nsimplify(c) for c in reversed(M.charpoly(s).all_coeffs())]


def det(rows):
    return sp.Matrix([[sym(c) for c in r] for r in rows]).det()
