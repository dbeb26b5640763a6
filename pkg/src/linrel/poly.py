"""Dense univariate polynomials over Q(i); coefficient lists are in ascending degree."""
from __future__ import annotations

from functools import lru_cache

from .exact import ONE, ZERO, GaussianRational, gq
from .subspace import DimensionError, Matrix


def trim(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def evaluate(p, x):
    x = gq(x)
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1].inverse()
    return [c * lead for c in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    inv = q[-1].inverse()
    while len(rem) >= len(q):
        c = rem[-1] * inv
        shift = len(rem) - len(q)
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] = rem[shift + i] - c * b
        rem = trim(rem[:-1]) if rem[-1].is_zero() else trim(rem)
    return trim(quot), rem


def gcd_poly(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def squarefree_part(p):
    """``p / gcd(p, p')`` made monic: same roots, each simple."""
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd_poly(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def distinct_root_count(p):
    """Number of distinct complex roots of a nonzero polynomial."""
    return degree(squarefree_part(p))


def charpoly(M: Matrix):
    """Monic ``det(sI - M)`` by the Faddeev-LeVerrier recursion."""
    if M.nrows != M.ncols:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = M.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident.scale(coeffs[n - k + 1])
        AM = M @ Mk
        tr = ZERO
        for i in range(n):
            tr = tr + AM.rows[i][i]
        coeffs[n - k] = -tr / k
    return coeffs


def _sympy():
    import sympy

    return sympy


def _to_sympy(c: GaussianRational):
    sp = _sympy()
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)


def _from_sympy(expr) -> GaussianRational:
    sp = _sympy()
    re, im = sp.re(expr), sp.im(expr)
    return GaussianRational.from_parts(int(re.p) * int(im.q), int(im.p) * int(re.q), int(re.q) * int(im.q))


@lru_cache(maxsize=512)
def _factor_cached(key):
    sp = _sympy()
    s = sp.Symbol("s")
    coeffs = [GaussianRational.from_parts(*t) for t in key]
    P = sp.Poly([_to_sympy(c) for c in reversed(coeffs)], s, extension=sp.I)
    _, factors = P.factor_list()
    out = []
    for f, mult in factors:
        fc = [_from_sympy(c) for c in reversed(f.all_coeffs())]
        out.append((tuple(c.parts for c in monic(fc)), mult))
    return tuple(out)


def factor_gaussian(p):
    """Irreducible factorization over Q(i): list of ``(monic factor, multiplicity)``.

    Backed by sympy's factorization over the algebraic field Q<I>.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    key = tuple(c.parts for c in monic(p))
    return [([GaussianRational.from_parts(*t) for t in f], mult) for f, mult in _factor_cached(key)]


def gaussian_roots(p):
    """Split ``p`` into its roots in Q(i) and a rootless monic residual factor.

    Returns ``(roots, residual)`` where ``roots`` is a list of
    ``(root, multiplicity)`` and every root is checked by exact evaluation.
    """
    roots = []
    residual = [ONE]
    for f, mult in factor_gaussian(p):
        if len(f) == 2:
            r = -f[0]
            if not evaluate(p, r).is_zero():
                raise ArithmeticError(f"factorization produced a non-root {r}")
            roots.append((r, mult))
        else:
            for _ in range(mult):
                residual = mul(residual, f)
    return roots, monic(residual)


def format_poly(p, var="s"):
    from .exact import format_scalar

    p = trim(p)
    if not p:
        return "0"
    out = ""
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c.is_zero():
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        neg = c.is_real() and c.re < 0
        mag = -c if neg else c
        if not mono:
            text = format_scalar(mag) if mag.is_real() else f"({format_scalar(mag)})"
        elif mag == ONE:
            text = mono
        elif mag.is_real() and "/" not in format_scalar(mag):
            text = f"{format_scalar(mag)}*{mono}"
        else:
            text = f"({format_scalar(mag)})*{mono}"
        if not out:
            out = ("-" if neg else "") + text
        else:
            out += (" - " if neg else " + ") + text
    return out
