"""Matrices and canonical subspaces of C^n over the Gaussian rationals.

Every subspace is stored by the reduced row-echelon form of a row basis, so
equality of subspaces is equality of stored bases.  The elimination kernel
works on Gaussian integers (fraction free, with content removal after every
row operation) and only converts back to :class:`GaussianRational` when the
pivots are normalized.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .exact import ONE, ZERO, GaussianRational, gq

__all__ = [
    "DimensionError",
    "Matrix",
    "Subspace",
    "rref",
    "nullspace",
    "solve",
    "canonicalize",
    "image",
    "preimage",
    "compare",
]

Vector = tuple  # tuple[GaussianRational, ...]


class DimensionError(ValueError):
    """Shapes or ambient dimensions do not match."""


def _vec(v) -> Vector:
    return tuple(x if isinstance(x, GaussianRational) else gq(x) for x in v)


# ---------------------------------------------------------------------------
# elimination kernel
# ---------------------------------------------------------------------------

def _to_int_row(row):
    den = 1
    for x in row:
        d = x._d
        if d != 1:
            den = den * d // gcd(den, d)
    re = [x._a * (den // x._d) for x in row]
    im = [x._b * (den // x._d) for x in row]
    return re, im


def rref(rows: Iterable[Sequence[GaussianRational]], ncols: int):
    """Reduced row-echelon form of ``rows``.

    Returns ``(basis, pivots)``: the nonzero reduced rows as tuples of
    GaussianRational and their pivot columns.
    """
    work = []
    for row in rows:
        if len(row) != ncols:
            raise DimensionError(f"row of length {len(row)}, expected {ncols}")
        re, im = _to_int_row(row)
        if any(re) or any(im):
            work.append([re, im])
    pivots = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        sel = -1
        best = None
        for i in range(r, nrows):
            a, b = work[i][0][c], work[i][1][c]
            if a or b:
                # prefer small pivots to keep entries short
                size = abs(a) + abs(b)
                if best is None or size < best:
                    best, sel = size, i
                    if size == 1:
                        break
        if sel < 0:
            continue
        if sel != r:
            work[r], work[sel] = work[sel], work[r]
        pre, pim = work[r]
        pa, pb = pre[c], pim[c]
        for j in range(nrows):
            if j == r:
                continue
            jre, jim = work[j]
            ea, eb = jre[c], jim[c]
            if not (ea or eb):
                continue
            # row_j <- p * row_j - e * row_r
            nre = [0] * ncols
            nim = [0] * ncols
            for k in range(ncols):
                xa, xb = jre[k], jim[k]
                ya, yb = pre[k], pim[k]
                nre[k] = pa * xa - pb * xb - (ea * ya - eb * yb)
                nim[k] = pa * xb + pb * xa - (ea * yb + eb * ya)
            g = gcd(*nre, *nim)
            if g > 1:
                nre = [v // g for v in nre]
                nim = [v // g for v in nim]
            work[j] = [nre, nim]
        pivots.append(c)
        r += 1
    basis = []
    for i, c in enumerate(pivots):
        re, im = work[i]
        pa, pb = re[c], im[c]
        n = pa * pa + pb * pb
        # (x + yi) / (pa + pb i) = (x + yi)(pa - pb i) / n
        out = []
        for k in range(ncols):
            x, y = re[k], im[k]
            if x or y:
                out.append(GaussianRational.from_parts(x * pa + y * pb, y * pa - x * pb, n))
            else:
                out.append(ZERO)
        basis.append(tuple(out))
    return tuple(basis), tuple(pivots)


def nullspace(rows: Sequence[Sequence[GaussianRational]], ncols: int):
    """Basis (list of vectors) of ``{x : row . x = 0 for every row}``."""
    basis, pivots = rref(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(basis, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        out.append(tuple(v))
    return out


def solve(rows, rhs, ncols):
    """Solve ``rows @ x = rhs``.

    Returns ``(x, freedom)`` with one particular solution (free variables set to
    zero) and the dimension of the homogeneous solution space, or ``(None, freedom)``
    when the system is inconsistent.
    """
    rhs = _vec(rhs)
    if len(rhs) != len(rows):
        raise DimensionError("right-hand side length does not match the row count")
    aug = [tuple(_vec(r)) + (b,) for r, b in zip(rows, rhs)]
    basis, pivots = rref(aug, ncols + 1)
    freedom = ncols - sum(1 for p in pivots if p < ncols)
    if pivots and pivots[-1] == ncols:
        return None, freedom
    x = [ZERO] * ncols
    for row, p in zip(basis, pivots):
        x[p] = row[ncols]
    return tuple(x), freedom


def _dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a._a or a._b:
            if b._a or b._b:
                s = s + a * b
    return s


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix with GaussianRational entries (row major)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(_vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [_vec(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise DimensionError("column length mismatch")
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def columns(self):
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix(self.columns(), self.nrows)

    def apply(self, v):
        v = _vec(v)
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for a {self.shape} matrix")
        return tuple(_dot(r, v) for r in self.rows)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return Matrix([[_dot(r, c) for c in cols] for r in self.rows], other.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        c = gq(c)
        return Matrix([[c * a for a in r] for r in self.rows], self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}], ncols={self.ncols})"

    def rank(self):
        return len(rref(self.rows, self.ncols)[1])

    def nullspace(self):
        return nullspace(self.rows, self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if not a[i][c].is_zero()), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            piv = a[c][c]
            det = det * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                if a[i][c].is_zero():
                    continue
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return det

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        aug = [r + tuple(ONE if i == j else ZERO for j in range(n)) for i, r in enumerate(self.rows)]
        basis, pivots = rref(aug, 2 * n)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise ZeroDivisionError("singular matrix")
        return Matrix([r[n:] for r in basis[:n]], n)

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


def block_diag(*blocks: Matrix) -> Matrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append([ZERO] * off + list(r) + [ZERO] * (nc - off - b.ncols))
        off += b.ncols
    assert len(rows) == nr
    return Matrix(rows, nc)


def hstack(*mats: Matrix) -> Matrix:
    if len({m.nrows for m in mats}) > 1:
        raise DimensionError("hstack of matrices with different row counts")
    nr = mats[0].nrows
    return Matrix([sum((m.rows[i] for m in mats), ()) for i in range(nr)], sum(m.ncols for m in mats))


def vstack(*mats: Matrix) -> Matrix:
    if len({m.ncols for m in mats}) > 1:
        raise DimensionError("vstack of matrices with different column counts")
    return Matrix(sum((m.rows for m in mats), ()), mats[0].ncols)


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of C^n held as the RREF of a row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis=(), pivots=None):
        # trusted constructor: basis must already be reduced; use canonicalize() otherwise
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        if pivots is None:
            pivots = tuple(next(j for j, x in enumerate(r) if not x.is_zero()) for r in self.basis)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n):
        return cls(n, (), ())

    @classmethod
    def full(cls, n):
        return cls(n, Matrix.identity(n).rows, tuple(range(n)))

    @classmethod
    def span(cls, n, vectors):
        return canonicalize(n, vectors)

    @classmethod
    def coordinate(cls, n, indices):
        """Span of the standard unit vectors ``e_j`` for ``j`` in ``indices``."""
        idx = sorted(set(indices))
        rows = [tuple(ONE if k == j else ZERO for k in range(n)) for j in idx]
        return cls(n, rows, tuple(idx))

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def matrix(self):
        return Matrix(self.basis, self.ambient_dim)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace(n={self.ambient_dim}, dim={self.dim}, basis=[{rows}])"

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def reduce(self, v):
        """Remainder of ``v`` after elimination against the basis."""
        v = list(_vec(v))
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in C^{self.ambient_dim}")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if not c.is_zero():
                for k in range(p, self.ambient_dim):
                    if not row[k].is_zero():
                        v[k] = v[k] - c * row[k]
        return tuple(v)

    def contains(self, v):
        return all(x.is_zero() for x in self.reduce(v))

    __contains__ = contains

    def coordinates(self, v):
        """Coefficients of ``v`` in the stored basis, or None if ``v`` is outside."""
        v = _vec(v)
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def sum(self, other):
        self._check(other)
        return canonicalize(self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def intersect(self, other):
        """Zassenhaus: eliminate rows ``[u | u]`` and ``[v | 0]``; rows ``[0 | w]`` span the meet."""
        self._check(other)
        n = self.ambient_dim
        if self.is_zero() or other.is_zero():
            return Subspace.zero(n)
        zeros = (ZERO,) * n
        rows = [u + u for u in self.basis] + [v + zeros for v in other.basis]
        return _lower_block(rows, n, n)

    __and__ = intersect

    def is_subspace_of(self, other):
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    __le__ = is_subspace_of

    def __ge__(self, other):
        return other.is_subspace_of(self)

    def equations(self):
        """Rows ``c`` with ``c . u = 0`` for all ``u`` here; their common zero set is this subspace."""
        return nullspace(self.basis, self.ambient_dim)

    def complement_in(self, other):
        """Vectors of ``other``'s basis that extend ``self`` to a basis of ``self + other``."""
        self._check(other)
        chosen = []
        current = self
        for v in other.basis:
            if not current.contains(v):
                chosen.append(v)
                current = canonicalize(self.ambient_dim, current.basis + (v,))
        return chosen

    def project(self, coords):
        """Image under the coordinate projection onto the listed coordinates."""
        coords = list(coords)
        return canonicalize(len(coords), [tuple(r[j] for j in coords) for r in self.basis])


def _lower_block(rows, k, ncols_tail):
    """Span of the tails of combinations of ``rows`` whose first ``k`` entries vanish."""
    basis, pivots = rref(rows, k + ncols_tail)
    tail = []
    tpiv = []
    for r, p in zip(basis, pivots):
        if p >= k:
            tail.append(r[k:])
            tpiv.append(p - k)
    return Subspace(ncols_tail, tail, tpiv)


def canonicalize(n: int, spanning) -> Subspace:
    """Canonical Subspace spanned by ``spanning`` (vectors of length n)."""
    vecs = [_vec(v) for v in spanning]
    for v in vecs:
        if len(v) != n:
            raise DimensionError(f"vector of length {len(v)} in C^{n}")
    basis, pivots = rref(vecs, n)
    return Subspace(n, basis, pivots)


def image(M: Matrix, U: Subspace) -> Subspace:
    if M.ncols != U.ambient_dim:
        raise DimensionError(f"{M.shape} matrix applied to a subspace of C^{U.ambient_dim}")
    return canonicalize(M.nrows, [M.apply(u) for u in U.basis])


def preimage(M: Matrix, U: Subspace) -> Subspace:
    """``{x : M x in U}``."""
    if M.nrows != U.ambient_dim:
        raise DimensionError(f"{M.shape} matrix against a subspace of C^{U.ambient_dim}")
    eqs = U.equations()
    if not eqs:
        return Subspace.full(M.ncols)
    cols = M.columns()
    rows = [tuple(_dot(c, col) for col in cols) for c in eqs]
    return canonicalize(M.ncols, nullspace(rows, M.ncols))


def compare(U: Subspace, V: Subspace) -> str:
    """One of ``"equal"``, ``"U<V"``, ``"V<U"``, ``"incomparable"`` (``<`` is proper inclusion)."""
    U._check(V)
    if U == V:
        return "equal"
    if U.is_subspace_of(V):
        return "U<V"
    if V.is_subspace_of(U):
        return "V<U"
    return "incomparable"
