"""Root spaces, the singular chain space, chain witnesses and chain transforms."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exact import ONE, ZERO, GaussianRational, gq
from .relation import LinearRelation
from .subspace import Matrix, Subspace, _lower_block, _vec, canonicalize, hstack, solve

__all__ = [
    "INF",
    "as_extended",
    "Chain",
    "kernel_sequence",
    "root_space",
    "singular_chain_space",
    "jordan_chain",
    "extract_singular_chain",
    "shift_chain_matrix",
    "shift_chain_transform",
    "confluent_block",
    "jordan_extend_transform",
    "confluent_vandermonde",
    "confluent_vandermonde_det",
]


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return "INF"


INF = _Infinity()


def as_extended(value):
    """Normalize a point of C u {inf}: ``"inf"``, ``float('inf')`` and INF map to INF."""
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    if isinstance(value, float) and value == float("inf"):
        return INF
    return gq(value)


def _lincomb(coeffs, vectors, n):
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c.is_zero():
            continue
        for k in range(n):
            if not v[k].is_zero():
                out[k] = out[k] + c * v[k]
    return tuple(out)


# ---------------------------------------------------------------------------
# root spaces
# ---------------------------------------------------------------------------

def _step_graph(A: LinearRelation, lam):
    """Pairs ``(x, z)`` such that ``K_i = {x : exists z in K_{i-1}, (x, z) in G}``.

    For finite ``lam`` this is the graph of ``A - lam``; for infinity it is the
    graph of ``A^{-1}``, since ``mul A^i = ker (A^{-1})^i``.
    """
    if lam is INF:
        return A.inverse()
    return A.shift(lam)


def kernel_sequence(A: LinearRelation, lam):
    """``[ker (A-lam)^1, ker (A-lam)^2, ...]`` (or ``mul A^i`` at infinity) up to stabilization.

    The list is strictly increasing and stops as soon as the next term would
    repeat the last one, so its final entry is the root space.  ``ker (A-lam)^0``
    is the zero space and is not listed.
    """
    lam = as_extended(lam)
    key = ("kseq", lam)
    return A._memo(key, lambda: _kernel_sequence(A, lam))


def _kernel_sequence(A, lam):
    m = A.space_dim
    G = _step_graph(A, lam)
    rows_g = [r[m:] + r[:m] for r in G.graph.basis]
    seq = []
    prev = Subspace.zero(m)
    for _ in range(m + 2):
        rows = rows_g + [tuple(-c for c in k) + (ZERO,) * m for k in prev.basis]
        cur = _lower_block(rows, m, m)
        if seq and cur == prev:
            break
        seq.append(cur)
        prev = cur
    return seq


def root_space(A: LinearRelation, lam) -> Subspace:
    """``R_lam(A)``: union of ``ker (A - lam)^i``, or of ``mul A^i`` for ``lam = INF``."""
    return kernel_sequence(A, lam)[-1]


def singular_chain_space(A: LinearRelation) -> Subspace:
    """``R_c(A) = R_0(A) & R_inf(A)``."""
    return A._memo("rc", lambda: root_space(A, ZERO).intersect(root_space(A, INF)))


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """Witness vectors of a Jordan or singular chain.

    ``kind`` is ``"jordan"`` (finite ``eigenvalue``), ``"infinity"`` or
    ``"singular"``.  Vector order follows the pairs of the chain:

    * jordan: ``x_1..x_n`` with ``(x_1, lam x_1)`` and ``(x_i, x_{i-1} + lam x_i)`` in A;
    * infinity: ``y_1..y_n`` with ``(0, y_1)`` and ``(y_{i-1}, y_i)`` in A;
    * singular: ``u_k..u_1`` with ``(0, u_k), (u_k, u_{k-1}), .., (u_1, 0)`` in A.

    ``freedom`` is the dimension of the solution set of the homogeneous chain
    equations for the same endpoint (0 means the chain is unique).
    """

    kind: str
    vectors: tuple
    space_dim: int
    eigenvalue: object = None
    freedom: int = 0

    def __len__(self):
        return len(self.vectors)

    @property
    def endpoint(self):
        return self.vectors[-1] if self.vectors else None

    def pairs(self):
        m = self.space_dim
        zero = (ZERO,) * m
        v = self.vectors
        if self.kind == "jordan":
            lam = self.eigenvalue
            out = []
            prev = zero
            for x in v:
                out.append((x, tuple(p + lam * a for p, a in zip(prev, x))))
                prev = x
            return out
        if self.kind == "infinity":
            return list(zip((zero,) + v[:-1], v))
        if self.kind == "singular":
            return list(zip((zero,) + v, v + (zero,)))
        raise ValueError(f"unknown chain kind {self.kind!r}")

    def verify(self, A: LinearRelation) -> bool:
        return all(A.contains(x, y) for x, y in self.pairs())

    def span(self) -> Subspace:
        return canonicalize(self.space_dim, self.vectors)


def _solve_chain(A: LinearRelation, lam, x, n):
    """Solve for ``x_1..x_{n-1}`` with ``(x_i, x_{i-1}) in G`` (``x_0 = 0``, ``x_n = x``)."""
    m = A.space_dim
    G = _step_graph(A, lam)
    eqs = G.graph.equations()
    if n == 1:
        return [x], 0
    if not eqs:
        # G is everything: any choice works
        return [(ZERO,) * m] * (n - 1) + [x], (n - 1) * m
    N = (n - 1) * m
    rows, rhs = [], []
    for i in range(1, n + 1):
        # link i: C_x x_i + C_y x_{i-1} = 0
        for c in eqs:
            cx, cy = c[:m], c[m:]
            row = [ZERO] * N
            b = ZERO
            if i < n:
                row[(i - 1) * m:i * m] = cx
            else:
                b = -sum((a * xi for a, xi in zip(cx, x)), ZERO)
            if i >= 2:
                row[(i - 2) * m:(i - 1) * m] = cy
            rows.append(tuple(row))
            rhs.append(b)
    sol, freedom = solve(rows, rhs, N)
    if sol is None:
        return None, freedom
    xs = [sol[k * m:(k + 1) * m] for k in range(n - 1)]
    return xs + [x], freedom


def jordan_chain(A: LinearRelation, lam, x):
    """Minimal-length Jordan chain ending at ``x``; None when ``x`` is not in ``R_lam(A)``."""
    lam = as_extended(lam)
    x = _vec(x)
    seq = kernel_sequence(A, lam)
    if not seq[-1].contains(x):
        return None
    n = next(i for i, K in enumerate(seq, start=1) if K.contains(x))
    xs, freedom = _solve_chain(A, lam, x, n)
    if xs is None:
        raise RuntimeError("chain equations inconsistent for a root-space vector")
    if lam is INF:
        chain = Chain("infinity", tuple(xs), A.space_dim, INF, freedom)
    else:
        chain = Chain("jordan", tuple(xs), A.space_dim, lam, freedom)
    if not chain.verify(A):
        raise RuntimeError("constructed Jordan chain failed verification")
    if freedom and singular_chain_space(A).is_zero():
        raise RuntimeError("non-unique Jordan chain although R_c(A) = {0}")
    return chain


def extract_singular_chain(A: LinearRelation):
    """A verified singular chain through a nonzero vector of ``R_c(A)``, or None."""
    Rc = singular_chain_space(A)
    if Rc.is_zero():
        return None
    u = Rc.basis[0]
    down = jordan_chain(A, ZERO, u)     # (u, x_{n-1}), .., (x_1, 0)
    up = jordan_chain(A, INF, u)        # (0, y_1), .., (y_{p-1}, u)
    vectors = up.vectors[:-1] + (u,) + tuple(reversed(down.vectors[:-1]))
    chain = Chain("singular", vectors, A.space_dim, None, up.freedom + down.freedom)
    if not chain.verify(A):
        raise RuntimeError("constructed singular chain failed verification")
    return chain


# ---------------------------------------------------------------------------
# chain transforms
# ---------------------------------------------------------------------------

def shift_chain_matrix(lam, n: int) -> Matrix:
    """Unit lower triangular ``(n-1) x (n-1)`` matrix of ``z_m = sum_i binom(n-i-1, n-m-1) (-lam)^(m-i) x_i``."""
    lam = gq(lam)
    if n < 2:
        raise ValueError("the shift transform needs a chain of length n >= 2")
    neg = -lam
    rows = []
    for mm in range(1, n):
        rows.append([gq(comb(n - i - 1, n - mm - 1)) * neg ** (mm - i) if i <= mm else ZERO
                     for i in range(1, n)])
    return Matrix(rows, n - 1)


def shift_chain_transform(lam, xs):
    """Turn a chain ``(0,x_1),(x_1,x_2),..,(x_{n-1},x_n)`` in ``A - lam`` into ``z_1..z_{n-1}``.

    The result satisfies ``(0,z_1), (z_1,z_2), .., (z_{n-1}, x_n)`` in ``A`` and
    spans the same space as ``x_1..x_{n-1}``.
    """
    xs = [_vec(x) for x in xs]
    n = len(xs)
    C = shift_chain_matrix(lam, n)
    dim = len(xs[0])
    return [_lincomb(row, xs[:-1], dim) for row in C.rows]


def confluent_block(lam, s: int, k: int) -> Matrix:
    """``C_{s,k}(lam)``: entries ``binom(m, i) lam^(m-i)`` for ``i <= m``, zero above."""
    lam = gq(lam)
    if s < 0 or k < 0:
        raise ValueError("negative size")
    rows = [[gq(comb(m, i)) * lam ** (m - i) if i <= m else ZERO for i in range(k + 1)]
            for m in range(s + 1)]
    return Matrix(rows, k + 1)


def jordan_extend_transform(lam, xs, s: int):
    """``z_m = sum_i binom(m, i) lam^(m-i) x_i`` for ``m = 0..s`` (``x_i = 0`` beyond ``k``).

    For a chain ``(x_0,x_1), .., (x_{k-1},x_k), (x_k,0)`` in ``A - lam`` every
    ``(z_m, z_{m+1})`` lies in ``A``.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    xs = [_vec(x) for x in xs]
    k = len(xs) - 1
    C = confluent_block(lam, s, k)
    dim = len(xs[0])
    return [_lincomb(row, xs, dim) for row in C.rows]


def confluent_vandermonde(s: int, blocks) -> Matrix:
    """Horizontal concatenation of ``C_{s,k_r}(lam_r)`` over ``blocks = [(lam_r, k_r), ...]``."""
    mats = [confluent_block(lam, s, k) for lam, k in blocks]
    if not mats:
        return Matrix([[] for _ in range(s + 1)], 0)
    return hstack(*mats)


def confluent_vandermonde_det(blocks) -> GaussianRational:
    """Closed form ``prod_{i<j} (lam_i - lam_j)^((k_i+1)(k_j+1))``.

    With the block order of :func:`confluent_vandermonde` the determinant equals
    this product up to the sign ``(-1)^(sum_{i<j} (k_i+1)(k_j+1))``.
    """
    blocks = [(gq(lam), k) for lam, k in blocks]
    out = ONE
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            (li, ki), (lj, kj) = blocks[i], blocks[j]
            out = out * (li - lj) ** ((ki + 1) * (kj + 1))
    return out
