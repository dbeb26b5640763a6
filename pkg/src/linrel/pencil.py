"""Matrix pencils ``sE - F``: relations, Kronecker structure and generated KCF instances.

The Kronecker structure is read off from the Wong sequences

    V_0 = C^d,  V_{i+1} = F^{-1}(E V_i)        W_0 = {0},  W_{i+1} = E^{-1}(F W_i)

computed exactly.  In Kronecker coordinates every ``V_i`` and ``W_i`` is a
product of per-block subspaces, which gives

* ``dim(V* & W_j) = sum_i min(j, eps_i)`` (column singular blocks),
* ``dim W_j - dim(V* & W_j) = sum_i min(j, alpha_i)`` (nilpotent blocks),
* the row singular blocks as the column blocks of the transposed pencil,
* the regular part as the map induced by ``(E, F)`` from ``V*/(V* & W*)`` to
  ``E V*/E(V* & W*)``.

Multi-index entries use the block parameter ``k`` of ``K_k`` (size
``(k-1) x k``), so an entry 1 is a zero-row column block.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import ONE, ZERO, gq
from .poly import charpoly
from .relation import LinearRelation
from .rootspace import INF, root_space, singular_chain_space
from .subspace import DimensionError, Matrix, Subspace, block_diag, canonicalize, image, preimage, solve

__all__ = [
    "MultiIndex",
    "MatrixPencil",
    "KroneckerStructure",
    "KcfSpec",
    "KcfReport",
    "pencil_to_relation",
    "relation_to_pencil",
    "wong_sequences",
    "kronecker_structure",
    "jordan_matrix",
    "nilpotent_block",
    "k_block",
    "l_block",
    "kcf_blocks",
    "kcf_generate",
    "verify_kcf_subspaces",
]


class MultiIndex(tuple):
    """Non-decreasing tuple of positive block sizes."""

    def __new__(cls, entries=()):
        entries = sorted(int(e) for e in entries)
        if any(e < 1 for e in entries):
            raise ValueError("multi-index entries must be positive")
        return super().__new__(cls, entries)

    @property
    def length(self):
        return len(self)

    @property
    def total(self):
        """``|alpha|``: sum of the entries."""
        return sum(self)

    def __repr__(self):
        return f"MultiIndex({list(self)})"


@dataclass(frozen=True)
class MatrixPencil:
    E: Matrix
    F: Matrix

    def __post_init__(self):
        if self.E.shape != self.F.shape:
            raise DimensionError(f"pencil with E {self.E.shape} and F {self.F.shape}")

    @property
    def shape(self):
        return self.E.shape

    def transpose(self):
        return MatrixPencil(self.E.T, self.F.T)

    def transform(self, W: Matrix, T: Matrix):
        """``(W E T, W F T)``."""
        return MatrixPencil(W @ self.E @ T, W @ self.F @ T)


def pencil_to_relation(P: MatrixPencil) -> LinearRelation:
    """``ran [E; F]`` as a relation in C^m."""
    m = P.E.nrows
    return LinearRelation.from_generators(m, zip(P.E.columns(), P.F.columns()))


def relation_to_pencil(A: LinearRelation) -> MatrixPencil:
    """Pencil whose ``[E; F]`` columns are the graph basis of ``A``."""
    m = A.space_dim
    pairs = A.pairs()
    E = Matrix.from_columns([x for x, _ in pairs], m)
    F = Matrix.from_columns([y for _, y in pairs], m)
    return MatrixPencil(E, F)


def wong_sequences(P: MatrixPencil):
    """Return ``(V, W)``: the lists ``V_0 ⊇ V_1 ⊇ ..`` and ``W_0 ⊆ W_1 ⊆ ..`` up to their limits."""
    E, F = P.E, P.F
    d = E.ncols
    V = [Subspace.full(d)]
    while True:
        nxt = preimage(F, image(E, V[-1]))
        if nxt == V[-1]:
            break
        V.append(nxt)
    W = [Subspace.zero(d)]
    while True:
        nxt = preimage(E, image(F, W[-1]))
        if nxt == W[-1]:
            break
        W.append(nxt)
    return V, W


def _indices_from_growth(dims):
    """Multi-index with ``dims[j-1] = sum_i min(j, k_i)`` for ``j = 1, 2, ..``."""
    dims = [0] + list(dims)
    at_least = [dims[j] - dims[j - 1] for j in range(1, len(dims))] + [0]
    entries = []
    for j in range(1, len(at_least)):
        entries += [j] * (at_least[j - 1] - at_least[j])
    return MultiIndex(entries)


def _column_structure(P: MatrixPencil):
    V, W = wong_sequences(P)
    Vs = V[-1]
    eps_dims = [Vs.intersect(Wj).dim for Wj in W[1:]]
    alpha_dims = [Wj.dim - e for Wj, e in zip(W[1:], eps_dims)]
    return V, W, _indices_from_growth(eps_dims), _indices_from_growth(alpha_dims)


@dataclass(eq=False)
class KroneckerStructure:
    """Sizes of the Kronecker blocks plus a regular subpencil ``(E_r, F_r)``.

    ``E_r`` is invertible and ``sE_r - F_r`` is equivalent to ``sI - A_0``.
    Two structures compare equal when the block indices and the characteristic
    polynomial of the regular part agree.
    """

    rows: int
    cols: int
    n0: int
    E_r: Matrix
    F_r: Matrix
    alpha: MultiIndex
    epsilon: MultiIndex
    eta: MultiIndex
    _charpoly: list = field(default=None, repr=False)

    def regular_matrix(self) -> Matrix:
        """``E_r^{-1} F_r``, similar to ``A_0``."""
        return self.E_r.inverse() @ self.F_r

    def regular_charpoly(self):
        if self._charpoly is None:
            self._charpoly = charpoly(self.regular_matrix())
        return self._charpoly

    def signature(self):
        return (self.rows, self.cols, self.n0, tuple(self.alpha), tuple(self.epsilon), tuple(self.eta),
                tuple(self.regular_charpoly()))

    def __eq__(self, other):
        if not isinstance(other, KroneckerStructure):
            return NotImplemented
        return self.signature() == other.signature()

    def check_sizes(self):
        eps_rows = self.epsilon.total - self.epsilon.length
        eta_cols = self.eta.total - self.eta.length
        return (self.n0 + self.alpha.total + eps_rows + self.eta.total == self.rows
                and self.n0 + self.alpha.total + self.epsilon.total + eta_cols == self.cols)

    @property
    def singular_chain_dim(self):
        """``|eps| - n_eps``."""
        return self.epsilon.total - self.epsilon.length


def _coordinates_in(basis, v, n):
    """Coefficients of ``v`` in the (independent) list ``basis`` of vectors in C^n."""
    k = len(basis)
    rows = [tuple(b[i] for b in basis) for i in range(n)]
    x, _ = solve(rows, v, k)
    if x is None:
        raise ArithmeticError("vector outside the span")
    return x


def kronecker_structure(P: MatrixPencil) -> KroneckerStructure:
    m, d = P.shape
    V, W, eps, alpha = _column_structure(P)
    _, _, eta, _ = _column_structure(P.transpose())
    Vs, Ws = V[-1], W[-1]
    X = Vs.intersect(Ws)
    R = X.complement_in(Vs)
    EX = image(P.E, X)
    EV = image(P.E, Vs)
    Z = EX.complement_in(EV)
    n0 = len(R)
    if len(Z) != n0:
        raise ArithmeticError("regular part: column and row quotient dimensions differ")
    basis = list(EX.basis) + list(Z)
    off = EX.dim
    e_cols, f_cols = [], []
    for r in R:
        e_cols.append(_coordinates_in(basis, P.E.apply(r), m)[off:])
        f_cols.append(_coordinates_in(basis, P.F.apply(r), m)[off:])
    E_r = Matrix.from_columns(e_cols, n0) if n0 else Matrix([], 0)
    F_r = Matrix.from_columns(f_cols, n0) if n0 else Matrix([], 0)
    ks = KroneckerStructure(m, d, n0, E_r, F_r, alpha, eps, eta)
    if not ks.check_sizes():
        raise ArithmeticError(f"inconsistent Kronecker sizes {ks.signature()[:6]}")
    return ks


# ---------------------------------------------------------------------------
# generated KCF pencils
# ---------------------------------------------------------------------------

def nilpotent_block(k):
    """``N_k``: ones on the subdiagonal."""
    return Matrix([[ONE if i == j + 1 else ZERO for j in range(k)] for i in range(k)], k)


def k_block(k):
    """``K_k = [I_{k-1} 0]`` of size ``(k-1) x k``."""
    return Matrix([[ONE if j == i else ZERO for j in range(k)] for i in range(k - 1)], k)


def l_block(k):
    """``L_k = [0 I_{k-1}]`` of size ``(k-1) x k``."""
    return Matrix([[ONE if j == i + 1 else ZERO for j in range(k)] for i in range(k - 1)], k)


def jordan_matrix(blocks):
    """Block diagonal ``lam I_n + N_n`` over ``blocks = [(lam, n), ...]``."""
    mats = []
    for lam, n in blocks:
        lam = gq(lam)
        mats.append(Matrix([[lam if i == j else (ONE if i == j + 1 else ZERO) for j in range(n)]
                            for i in range(n)], n))
    if not mats:
        return Matrix([], 0)
    return block_diag(*mats)


@dataclass
class KcfSpec:
    """Prescribed Kronecker form ``W (sE - F) T`` with invertible ``W``, ``T``."""

    jordan_blocks: list
    alpha: MultiIndex
    epsilon: MultiIndex
    eta: MultiIndex
    W: Matrix = None
    T: Matrix = None

    def __post_init__(self):
        self.jordan_blocks = [(gq(lam), int(n)) for lam, n in self.jordan_blocks]
        if any(n < 1 for _, n in self.jordan_blocks):
            raise ValueError("Jordan block sizes must be positive")
        self.alpha = MultiIndex(self.alpha)
        self.epsilon = MultiIndex(self.epsilon)
        self.eta = MultiIndex(self.eta)
        m, d = self.shape
        if self.W is None:
            self.W = Matrix.identity(m)
        if self.T is None:
            self.T = Matrix.identity(d)
        if self.W.shape != (m, m) or self.T.shape != (d, d):
            raise DimensionError(f"W {self.W.shape} / T {self.T.shape} for a {m}x{d} pencil")

    @property
    def n0(self):
        return sum(n for _, n in self.jordan_blocks)

    @property
    def shape(self):
        n0 = self.n0
        m = n0 + self.alpha.total + self.epsilon.total - self.epsilon.length + self.eta.total
        d = n0 + self.alpha.total + self.epsilon.total + self.eta.total - self.eta.length
        return m, d

    def row_offsets(self):
        """Row ranges of the regular, nilpotent, column-singular and row-singular parts."""
        n0 = self.n0
        a = self.alpha.total
        e = self.epsilon.total - self.epsilon.length
        h = self.eta.total
        return {"regular": range(0, n0), "alpha": range(n0, n0 + a),
                "epsilon": range(n0 + a, n0 + a + e), "eta": range(n0 + a + e, n0 + a + e + h)}

    def eigenvalues(self):
        seen = []
        for lam, _ in self.jordan_blocks:
            if lam not in seen:
                seen.append(lam)
        return seen


def kcf_blocks(spec: KcfSpec):
    """Block diagonal ``(E0, F0)`` of the Kronecker form itself."""
    e_parts, f_parts = [], []
    n0 = spec.n0
    if n0:
        e_parts.append(Matrix.identity(n0))
        f_parts.append(jordan_matrix(spec.jordan_blocks))
    for k in spec.alpha:
        e_parts.append(nilpotent_block(k))
        f_parts.append(Matrix.identity(k))
    for k in spec.epsilon:
        e_parts.append(k_block(k))
        f_parts.append(l_block(k))
    for k in spec.eta:
        e_parts.append(k_block(k).T)
        f_parts.append(l_block(k).T)
    m, d = spec.shape
    if not e_parts:
        return Matrix.zeros(m, d), Matrix.zeros(m, d)
    return _block_diag_rect(e_parts, m, d), _block_diag_rect(f_parts, m, d)


def _block_diag_rect(parts, m, d):
    # blocks may have zero rows or zero columns
    rows = []
    col = 0
    for b in parts:
        for r in b.rows:
            rows.append([ZERO] * col + list(r) + [ZERO] * (d - col - b.ncols))
        col += b.ncols
    assert len(rows) == m and col == d
    return Matrix(rows, d)


def kcf_generate(spec: KcfSpec):
    """Pencil with ``W (sE - F) T`` equal to the prescribed Kronecker form, plus ground truth."""
    if not spec.W.is_invertible() or not spec.T.is_invertible():
        raise ZeroDivisionError("W and T must be invertible")
    E0, F0 = kcf_blocks(spec)
    Wi, Ti = spec.W.inverse(), spec.T.inverse()
    P = MatrixPencil(Wi @ E0 @ Ti, Wi @ F0 @ Ti)
    n0 = spec.n0
    truth = KroneckerStructure(
        P.shape[0], P.shape[1], n0,
        Matrix.identity(n0) if n0 else Matrix([], 0),
        jordan_matrix(spec.jordan_blocks),
        spec.alpha, spec.epsilon, spec.eta,
    )
    return P, truth


# ---------------------------------------------------------------------------
# subspace-level check against a known W
# ---------------------------------------------------------------------------

@dataclass
class KcfReport:
    clauses: dict
    failures: list

    @property
    def ok(self):
        return not self.failures


def _block_subspace(spec: KcfSpec, regular_coords, with_alpha):
    m, _ = spec.shape
    off = spec.row_offsets()
    coords = list(regular_coords) + list(off["epsilon"])
    if with_alpha:
        coords += list(off["alpha"])
    return Subspace.coordinate(m, coords)


def _regular_root_coords(spec: KcfSpec, lam):
    coords, start = [], 0
    for mu, n in spec.jordan_blocks:
        if mu == lam:
            coords += range(start, start + n)
        start += n
    return coords


def verify_kcf_subspaces(P: MatrixPencil, spec: KcfSpec, extra_points=None) -> KcfReport:
    """Check the four block formulas for ``R_c``, ``R_inf``, ``R_lam`` and the proper spectrum.

    Right-hand sides are ``W^{-1}(block subspace)``.  ``extra_points`` are
    finite scalars to test besides the Jordan eigenvalues (default: two values
    that are not eigenvalues).
    """
    from .spectrum import proper_point_spectrum

    A = pencil_to_relation(P)
    W = spec.W
    failures = []
    clauses = {}

    rc = singular_chain_space(A)
    rhs = preimage(W, _block_subspace(spec, [], False))
    clauses["i"] = rc == rhs
    if not clauses["i"]:
        failures.append(("i", "R_c", rc, rhs))

    rinf = root_space(A, INF)
    rhs = preimage(W, _block_subspace(spec, [], True))
    clauses["ii"] = rinf == rhs
    if not clauses["ii"]:
        failures.append(("ii", "R_inf", rinf, rhs))

    eigs = spec.eigenvalues()
    points = list(eigs)
    if extra_points is None:
        extra_points = []
        c = 0
        while len(extra_points) < 2:
            cand = gq(c)
            if cand not in eigs:
                extra_points.append(cand)
            c += 1
    points += [gq(p) for p in extra_points]
    ok3 = True
    for lam in points:
        lhs = root_space(A, lam)
        rhs = preimage(W, _block_subspace(spec, _regular_root_coords(spec, lam), False))
        if lhs != rhs:
            ok3 = False
            failures.append(("iii", lam, lhs, rhs))
    clauses["iii"] = ok3

    report = proper_point_spectrum(A)
    got = {lam for lam, _ in report.proper_eigenvalues}
    expected = set(eigs) | ({INF} if spec.alpha.total else set())
    clauses["iv"] = got == expected and report.residual_is_one
    if not clauses["iv"]:
        failures.append(("iv", "sigma_pi", got, expected))
    return KcfReport(clauses, failures)
