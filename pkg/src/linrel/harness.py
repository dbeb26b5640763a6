"""Randomized verification of the structural identities on generated instances.

Every property is a *named check*: a function of one object (a relation, a
pencil, or nothing) and a list of arguments (scalars, vectors, integers,
matrices).  Suites draw random instances and arguments and run checks; a
failing check is reported as a self-contained JSON document that
:func:`replay` evaluates again.

Each trial seeds its own ``random.Random`` from ``(seed, suite, trial)``, so
results do not depend on trial order or on the number of worker processes.
"""
from __future__ import annotations

import random
import time
import traceback
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import rootspace as rs
from .docio import from_document, pencil_document, relation_document, scalar_text, parse_point
from .exact import ONE, ZERO, GaussianRational, gq, parse, format_scalar
from .pencil import (
    KcfSpec,
    MatrixPencil,
    kcf_generate,
    kronecker_structure,
    pencil_to_relation,
    verify_kcf_subspaces,
)
from .relation import LinearRelation
from .rootspace import INF
from .spectrum import (
    independence_certificate,
    is_eigenvalue,
    is_proper_eigenvalue,
    proper_point_spectrum,
    proper_spectrum_size,
)
from .subspace import Matrix, Subspace, _lower_block, canonicalize, nullspace

__all__ = [
    "DEFAULT_POOL",
    "HarnessConfig",
    "SuiteResult",
    "Sampler",
    "Instance",
    "CHECKS",
    "SUITES",
    "random_relation",
    "random_kcf_spec",
    "run_check",
    "run_suite",
    "run_all",
    "replay",
    "transcript",
]


def _default_pool():
    reals = sorted({Fraction(a, b) for a in range(-3, 4) for b in range(1, 4)})
    pool = [gq(q) for q in reals]
    pool += [GaussianRational(a, c) for a in (-1, 0, 1) for c in (-1, 1)]
    pool += [parse(t) for t in ("1/2+1/3i", "-2/3+2i", "3-1/2i", "2+3i")]
    return tuple(pool)


DEFAULT_POOL = _default_pool()


@dataclass(frozen=True)
class HarnessConfig:
    trials: int = 20
    seed: int = 0
    max_dim: int = 5
    scalar_pool: tuple = DEFAULT_POOL
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.max_dim < 1:
            raise ValueError("max_dim must be at least 1")
        if not self.scalar_pool:
            raise ValueError("empty scalar pool")
        object.__setattr__(self, "scalar_pool", tuple(gq(c) for c in self.scalar_pool))


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------

class Sampler:
    """Draws scalars, vectors and matrices from a scalar pool."""

    def __init__(self, rng: random.Random, pool):
        self.rng = rng
        self.pool = pool
        self.nonzero_pool = [c for c in pool if not c.is_zero()]

    def scalar(self):
        return self.rng.choice(self.pool)

    def nonzero(self):
        return self.rng.choice(self.nonzero_pool)

    def entry(self, zero_prob=0.35):
        return ZERO if self.rng.random() < zero_prob else self.nonzero()

    def vector(self, n, zero_prob=0.35):
        return tuple(self.entry(zero_prob) for _ in range(n))

    def matrix(self, rows, cols, zero_prob=0.35):
        return Matrix([self.vector(cols, zero_prob) for _ in range(rows)], cols)

    def invertible(self, n, zero_prob=0.4):
        if n == 0:
            return Matrix([], 0)
        while True:
            M = self.matrix(n, n, zero_prob)
            if M.is_invertible():
                return M

    def low_rank(self, rows, cols):
        r = self.rng.randint(0, min(rows, cols))
        if r == 0:
            return Matrix.zeros(rows, cols)
        return self.matrix(rows, r, 0.3) @ self.matrix(r, cols, 0.3)

    def distinct(self, k, exclude=(), source=None):
        source = [c for c in (source or self.pool) if c not in exclude]
        if k > len(source):
            raise ValueError("not enough distinct scalars in the pool")
        return self.rng.sample(source, k)

    def combination(self, basis, n):
        """Random combination of ``basis`` with nonzero pool coefficients (zero vector if empty)."""
        out = [ZERO] * n
        for b in basis:
            c = self.nonzero()
            for k in range(n):
                if not b[k].is_zero():
                    out[k] = out[k] + c * b[k]
        return tuple(out)


@dataclass
class Instance:
    relation: LinearRelation
    hints: list = field(default_factory=list)
    spec: KcfSpec = None


def _add_block(blocks, kind, k, S):
    if kind == "jordan":
        blocks["jordan"].append((S.scalar(), k))
    else:
        blocks[kind].append(k)


def random_kcf_spec(S: Sampler, size, require=(), max_rows=None, transforms=True):
    """Random Kronecker spec with block parameters summing to at most ``size``.

    ``require`` lists ``(kind, k)`` blocks that must be present; kinds are
    ``"jordan"``, ``"alpha"``, ``"epsilon"``, ``"eta"``.  The row count is kept
    between 1 and ``max_rows`` (default ``size``).
    """
    max_rows = size if max_rows is None else max_rows
    rng = S.rng
    for _ in range(1000):
        blocks = {"jordan": [], "alpha": [], "epsilon": [], "eta": []}
        used = 0
        for kind, k in require:
            _add_block(blocks, kind, k, S)
            used += k
        target = rng.randint(max(used, 1), size)
        while used < target:
            kind = rng.choice(("jordan", "jordan", "alpha", "epsilon", "epsilon", "eta"))
            k = rng.randint(1, min(3, target - used))
            _add_block(blocks, kind, k, S)
            used += k
        spec = KcfSpec(blocks["jordan"], blocks["alpha"], blocks["epsilon"], blocks["eta"])
        m, d = spec.shape
        if 1 <= m <= max_rows and d >= 1:
            if transforms:
                spec.W = S.invertible(m)
                spec.T = S.invertible(d)
            return spec
    raise RuntimeError("could not draw a Kronecker spec within the limits")


def random_relation(S: Sampler, max_dim, structured=None, require=()):
    """A relation in C^m with ``m <= max_dim``.

    Unstructured relations are spans of ``g`` random pairs (``0 <= g <= 2m``)
    with a random sparsity level.  Structured ones are ``ran [E; F]`` of a
    generated Kronecker pencil whose Jordan eigenvalues come from the pool;
    those eigenvalues are returned as ``hints``.
    """
    rng = S.rng
    # a column singular block K_k has k-1 rows, every other block k rows
    require = [(kind, k) for kind, k in require if k - (kind == "epsilon") <= max_dim]
    if require:
        structured = True
    if structured is None:
        structured = rng.random() < 0.5
    if not structured:
        m = rng.randint(1, max_dim)
        g = rng.randint(0, 2 * m)
        zp = rng.choice((0.2, 0.5, 0.8))
        pairs = [(S.vector(m, zp), S.vector(m, zp)) for _ in range(g)]
        return Instance(LinearRelation.from_generators(m, pairs))
    spec = random_kcf_spec(S, max_dim + 2, require=require, max_rows=max_dim)
    P, _ = kcf_generate(spec)
    return Instance(pencil_to_relation(P), spec.eigenvalues(), spec)


def random_pencil(S: Sampler, max_dim):
    m = S.rng.randint(1, max_dim)
    d = S.rng.randint(1, max_dim)
    return MatrixPencil(S.low_rank(m, d), S.low_rank(m, d))


# ---------------------------------------------------------------------------
# named checks
# ---------------------------------------------------------------------------

def _rel(n, gens):
    return LinearRelation.from_generators(n, [(v[:n], v[n:]) for v in gens])


def _as_relation(obj):
    return pencil_to_relation(obj) if isinstance(obj, MatrixPencil) else obj


def _matrix(rows):
    if isinstance(rows, Matrix):
        return rows
    rows = [tuple(r) for r in rows]
    return Matrix(rows, len(rows[0]) if rows else 0)


def _spec_from_args(args):
    jordan, alpha, eps, eta, W, T = args
    return KcfSpec([(lam, n) for lam, n in jordan], alpha, eps, eta, _matrix(W), _matrix(T))


def _spec_args(spec: KcfSpec):
    return [[[lam, n] for lam, n in spec.jordan_blocks], list(spec.alpha), list(spec.epsilon),
            list(spec.eta), spec.W, spec.T]


def _operator_sum(A: LinearRelation, B: LinearRelation) -> LinearRelation:
    """``{(x, y + z) : (x, y) in A, (x, z) in B}``."""
    m = A.space_dim
    zero = (ZERO,) * m
    rows = [x + x + y for x, y in A.pairs()]
    rows += [tuple(-c for c in x) + zero + z for x, z in B.pairs()]
    return LinearRelation(m, _lower_block(rows, m, 2 * m))


def _scalar_identity(m, c):
    return LinearRelation.identity(m).scale(c)


def _preimage_step(G: LinearRelation, K: Subspace) -> Subspace:
    """``{x : exists z in K with (x, z) in G}``, computed independently of kernel_sequence."""
    m = G.space_dim
    zero = (ZERO,) * m
    e = [tuple(ONE if i == j else ZERO for j in range(m)) for i in range(m)]
    box = canonicalize(2 * m, [v + zero for v in e] + [zero + k for k in K.basis])
    return G.graph.intersect(box).project(range(m))


def _power_root_space(A: LinearRelation, lam, n):
    """``ker (A - lam)^n`` or ``mul A^n`` by explicit products."""
    if lam is INF:
        return A.power(n).mul
    return A.shift(lam).power(n).ker


def check_root_intersection(A, args):
    lam, mu = args
    if lam == mu:
        return False, "precondition: lam == mu"
    lhs = rs.root_space(A, lam).intersect(rs.root_space(A, mu))
    return lhs == rs.singular_chain_space(A)


def check_disjoint_sums(A, args):
    lams, mus = args
    if set(lams) & set(mus):
        return False, "precondition: sets intersect"
    m = A.space_dim
    left = canonicalize(m, [b for lam in lams for b in rs.root_space(A, lam).basis])
    right = canonicalize(m, [b for mu in mus for b in rs.root_space(A, mu).basis])
    return left.intersect(right) == rs.singular_chain_space(A)


def check_forced_sum(A, args):
    lams, mu, xs = args
    m = A.space_dim
    if len(set(lams)) != len(lams) or mu in lams:
        return False, "precondition: eigenvalues not distinct"
    for lam, x in zip(lams, xs):
        if not rs.root_space(A, lam).contains(x):
            return False, f"precondition: x not in R_{scalar_text(lam)}"
    total = tuple(sum((x[k] for x in xs), ZERO) for k in range(m))
    if not rs.root_space(A, mu).contains(total):
        return False, "precondition: sum not in R_mu"
    rc = rs.singular_chain_space(A)
    bad = [i for i, x in enumerate(xs) if not rc.contains(x)]
    return not bad, f"x_{bad} outside R_c" if bad else ""


def check_shift_transform(A, args):
    lam, xs = args
    n = len(xs)
    m = A.space_dim
    zero = (ZERO,) * m
    B = A.shift(lam)
    if n < 2 or not B.contains(zero, xs[0]) or not all(B.contains(xs[i], xs[i + 1]) for i in range(n - 1)):
        return False, "precondition: not a chain of length >= 2 in A - lam"
    C = rs.shift_chain_matrix(lam, n)
    if any(C.rows[i][i] != ONE or any(not C.rows[i][j].is_zero() for j in range(i + 1, n - 1))
           for i in range(n - 1)):
        return False, "transform matrix not unit lower triangular"
    zs = rs.shift_chain_transform(lam, xs)
    ok = A.contains(zero, zs[0]) and all(A.contains(zs[i], zs[i + 1]) for i in range(n - 2))
    ok = ok and A.contains(zs[-1], xs[-1])
    if not ok:
        return False, "membership of the transformed chain"
    return canonicalize(m, zs) == canonicalize(m, xs[:-1]), "span changed"


def check_extend_transform(A, args):
    lam, xs, s = args
    m = A.space_dim
    zero = (ZERO,) * m
    B = A.shift(lam)
    k = len(xs) - 1
    if not all(B.contains(xs[i], xs[i + 1]) for i in range(k)) or not B.contains(xs[k], zero):
        return False, "precondition: not a chain ending at (x_k, 0) in A - lam"
    zs = rs.jordan_extend_transform(lam, xs, s)
    bad = [j for j in range(s) if not A.contains(zs[j], zs[j + 1])]
    return not bad, f"(z_j, z_j+1) outside A for j in {bad}"


def check_vandermonde_det(_, args):
    blocks = [(lam, k) for lam, k in args[0]]
    lams = [lam for lam, _ in blocks]
    if len(set(lams)) != len(lams):
        return False, "precondition: nodes not distinct"
    s = sum(k + 1 for _, k in blocks) - 1
    W = rs.confluent_vandermonde(s, blocks)
    det = W.det()
    formula = rs.confluent_vandermonde_det(blocks)
    if det.norm() != formula.norm():
        return False, f"|det| {format_scalar(det)} vs {format_scalar(formula)}"
    return W.is_invertible(), "W singular"


def check_shift_invariance(A, args):
    lam, mu = args
    return rs.root_space(A, lam) == rs.root_space(A.shift(mu), lam - mu)


def check_infinity_invariance(A, args):
    (lam,) = args
    r = rs.root_space(A, INF)
    return r == rs.root_space(A.shift(lam), INF) and r == rs.root_space(A.scale(lam), INF)


def check_inverse_root_space(A, args):
    (lam,) = args
    Ai = A.inverse()
    inv = ONE / lam
    if rs.root_space(A, lam) != rs.root_space(Ai, inv):
        return False, "R_lam(A) != R_1/lam(A^-1)"
    if rs.root_space(A, ZERO) != rs.root_space(Ai, INF) or rs.root_space(A, INF) != rs.root_space(Ai, ZERO):
        return False, "R_0 / R_inf exchange"
    s1, s2 = rs.kernel_sequence(A, lam), rs.kernel_sequence(Ai, inv)
    return s1 == s2, "ker (A-lam)^n != ker (A^-1 - 1/lam)^n"


def check_resolvent_identity(A, args):
    (lam,) = args
    m = A.space_dim
    lhs = A.shift(lam).inverse()
    inner = A.inverse().shift(ONE / lam).inverse().scale(-ONE / (lam * lam))
    rhs = _operator_sum(_scalar_identity(m, -ONE / lam), inner)
    if lhs != rhs:
        return False, "operator-sum form"
    return lhs == inner.shift(ONE / lam), "shift form"


def check_rc_shift_invariance(A, args):
    (lam,) = args
    return rs.singular_chain_space(A) == rs.singular_chain_space(A.shift(lam))


def check_rc_with_infinity(A, args):
    (lam,) = args
    return rs.singular_chain_space(A) == rs.root_space(A, lam).intersect(rs.root_space(A, INF))


def check_rc_containment(A, args):
    (lam,) = args
    return rs.singular_chain_space(A).is_subspace_of(rs.root_space(A, lam))


def check_proper_spectrum_bound(obj, args):
    A = _as_relation(obj)
    size = proper_spectrum_size(A)
    return size <= A.space_dim, f"|sigma_pi| = {size} > {A.space_dim}"


def check_full_spectrum(A, args):
    (lams,) = args
    if len(set(lams)) != A.space_dim + 1 or INF in lams:
        return False, "precondition: need m+1 distinct finite scalars"
    rc_nonzero = not rs.singular_chain_space(A).is_zero()
    all_eig = all(is_eigenvalue(A, lam) for lam in lams) and is_eigenvalue(A, INF)
    if rc_nonzero and not all_eig:
        return False, "forward direction"
    if all_eig and not rc_nonzero:
        return False, "backward direction"
    return True


def check_spectrum_consistency(A, args):
    (others,) = args
    rep = proper_point_spectrum(A)
    listed = rep.eigenvalues()
    if rep.full_spectrum_flag != (rep.singular_chain_dim > 0):
        return False, "flag differs from R_c != 0"
    if rep.size > A.space_dim:
        return False, "more proper eigenvalues than the dimension"
    for lam in listed + list(others) + [INF]:
        if is_proper_eigenvalue(A, lam) != (lam in listed):
            return False, f"disagreement at {scalar_text(lam)}"
    return True


def check_independence_rank(A, args):
    lams, xs = args
    cert = independence_certificate(A, list(zip(lams, xs)))
    return cert.independent, f"rank {cert.rank} < {cert.count}"


def check_relation_algebra(A, args):
    (lam,) = args
    Ai = A.inverse()
    if A.ker != Ai.mul or A.dom != Ai.ran:
        return False, "ker/mul or dom/ran of the inverse"
    if A.shift(lam).shift(-lam) != A:
        return False, "shift round trip"
    return A.scale(lam).scale(ONE / lam) == A, "scale round trip"


def check_compose_assoc(A, args):
    bg, cg = args
    m = A.space_dim
    B, C = _rel(m, bg), _rel(m, cg)
    return A.compose(B).compose(C) == A.compose(B.compose(C))


def check_power_law(A, args):
    j, k = args
    return A.power(j + k) == A.power(j).compose(A.power(k))


def check_stabilization(A, args):
    (lam,) = args
    seq = rs.kernel_sequence(A, lam)
    if len(seq) > max(A.space_dim, 1):
        return False, f"{len(seq)} steps"
    for a, b in zip(seq, seq[1:]):
        if not a.is_subspace_of(b) or a.dim == b.dim:
            return False, "not strictly increasing"
    G = A.inverse() if lam is INF else A.shift(lam)
    nxt = _preimage_step(G, seq[-1])
    return nxt == seq[-1], "one more step changes the space"


def check_root_space_powers(A, args):
    (lam,) = args
    return rs.root_space(A, lam) == _power_root_space(A, lam, A.space_dim)


def check_jordan_chain(A, args):
    lam, x = args
    ch = rs.jordan_chain(A, lam, x)
    if ch is None:
        return False, "no chain for a root-space vector"
    if not ch.verify(A) or ch.endpoint != tuple(x):
        return False, "chain does not verify"
    n = len(ch)
    if n >= 2 and _power_root_space(A, lam, n - 1).contains(x):
        return False, "chain not minimal"
    if rs.singular_chain_space(A).is_zero():
        if ch.freedom:
            return False, "non-unique chain with R_c = 0"
        if not all(c.is_zero() for c in x) and ch.span().dim != n:
            return False, "chain entries dependent"
    return True


def check_singular_chain(A, args):
    rc = rs.singular_chain_space(A)
    ch = rs.extract_singular_chain(A)
    if ch is None:
        return rc.is_zero(), "no chain although R_c != 0"
    if rc.is_zero():
        return False, "chain although R_c = 0"
    if not ch.verify(A):
        return False, "chain does not verify"
    return ch.span().is_subspace_of(rc) and not ch.span().is_zero(), "chain span outside R_c"


def check_kcf_formulas(P, args):
    spec = _spec_from_args(args)
    P0, _ = kcf_generate(spec)
    if P0 != P:
        return False, "pencil does not match its spec"
    rep = verify_kcf_subspaces(P, spec)
    return rep.ok, "clauses " + ",".join(f[0] for f in rep.failures)


def check_kronecker_truth(P, args):
    spec = _spec_from_args(args)
    _, truth = kcf_generate(spec)
    return kronecker_structure(P) == truth


def check_kronecker_invariance(P, args):
    W, T = _matrix(args[0]), _matrix(args[1])
    if not W.is_invertible() or not T.is_invertible():
        return False, "precondition: singular transform"
    k1 = kronecker_structure(P)
    k2 = kronecker_structure(P.transform(W, T))
    return k1 == k2 and k1.check_sizes() and k2.check_sizes()


def check_kronecker_dims(P, args):
    ks = kronecker_structure(P)
    A = pencil_to_relation(P)
    c = ks.epsilon.total - ks.epsilon.length
    if rs.singular_chain_space(A).dim != c:
        return False, "dim R_c"
    return rs.root_space(A, INF).dim == ks.alpha.total + c, "dim R_inf"


def check_field_axioms(_, args):
    a, b, c = args
    ok = (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    ok = ok and a * (b + c) == a * b + a * c and a + b == b + a and a * b == b * a
    ok = ok and (a + (-a)).is_zero() and a * ONE == a and a + ZERO == a
    if not a.is_zero():
        ok = ok and a * a.inverse() == ONE and (b / a) * a == b
    return ok


def check_canonical_form(_, args):
    a, b = args
    if (a == b) != (a.parts == b.parts):
        return False, "equality disagrees with stored form"
    if (a == b) and hash(a) != hash(b):
        return False, "equal values hash differently"
    return parse(format_scalar(a)) == a, "format/parse round trip"


def check_canonicalize(_, args):
    n, vecs, perm = args
    U = canonicalize(n, vecs)
    if canonicalize(n, [vecs[i] for i in perm]) != U:
        return False, "order dependence"
    V = canonicalize(n, U.basis)
    return V.basis == U.basis and V.pivots == U.pivots, "not idempotent"


def check_modular_law(_, args):
    n, us, vs = args
    U, V = canonicalize(n, us), canonicalize(n, vs)
    return (U + V).dim + (U & V).dim == U.dim + V.dim


def check_subspace_equality(_, args):
    n, us, vs = args
    U, V = canonicalize(n, us), canonicalize(n, vs)
    mutual = U.is_subspace_of(V) and V.is_subspace_of(U)
    identical = U.basis == V.basis
    return (U == V) == mutual == identical


CHECKS = {
    "root_intersection": check_root_intersection,
    "disjoint_sums": check_disjoint_sums,
    "forced_sum": check_forced_sum,
    "shift_transform": check_shift_transform,
    "extend_transform": check_extend_transform,
    "vandermonde_det": check_vandermonde_det,
    "shift_invariance": check_shift_invariance,
    "infinity_invariance": check_infinity_invariance,
    "inverse_root_space": check_inverse_root_space,
    "resolvent_identity": check_resolvent_identity,
    "rc_shift_invariance": check_rc_shift_invariance,
    "rc_with_infinity": check_rc_with_infinity,
    "rc_containment": check_rc_containment,
    "proper_spectrum_bound": check_proper_spectrum_bound,
    "full_spectrum": check_full_spectrum,
    "spectrum_consistency": check_spectrum_consistency,
    "independence_rank": check_independence_rank,
    "relation_algebra": check_relation_algebra,
    "compose_assoc": check_compose_assoc,
    "power_law": check_power_law,
    "stabilization": check_stabilization,
    "root_space_powers": check_root_space_powers,
    "jordan_chain": check_jordan_chain,
    "singular_chain": check_singular_chain,
    "kcf_formulas": check_kcf_formulas,
    "kronecker_truth": check_kronecker_truth,
    "kronecker_invariance": check_kronecker_invariance,
    "kronecker_dims": check_kronecker_dims,
    "field_axioms": check_field_axioms,
    "canonical_form": check_canonical_form,
    "canonicalize": check_canonicalize,
    "modular_law": check_modular_law,
    "subspace_equality": check_subspace_equality,
}


# ---------------------------------------------------------------------------
# argument encoding and replay
# ---------------------------------------------------------------------------

def _encode(v):
    if v is INF or isinstance(v, GaussianRational):
        return scalar_text(v)
    if isinstance(v, bool):
        raise TypeError("booleans are not check arguments")
    if isinstance(v, int):
        return v
    if isinstance(v, Matrix):
        return [_encode(r) for r in v.rows]
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    raise TypeError(f"cannot encode {type(v).__name__}")


def _decode(v):
    if isinstance(v, str):
        return parse_point(v)
    if isinstance(v, int):
        return v
    if isinstance(v, list):
        return tuple(_decode(x) for x in v)
    raise TypeError(f"cannot decode {type(v).__name__}")


def run_check(name, obj, args):
    """Evaluate a named check; returns ``(ok, detail)``.  Exceptions count as failures."""
    try:
        result = CHECKS[name](obj, args)
    except Exception as exc:  # a crash inside a check is a failed check
        return False, f"{type(exc).__name__}: {exc}"
    if isinstance(result, tuple):
        ok, detail = result
        return bool(ok), "" if ok else detail
    return bool(result), ""


def counterexample(name, obj, args, detail="", **extra):
    extra = dict(extra, check=name, scalars=_encode(list(args)), detail=detail)
    if isinstance(obj, LinearRelation):
        return relation_document(obj, **extra)
    if isinstance(obj, MatrixPencil):
        return pencil_document(obj, **extra)
    return extra


def replay(document):
    """Re-run the check named in a counterexample document; returns ``(ok, detail)``."""
    name = document["check"]
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}")
    obj = from_document(document) if ("relation" in document or "pencil" in document) else None
    args = list(_decode(list(document.get("scalars", []))))
    return run_check(name, obj, args)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

class _Recorder:
    def __init__(self, suite, trial):
        self.suite = suite
        self.trial = trial
        self.counts = Counter()
        self.notes = Counter()
        self.failures = []

    def check(self, name, obj, args):
        ok, detail = run_check(name, obj, args)
        self.counts[name] += 1
        if not ok:
            self.failures.append(counterexample(name, obj, args, detail, suite=self.suite, trial=self.trial))
        return ok

    def note(self, name):
        self.notes[name] += 1


def _point(S, inst, p_inf=0.2, finite=False):
    if not finite and S.rng.random() < p_inf:
        return INF
    if inst.hints and S.rng.random() < 0.5:
        return S.rng.choice(inst.hints)
    return S.scalar()


def _points(S, inst, k, finite=False, exclude=()):
    out = list(exclude)
    start = len(out)
    for _ in range(200 * k):
        if len(out) - start == k:
            break
        p = _point(S, inst, finite=finite)
        if p not in out:
            out.append(p)
    if len(out) - start < k:
        raise RuntimeError("could not draw distinct points")
    return out[start:]


def _nonzero_point(S, inst):
    while True:
        p = _point(S, inst, finite=True)
        if not p.is_zero():
            return p


def trial_root_intersection(S, cfg, rec):
    inst = random_relation(S, cfg.max_dim)
    A = inst.relation
    for _ in range(3):
        lam, mu = _points(S, inst, 2)
        rec.check("root_intersection", A, [lam, mu])
    if not rs.singular_chain_space(A).is_zero():
        rec.note("R_c nonzero")
    rec.check("proper_spectrum_bound", A, [])


def trial_disjoint_sums(S, cfg, rec):
    inst = random_relation(S, cfg.max_dim)
    a, b = S.rng.randint(1, 3), S.rng.randint(1, 3)
    pts = _points(S, inst, a + b)
    rec.check("disjoint_sums", inst.relation, [pts[:a], pts[a:]])
    rec.check("proper_spectrum_bound", inst.relation, [])


def trial_forced_sum(S, cfg, rec):
    # nonzero samples need R_c != 0, so most relations get a column singular block
    require = [("epsilon", S.rng.randint(2, 3))] if S.rng.random() < 0.6 else ()
    inst = random_relation(S, cfg.max_dim, require=require)
    A = inst.relation
    m = A.space_dim
    lams = _points(S, inst, S.rng.randint(1, 3), finite=True)
    mu = _points(S, inst, 1, exclude=lams)[0]
    zero_sum = S.rng.random() < 1 / 3
    bases = [rs.root_space(A, lam).basis for lam in lams]
    flat = [b for basis in bases for b in basis]
    if zero_sum:
        eqs = [tuple(ONE if i == j else ZERO for j in range(m)) for i in range(m)]
        rec.note("sum zero")
    else:
        eqs = rs.root_space(A, mu).equations()
    rows = [tuple(sum((e[k] * b[k] for k in range(m)), ZERO) for b in flat) for e in eqs]
    coeffs = S.combination(nullspace(rows, len(flat)), len(flat)) if flat else ()
    xs, pos = [], 0
    for basis in bases:
        x = [ZERO] * m
        for b in basis:
            c = coeffs[pos]
            pos += 1
            for k in range(m):
                x[k] = x[k] + c * b[k]
        xs.append(tuple(x))
    if any(any(not c.is_zero() for c in x) for x in xs):
        rec.note("nonzero sample")
    rec.check("forced_sum", A, [lams, mu, xs])
    rec.check("proper_spectrum_bound", A, [])


def trial_shift_transform(S, cfg, rec):
    if cfg.max_dim < 2:
        rec.note("skipped: max_dim < 2")
        return
    for _ in range(20):
        k = S.rng.randint(2, min(3, cfg.max_dim))
        inst = random_relation(S, cfg.max_dim, require=[("alpha", k)])
        A = inst.relation
        lam = _point(S, inst, finite=True)
        B = A.shift(lam)
        x = S.combination(rs.root_space(B, INF).basis, A.space_dim)
        ch = rs.jordan_chain(B, INF, x)
        if len(ch) >= 2:
            rec.check("shift_transform", A, [lam, list(ch.vectors)])
            rec.check("proper_spectrum_bound", A, [])
            return
    rec.note("skipped: no chain of length 2")


def trial_extend_transform(S, cfg, rec):
    k = S.rng.randint(1, min(3, cfg.max_dim))
    inst = random_relation(S, cfg.max_dim, require=[("jordan", k)])
    A = inst.relation
    lam = S.rng.choice(inst.hints) if S.rng.random() < 0.8 else S.scalar()
    x = S.combination(rs.root_space(A, lam).basis, A.space_dim)
    ch = rs.jordan_chain(A, lam, x)
    rec.check("extend_transform", A, [lam, list(reversed(ch.vectors)), 2 * A.space_dim])
    rec.check("proper_spectrum_bound", A, [])


def trial_vandermonde(S, cfg, rec):
    ell = S.rng.randint(1, 4)
    sizes = []
    for r in range(ell):
        room = 6 - sum(sizes) - (ell - r - 1)
        sizes.append(S.rng.randint(1, min(room, 4)))
    lams = S.distinct(ell)
    rec.check("vandermonde_det", None, [[[lam, k - 1] for lam, k in zip(lams, sizes)]])


def trial_identities(S, cfg, rec):
    inst = random_relation(S, cfg.max_dim)
    A = inst.relation
    lam = _nonzero_point(S, inst)
    mu = _point(S, inst, finite=True)
    rec.check("shift_invariance", A, [_point(S, inst, finite=True), mu])
    rec.check("infinity_invariance", A, [lam])
    rec.check("inverse_root_space", A, [lam])
    rec.check("resolvent_identity", A, [lam])
    rec.check("rc_shift_invariance", A, [mu])
    rec.check("rc_with_infinity", A, [_point(S, inst, finite=True)])
    rec.check("rc_containment", A, [_point(S, inst, p_inf=0.3)])
    rec.check("proper_spectrum_bound", A, [])


def trial_kcf_formulas(S, cfg, rec):
    spec = random_kcf_spec(S, 8)
    P, _ = kcf_generate(spec)
    rec.check("kcf_formulas", P, _spec_args(spec))
    rec.check("proper_spectrum_bound", P, [])


def trial_kronecker(S, cfg, rec):
    spec = random_kcf_spec(S, 8)
    P, _ = kcf_generate(spec)
    m, d = P.shape
    rec.check("kronecker_invariance", P, [S.invertible(m), S.invertible(d)])
    rec.check("kronecker_truth", P, _spec_args(spec))
    rec.check("kronecker_dims", P, [])
    rec.check("proper_spectrum_bound", P, [])
    Q = random_pencil(S, cfg.max_dim)
    m, d = Q.shape
    rec.check("kronecker_invariance", Q, [S.invertible(m), S.invertible(d)])
    rec.check("kronecker_dims", Q, [])
    rec.check("proper_spectrum_bound", Q, [])


def _selection(S, A, rep):
    eigs = rep.eigenvalues()
    k = S.rng.randint(1, len(eigs))
    lams = S.rng.sample(eigs, k)
    rc = rs.singular_chain_space(A)
    xs = []
    for lam in lams:
        basis = rs.root_space(A, lam).basis
        x = S.combination(basis, A.space_dim)
        if rc.contains(x):
            extra = next(b for b in basis if not rc.contains(b))
            x = tuple(a + b for a, b in zip(x, extra))
        xs.append(x)
    return lams, xs


def trial_spectrum(S, cfg, rec):
    for attempt in range(10):
        inst = random_relation(S, cfg.max_dim, structured=True if attempt else None)
        A = inst.relation
        m = A.space_dim
        rep = proper_point_spectrum(A)
        if attempt == 0:
            rec.check("full_spectrum", A, [_points(S, inst, m + 1, finite=True)])
            others = [S.scalar() for _ in range(16)]
            rec.check("spectrum_consistency", A, [others])
            rec.check("proper_spectrum_bound", A, [])
        if rep.proper_eigenvalues:
            rec.check("independence_rank", A, list(_selection(S, A, rep)))
            return
    rec.note("skipped: no proper eigenvalue")


def trial_relation(S, cfg, rec):
    inst = random_relation(S, cfg.max_dim)
    A = inst.relation
    m = A.space_dim
    rec.check("relation_algebra", A, [_nonzero_point(S, inst)])
    others = [random_relation(S, m, structured=False).relation for _ in range(2)]
    others = [o if o.space_dim == m else LinearRelation.identity(m) for o in others]
    rec.check("compose_assoc", A, [[x + y for x, y in o.pairs()] for o in others])
    j = S.rng.randint(0, m + 1)
    rec.check("power_law", A, [j, S.rng.randint(0, 2 * m + 2 - j)])
    lam = _point(S, inst)
    rec.check("stabilization", A, [lam])
    rec.check("root_space_powers", A, [lam])
    x = S.combination(rs.root_space(A, lam).basis, m)
    rec.check("jordan_chain", A, [lam, x])
    rec.check("singular_chain", A, [])
    rec.check("proper_spectrum_bound", A, [])


def _wide_scalar(rng):
    return GaussianRational(Fraction(rng.randint(-50, 50), rng.randint(1, 12)),
                            Fraction(rng.randint(-50, 50), rng.randint(1, 12)) if rng.random() < 0.6 else 0)


def trial_exact(S, cfg, rec):
    rng = S.rng
    a, b, c = (_wide_scalar(rng) for _ in range(3))
    rec.check("field_axioms", None, [a, b, c])
    rec.check("canonical_form", None, [a, (a * c) / c if not c.is_zero() else a])
    rec.check("canonical_form", None, [a, b])


def trial_subspace(S, cfg, rec):
    rng = S.rng
    n = rng.randint(1, 2 * cfg.max_dim)
    zp = rng.choice((0.3, 0.6))
    us = [S.vector(n, zp) for _ in range(rng.randint(0, n + 1))]
    vs = [S.vector(n, zp) for _ in range(rng.randint(0, n + 1))]
    perm = list(range(len(us)))
    rng.shuffle(perm)
    rec.check("canonicalize", None, [n, us, perm])
    rec.check("modular_law", None, [n, us, vs])
    # a second spanning set of span(us), to exercise the equal case
    mixed = [tuple(a + S.nonzero() * b for a, b in zip(u, w)) for u, w in zip(us, us[1:])] + us[:1]
    rec.check("subspace_equality", None, [n, us, vs])
    rec.check("subspace_equality", None, [n, us, mixed])


SUITES = {
    "exact": trial_exact,
    "subspace": trial_subspace,
    "relation": trial_relation,
    "root_intersection": trial_root_intersection,
    "disjoint_sums": trial_disjoint_sums,
    "forced_sum": trial_forced_sum,
    "shift_transform": trial_shift_transform,
    "extend_transform": trial_extend_transform,
    "vandermonde": trial_vandermonde,
    "identities": trial_identities,
    "kcf_formulas": trial_kcf_formulas,
    "kronecker": trial_kronecker,
    "spectrum": trial_spectrum,
}


@dataclass
class SuiteResult:
    name: str
    trials: int
    counts: Counter
    notes: Counter
    failures: list
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {"suite": self.name, "trials": self.trials, "ok": self.ok,
                "checks": dict(sorted(self.counts.items())), "notes": dict(sorted(self.notes.items())),
                "failures": self.failures}


def _run_trial(name, cfg, i):
    rng = random.Random(f"{cfg.seed}:{name}:{i}")
    rec = _Recorder(name, i)
    try:
        SUITES[name](Sampler(rng, cfg.scalar_pool), cfg, rec)
    except Exception:
        rec.counts["harness"] += 1
        rec.failures.append({"check": "harness", "suite": name, "trial": i, "detail": traceback.format_exc()})
    return rec.counts, rec.notes, rec.failures


def _run_chunk(name, cfg, indices):
    return [_run_trial(name, cfg, i) for i in indices]


def run_suite(name, config: HarnessConfig) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    start = time.perf_counter()
    indices = list(range(config.trials))
    if config.workers > 1 and config.trials > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [indices[k::config.workers] for k in range(config.workers)]
        with ProcessPoolExecutor(config.workers) as pool:
            parts = list(pool.map(_run_chunk, [name] * len(chunks), [config] * len(chunks), chunks))
        by_index = {}
        for chunk, res in zip(chunks, parts):
            by_index.update(zip(chunk, res))
        results = [by_index[i] for i in indices]
    else:
        results = _run_chunk(name, config, indices)
    counts, notes, failures = Counter(), Counter(), []
    for c, n, f in results:
        counts.update(c)
        notes.update(n)
        failures.extend(f)
    return SuiteResult(name, config.trials, counts, notes, failures, time.perf_counter() - start)


def run_all(config: HarnessConfig, suites=None):
    return [run_suite(name, config) for name in (suites or SUITES)]


def transcript(results, timing=False):
    """Human-readable report; without ``timing`` it depends only on the configuration."""
    lines = []
    for r in results:
        head = f"suite {r.name}: {r.trials} trials, {'PASS' if r.ok else 'FAIL'}"
        if timing:
            head += f" ({r.seconds:.2f} s)"
        lines.append(head)
        for name, n in sorted(r.counts.items()):
            bad = sum(1 for f in r.failures if f["check"] == name)
            lines.append(f"  {name}: {n} checks, {bad} failed")
        for name, n in sorted(r.notes.items()):
            lines.append(f"  [{name}: {n}]")
    return "\n".join(lines)
