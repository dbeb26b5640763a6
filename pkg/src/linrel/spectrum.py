"""Point spectrum and proper point spectrum of a relation in C^m."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import ONE, ZERO, gq
from .pencil import kronecker_structure, relation_to_pencil
from .poly import distinct_root_count, gaussian_roots
from .relation import LinearRelation
from .rootspace import INF, as_extended, root_space, singular_chain_space
from .subspace import canonicalize

__all__ = [
    "PreconditionError",
    "SpectrumReport",
    "IndependenceCertificate",
    "is_eigenvalue",
    "is_proper_eigenvalue",
    "proper_point_spectrum",
    "proper_spectrum_size",
    "independence_certificate",
]


class PreconditionError(ValueError):
    def __init__(self, message, index):
        super().__init__(f"pair {index}: {message}")
        self.index = index


def is_eigenvalue(A: LinearRelation, lam) -> bool:
    lam = as_extended(lam)
    if lam is INF:
        return not A.mul.is_zero()
    return not A.shift(lam).ker.is_zero()


def is_proper_eigenvalue(A: LinearRelation, lam) -> bool:
    # R_c is contained in every root space, so a dimension count decides
    return root_space(A, lam).dim > singular_chain_space(A).dim


@dataclass
class SpectrumReport:
    """Proper point spectrum of a relation.

    ``proper_eigenvalues`` lists ``(lam, dim R_lam(A))`` for the proper
    eigenvalues in Q(i) u {inf}.  ``residual_polynomial`` (ascending
    coefficients, monic) collects the factors of the regular characteristic
    polynomial with no root in Q(i); their roots are proper eigenvalues too.
    """

    space_dim: int
    singular_chain_dim: int
    proper_eigenvalues: list
    full_spectrum_flag: bool
    residual_polynomial: list
    characteristic_polynomial: list = field(default_factory=list)
    residual_root_count: int = 0

    @property
    def residual_is_one(self):
        return self.residual_polynomial == [ONE]

    @property
    def size(self):
        """``|sigma_pi(A)|`` counting residual roots as well."""
        return len(self.proper_eigenvalues) + self.residual_root_count

    def eigenvalues(self):
        return [lam for lam, _ in self.proper_eigenvalues]

    def proper_dimension(self, lam):
        """``dim R_lam(A) - dim R_c(A)`` for a listed eigenvalue."""
        lam = as_extended(lam)
        for mu, d in self.proper_eigenvalues:
            if mu == lam:
                return d - self.singular_chain_dim
        return 0


def proper_point_spectrum(A: LinearRelation) -> SpectrumReport:
    P = relation_to_pencil(A)
    ks = kronecker_structure(P)
    cp = ks.regular_charpoly()
    roots, residual = gaussian_roots(cp)
    rc = singular_chain_space(A)
    eigs = []
    for lam, _ in roots:
        eigs.append((lam, root_space(A, lam).dim))
    if ks.alpha.total:
        eigs.append((INF, root_space(A, INF).dim))
    for lam, d in eigs:
        if d <= rc.dim:
            raise ArithmeticError(f"{lam} was extracted but is not a proper eigenvalue")
    return SpectrumReport(
        space_dim=A.space_dim,
        singular_chain_dim=rc.dim,
        proper_eigenvalues=eigs,
        full_spectrum_flag=not rc.is_zero(),
        residual_polynomial=residual,
        characteristic_polynomial=cp,
        residual_root_count=distinct_root_count(residual),
    )


def proper_spectrum_size(A: LinearRelation) -> int:
    """``|sigma_pi(A)|`` over C without factoring: distinct roots of the regular part, plus infinity."""
    ks = kronecker_structure(relation_to_pencil(A))
    return distinct_root_count(ks.regular_charpoly()) + (1 if ks.alpha.total else 0)


@dataclass
class IndependenceCertificate:
    count: int
    rank: int

    @property
    def independent(self):
        return self.rank == self.count


def independence_certificate(A: LinearRelation, pairs) -> IndependenceCertificate:
    """Rank of ``x_1..x_k`` where ``x_i`` is in ``R_{lam_i}(A)`` but not in ``R_c(A)``."""
    rc = singular_chain_space(A)
    seen = []
    vectors = []
    for idx, (lam, x) in enumerate(pairs):
        lam = as_extended(lam)
        if any(lam is mu or (lam is not INF and mu is not INF and lam == mu) for mu in seen):
            raise PreconditionError("eigenvalue repeated", idx)
        seen.append(lam)
        x = tuple(gq(c) for c in x)
        if not root_space(A, lam).contains(x):
            raise PreconditionError(f"vector not in the root space at {lam}", idx)
        if rc.contains(x):
            raise PreconditionError("vector lies in the singular chain space", idx)
        vectors.append(x)
    rank = canonicalize(A.space_dim, vectors).dim
    return IndependenceCertificate(len(vectors), rank)
