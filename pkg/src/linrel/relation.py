"""Linear relations in C^m, i.e. subspaces of C^m x C^m.

The graph of a relation is a :class:`Subspace` of C^{2m}; coordinates
``0..m-1`` hold the x-part of a pair and ``m..2m-1`` the y-part.
"""
from __future__ import annotations

from .exact import ONE, ZERO, gq
from .subspace import DimensionError, Matrix, Subspace, _lower_block, _vec, canonicalize

__all__ = ["LinearRelation", "from_generators", "from_matrix", "identity"]


class LinearRelation:
    __slots__ = ("space_dim", "graph", "_cache")

    def __init__(self, space_dim: int, graph: Subspace):
        if graph.ambient_dim != 2 * space_dim:
            raise DimensionError(f"graph in C^{graph.ambient_dim} for a relation in C^{space_dim}")
        self.space_dim = space_dim
        self.graph = graph
        # memo for derived subspaces (root spaces etc.); values never change
        self._cache = {}

    # -- construction ----------------------------------------------------
    @classmethod
    def from_generators(cls, m, pairs):
        rows = []
        for x, y in pairs:
            x, y = _vec(x), _vec(y)
            if len(x) != m or len(y) != m:
                raise DimensionError(f"pair of lengths ({len(x)}, {len(y)}) for a relation in C^{m}")
            rows.append(x + y)
        return cls(m, canonicalize(2 * m, rows))

    @classmethod
    def from_matrix(cls, M: Matrix):
        """Graph ``{(x, Mx)}`` of a square matrix."""
        if M.nrows != M.ncols:
            raise DimensionError("graph of a non-square matrix")
        m = M.nrows
        cols = M.columns()
        rows = [tuple(ONE if i == j else ZERO for i in range(m)) + cols[j] for j in range(m)]
        return cls(m, canonicalize(2 * m, rows))

    @classmethod
    def identity(cls, m):
        return cls.from_matrix(Matrix.identity(m))

    @classmethod
    def full(cls, m):
        return cls(m, Subspace.full(2 * m))

    @classmethod
    def zero(cls, m):
        return cls(m, Subspace.zero(2 * m))

    # -- basic data ------------------------------------------------------
    @property
    def dim(self):
        return self.graph.dim

    def pairs(self):
        """Basis of the graph as ``(x, y)`` pairs."""
        m = self.space_dim
        return [(r[:m], r[m:]) for r in self.graph.basis]

    def contains(self, x, y):
        return self.graph.contains(_vec(x) + _vec(y))

    def __contains__(self, pair):
        x, y = pair
        return self.contains(x, y)

    def __eq__(self, other):
        if not isinstance(other, LinearRelation):
            return NotImplemented
        return self.space_dim == other.space_dim and self.graph == other.graph

    def __hash__(self):
        return hash((self.space_dim, self.graph))

    def __repr__(self):
        return f"LinearRelation(m={self.space_dim}, dim={self.dim})"

    def _check(self, other):
        if self.space_dim != other.space_dim:
            raise DimensionError(f"relations in C^{self.space_dim} and C^{other.space_dim}")

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    # -- parts -----------------------------------------------------------
    @property
    def dom(self) -> Subspace:
        return self._memo("dom", lambda: self.graph.project(range(self.space_dim)))

    @property
    def ran(self) -> Subspace:
        m = self.space_dim
        return self._memo("ran", lambda: self.graph.project(range(m, 2 * m)))

    @property
    def ker(self) -> Subspace:
        def compute():
            m = self.space_dim
            return _lower_block([r[m:] + r[:m] for r in self.graph.basis], m, m)
        return self._memo("ker", compute)

    @property
    def mul(self) -> Subspace:
        m = self.space_dim
        return self._memo("mul", lambda: _lower_block(self.graph.basis, m, m))

    def parts(self):
        return {"dom": self.dom, "ran": self.ran, "ker": self.ker, "mul": self.mul}

    def is_operator(self):
        return self.mul.is_zero()

    # -- algebra ---------------------------------------------------------
    def inverse(self):
        m = self.space_dim
        return LinearRelation(m, canonicalize(2 * m, [r[m:] + r[:m] for r in self.graph.basis]))

    def shift(self, lam):
        """``A - lam = {(x, y - lam x)}``."""
        lam = gq(lam)
        if lam.is_zero():
            return self
        m = self.space_dim
        rows = [r[:m] + tuple(y - lam * x for x, y in zip(r[:m], r[m:])) for r in self.graph.basis]
        return LinearRelation(m, canonicalize(2 * m, rows))

    def scale(self, lam):
        """``lam A = {(x, lam y)}``; ``lam = 0`` gives ``{(x, 0) : x in dom A}``."""
        lam = gq(lam)
        m = self.space_dim
        rows = [r[:m] + tuple(lam * y for y in r[m:]) for r in self.graph.basis]
        return LinearRelation(m, canonicalize(2 * m, rows))

    def compose(self, other):
        """Product ``self * other = {(x, y) : (x, z) in other, (z, y) in self}``.

        Both relations are lifted to triples ``(z, x, y)`` (``other`` free in
        ``y``, ``self`` free in ``x``); eliminating the ``z`` block leaves the
        pairs ``(x, y)``.
        """
        self._check(other)
        m = self.space_dim
        zero = (ZERO,) * m
        rows = [z + x + zero for x, z in other.pairs()]
        rows += [tuple(-c for c in z) + zero + y for z, y in self.pairs()]
        return LinearRelation(m, _lower_block(rows, m, 2 * m))

    __mul__ = compose

    def power(self, k: int):
        if k < 0:
            raise ValueError("negative power of a relation")
        cap = 2 * self.space_dim + 2
        if k > cap:
            raise ValueError(f"power {k} exceeds the cap {cap} for a relation in C^{self.space_dim}")
        result = LinearRelation.identity(self.space_dim)
        for _ in range(k):
            result = self.compose(result)
        return result

    def __neg__(self):
        return self.scale(-ONE)


def from_generators(m, pairs):
    return LinearRelation.from_generators(m, pairs)


def from_matrix(M):
    return LinearRelation.from_matrix(M)


def identity(m):
    return LinearRelation.identity(m)
