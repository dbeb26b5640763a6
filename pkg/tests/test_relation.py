import random

import pytest

from linrel import DimensionError, LinearRelation, Matrix, Subspace, gq
from linrel.harness import DEFAULT_POOL, Sampler, random_relation


def V(*xs):
    return tuple(gq(x) for x in xs)


def relations(count, seed=0, max_dim=4):
    S = Sampler(random.Random(seed), DEFAULT_POOL)
    return [random_relation(S, max_dim).relation for _ in range(count)]


def test_from_matrix_and_operator():
    A = LinearRelation.from_matrix(Matrix([V(1, 2), V(0, 1)]))
    assert A.is_operator() and A.dim == 2
    assert A.contains(V(1, 0), V(1, 0)) and A.contains(V(0, 1), V(2, 1))
    assert (V(0, 1), V(2, 1)) in A


def test_pure_multivalued():
    A = LinearRelation.from_generators(2, [(V(0, 0), V(1, 0)), (V(0, 0), V(0, 1))])
    assert A.dom.is_zero() and A.mul == Subspace.full(2)
    assert not A.is_operator()


def test_dimension_errors():
    with pytest.raises(DimensionError):
        LinearRelation.from_generators(2, [(V(1), V(1, 0))])
    with pytest.raises(DimensionError):
        LinearRelation.identity(2).compose(LinearRelation.identity(3))
    with pytest.raises(DimensionError):
        LinearRelation.from_matrix(Matrix([V(1, 2)]))


def test_inverse_shift_scale():
    A = LinearRelation.from_matrix(Matrix([V(2, 0), V(0, 3)]))
    assert A.inverse() == LinearRelation.from_matrix(Matrix([V("1/2", 0), V(0, "1/3")]))
    assert A.shift(2).ker == Subspace.coordinate(2, [0])
    assert A.scale(0) == LinearRelation.from_matrix(Matrix.zeros(2, 2))
    assert -A == A.scale(-1)


def test_compose_matrices():
    M = Matrix([V(1, 2), V(0, 1)])
    N = Matrix([V(0, 1), V(1, 0)])
    A, B = LinearRelation.from_matrix(M), LinearRelation.from_matrix(N)
    assert A.compose(B) == LinearRelation.from_matrix(M @ N)
    assert A * B == A.compose(B)


def test_power_cap():
    A = LinearRelation.identity(2)
    assert A.power(0) == A and A.power(6) == A
    with pytest.raises(ValueError):
        A.power(7)
    with pytest.raises(ValueError):
        A.power(-1)


def test_power_of_nilpotent():
    N = LinearRelation.from_matrix(Matrix([V(0, 1, 0), V(0, 0, 1), V(0, 0, 0)]))
    assert N.power(2).ker.dim == 2
    assert N.power(3) == LinearRelation.from_matrix(Matrix.zeros(3, 3))


@pytest.mark.parametrize("A", relations(25, seed=1))
def test_inverse_parts(A):
    Ai = A.inverse()
    assert A.ker == Ai.mul and A.dom == Ai.ran and A.mul == Ai.ker
    assert Ai.inverse() == A


@pytest.mark.parametrize("A", relations(25, seed=2))
def test_shift_scale_round_trip(A):
    lam = gq("-2/3+1i")
    assert A.shift(lam).shift(-lam) == A
    assert A.scale(lam).scale(1 / lam) == A


@pytest.mark.parametrize("A", relations(15, seed=3))
def test_compose_associative_and_power_law(A):
    m = A.space_dim
    B = LinearRelation.from_generators(m, [(tuple(reversed(x)), y) for x, y in A.pairs()])
    assert A.compose(B).compose(A) == A.compose(B.compose(A))
    assert A.power(3) == A.power(1).compose(A.power(2))


def test_compose_definition():
    A = LinearRelation.from_generators(2, [(V(1, 0), V(0, 1)), (V(0, 0), V(1, 1))])
    B = LinearRelation.from_generators(2, [(V(0, 1), V(1, 0))])
    C = A.compose(B)
    # (e2, e1) in B and (e1, e2) in A, plus the multivalued part of A
    assert C.contains(V(0, 1), V(0, 1)) and C.mul == A.mul
