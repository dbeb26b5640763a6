import random

import pytest

from linrel import (
    DimensionError,
    INF,
    KcfSpec,
    LinearRelation,
    Matrix,
    MatrixPencil,
    MultiIndex,
    gq,
    kcf_generate,
    kronecker_structure,
    pencil_to_relation,
    relation_to_pencil,
    root_space,
    singular_chain_space,
    verify_kcf_subspaces,
)
from linrel.harness import DEFAULT_POOL, Sampler, random_kcf_spec
from linrel.pencil import kcf_blocks, wong_sequences


def V(*xs):
    return tuple(gq(x) for x in xs)


def test_multi_index():
    a = MultiIndex([3, 1, 2])
    assert tuple(a) == (1, 2, 3) and a.total == 6 and a.length == 3
    with pytest.raises(ValueError):
        MultiIndex([0])


def test_shape_check():
    with pytest.raises(DimensionError):
        MatrixPencil(Matrix.zeros(1, 2), Matrix.zeros(2, 1))


def test_identity_pencil_is_regular():
    ks = kronecker_structure(MatrixPencil(Matrix.identity(3), Matrix.identity(3)))
    assert ks.n0 == 3 and not ks.alpha and not ks.epsilon and not ks.eta
    assert ks.regular_charpoly() == [gq(-1), gq(3), gq(-3), gq(1)]


def test_pencil_relation_round_trip():
    A = LinearRelation.from_generators(2, [(V(1, 0), V(0, 1)), (V(0, 0), V(1, 1))])
    assert pencil_to_relation(relation_to_pencil(A)) == A


def test_pure_multivalued_pencil():
    A = pencil_to_relation(MatrixPencil(Matrix.zeros(2, 2), Matrix.identity(2)))
    assert A.dom.is_zero() and A.mul.is_full()


def test_kcf_jordan_example():
    P, truth = kcf_generate(KcfSpec([(3, 1)], [], [], []))
    assert P.E == Matrix([V(1)]) and P.F == Matrix([V(3)])
    assert kronecker_structure(P) == truth


def test_singular_transform_rejected():
    spec = KcfSpec([(1, 1)], [], [], [], W=Matrix([V(0)]))
    with pytest.raises(ZeroDivisionError):
        kcf_generate(spec)


def test_spec_shape_and_blocks():
    spec = KcfSpec([(1, 2)], [1, 2], [1, 3], [2])
    assert spec.shape == (2 + 3 + 2 + 2, 2 + 3 + 4 + 1)
    E0, F0 = kcf_blocks(spec)
    assert E0.shape == spec.shape == F0.shape


def test_eta_one_and_eps_one():
    # eta = (1) is a zero row, eps = (1) a zero column
    P, truth = kcf_generate(KcfSpec([], [], [1], [1]))
    assert P.shape == (1, 1)
    ks = kronecker_structure(P)
    assert ks == truth and list(ks.epsilon) == [1] and list(ks.eta) == [1]


def test_wong_limits():
    P, _ = kcf_generate(KcfSpec([(2, 1)], [2], [], []))
    V_, W_ = wong_sequences(P)
    assert V_[-1].dim == 1 and W_[-1].dim == 2


@pytest.mark.parametrize("seed", range(12))
def test_random_specs_recovered(seed):
    S = Sampler(random.Random(seed), DEFAULT_POOL)
    spec = random_kcf_spec(S, 7)
    P, truth = kcf_generate(spec)
    ks = kronecker_structure(P)
    assert ks == truth and ks.check_sizes()
    assert ks.regular_matrix().shape == (ks.n0, ks.n0)
    rep = verify_kcf_subspaces(P, spec)
    assert rep.ok, rep.failures


def test_verify_reports_wrong_ground_truth():
    spec = KcfSpec([(1, 1)], [], [2], [])
    P, _ = kcf_generate(spec)
    wrong = KcfSpec([(1, 1)], [], [2], [], W=Matrix([V(0, 1), V(1, 0)]))
    rep = verify_kcf_subspaces(P, wrong)
    assert not rep.ok and {f[0] for f in rep.failures} & {"i", "iii"}


def test_dimension_corollaries_on_arbitrary_pencil():
    E = Matrix([V(1, 0, 2), V(0, 0, 0)])
    F = Matrix([V(0, 1, 0), V(1, 0, 1)])
    P = MatrixPencil(E, F)
    ks = kronecker_structure(P)
    A = pencil_to_relation(P)
    c = ks.epsilon.total - ks.epsilon.length
    assert singular_chain_space(A).dim == c
    assert root_space(A, INF).dim == ks.alpha.total + c
