"""Hand-derived instances as fixed regression tests.

Where a value is not a bare literal it is also recomputed by the sympy
reference in ``oracle.py``.
"""
import json

import pytest

import oracle
from linrel import (
    INF,
    KcfSpec,
    LinearRelation,
    Matrix,
    MatrixPencil,
    Subspace,
    canonicalize,
    compare,
    confluent_vandermonde,
    confluent_vandermonde_det,
    extract_singular_chain,
    gq,
    image,
    independence_certificate,
    is_eigenvalue,
    is_proper_eigenvalue,
    jordan_chain,
    jordan_extend_transform,
    kcf_generate,
    kronecker_structure,
    pencil_to_relation,
    preimage,
    proper_point_spectrum,
    root_space,
    shift_chain_transform,
    singular_chain_space,
    verify_kcf_subspaces,
)
from linrel.cli import main
from linrel.exact import arith
from linrel.harness import HarnessConfig, run_suite

V = lambda *xs: tuple(gq(x) for x in xs)  # noqa: E731
e1, e2 = V(1, 0), V(0, 1)
z2 = V(0, 0)


def mat(rows):
    return Matrix([V(*r) for r in rows])


def span(*vs):
    return canonicalize(len(vs[0]), vs)


@pytest.fixture
def swap():
    """span{(0, e1), (e1, 0)} in C^2."""
    return LinearRelation.from_generators(2, [(z2, e1), (e1, z2)])


@pytest.fixture
def nilpotent():
    return LinearRelation.from_matrix(mat([[0, 1], [0, 0]]))


@pytest.fixture
def full1():
    return LinearRelation.full(1)


def test_gaussian_division():
    q = arith(gq("1+1i"), gq("1-1i"), "div")
    assert q == gq("0+1i")
    assert q * gq("1-1i") == gq("1+1i")


def test_canonicalize_three_vectors():
    U = canonicalize(3, [V(1, 1, 0), V(0, 1, 1), V(1, 2, 1)])
    assert U.dim == 2
    assert U.basis == (V(1, 0, -1), V(0, 1, 1))
    assert oracle.span_dim([V(1, 1, 0), V(0, 1, 1), V(1, 2, 1)], 3) == 2


def test_intersection_example():
    U = span(V(1, 1, 0))
    W = span(V(1, 0, 0), V(0, 1, 0))
    assert U.intersect(W) == U
    assert oracle.same_span(oracle.intersection(U.basis, W.basis, 3), [V(1, 1, 0)], 3)


def test_image_preimage_example():
    M = mat([[0, 1], [0, 0]])
    U = span(e1)
    assert image(M, U).is_zero()
    assert preimage(M, U) == Subspace.full(2)


def test_compare_incomparable():
    assert compare(span(V(1, 1)), span(V(1, 0))) == "incomparable"


def test_from_generators_swap(swap):
    assert swap.dim == 2
    assert swap.ker == span(e1) and swap.mul == span(e1)


def test_parts_swap(swap):
    for U in swap.parts().values():
        assert U == span(e1)
    pairs = [(z2, e1), (e1, z2)]
    assert oracle.same_span(oracle.kernel(2, pairs), [e1], 2)
    assert oracle.same_span(oracle.multivalued(2, pairs), [e1], 2)


def test_parts_nilpotent(nilpotent):
    assert nilpotent.ker == span(e1)
    assert nilpotent.mul.is_zero()
    assert nilpotent.ran == span(e1)
    assert nilpotent.dom == Subspace.full(2)


def test_kernel_of_shift_and_inverse_shift():
    A = LinearRelation.from_matrix(mat([[2]]))
    lam = gq(2)
    assert A.shift(lam).ker == Subspace.full(1)
    assert A.inverse().shift(1 / lam).ker == Subspace.full(1)


def test_compose_full(full1):
    assert full1.compose(full1) == full1


def test_root_space_nilpotent(nilpotent):
    assert root_space(nilpotent, 0) == Subspace.full(2)
    pairs = nilpotent.pairs()
    assert oracle.same_span(oracle.iterate_root(2, pairs, 0, 2)[-1], [e1, e2], 2)


def test_root_spaces_swap(swap):
    assert root_space(swap, 0) == span(e1)
    assert root_space(swap, INF) == span(e1)
    pairs = [(z2, e1), (e1, z2)]
    assert oracle.same_span(oracle.iterate_root(2, pairs, 0, 3)[-1], [e1], 2)
    assert oracle.same_span(oracle.iterate_root(2, pairs, None, 3)[-1], [e1], 2)


def test_singular_chain_space_examples(swap, full1):
    assert singular_chain_space(swap) == span(e1)
    assert singular_chain_space(full1) == Subspace.full(1)


def test_singular_chain_swap(swap):
    ch = extract_singular_chain(swap)
    assert ch.vectors == (e1,)
    assert ch.pairs() == [(z2, e1), (e1, z2)]


def test_singular_chain_full1(full1):
    ch = extract_singular_chain(full1)
    assert len(ch) == 1
    assert ch.pairs() == [(V(0), ch.vectors[0]), (ch.vectors[0], V(0))]
    assert not ch.vectors[0][0].is_zero()


def test_jordan_chain_nilpotent(nilpotent):
    ch = jordan_chain(nilpotent, 0, e2)
    assert ch.vectors == (e1, e2)


def test_shift_transform_examples():
    x1, x2, x3 = V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)
    z = shift_chain_transform(1, [x1, x2, x3])
    assert z == [x1, tuple(b - a for a, b in zip(x1, x2))]
    for lam in (0, 3, "1+2i"):
        assert shift_chain_transform(lam, [x1, x2]) == [x1]


def test_jordan_extend_example():
    x0, x1 = V(1, 0), V(0, 1)
    z = jordan_extend_transform(1, [x0, x1], 4)
    assert z == [x0] + [V(1, m) for m in range(1, 5)]


def test_vandermonde_2x2():
    W = confluent_vandermonde(1, [(1, 0), (0, 0)])
    assert W == mat([[1, 1], [1, 0]])
    assert W.det().norm() == 1 == confluent_vandermonde_det([(1, 0), (0, 0)]).norm()
    assert oracle.det(W.rows) == -1


def test_vandermonde_3x3():
    W = confluent_vandermonde(2, [(2, 1), (3, 0)])
    assert W == mat([[1, 0, 1], [2, 1, 3], [4, 4, 9]])
    assert W.det() == 1 == confluent_vandermonde_det([(2, 1), (3, 0)])
    assert oracle.det(W.rows) == 1


def test_swap_every_point_is_eigenvalue(swap):
    for lam in (0, 1, -2, "1/2+1/3i", INF):
        assert is_eigenvalue(swap, lam)


def test_proper_eigenvalue_examples(swap, full1):
    assert not is_proper_eigenvalue(swap, 0)
    for lam in (0, 1, "-3/2", "0+1i", INF):
        assert not is_proper_eigenvalue(full1, lam)


def test_spectrum_diag():
    rep = proper_point_spectrum(LinearRelation.from_matrix(mat([[1, 0], [0, 2]])))
    assert set(rep.eigenvalues()) == {gq(1), gq(2)}
    assert rep.residual_is_one and not rep.full_spectrum_flag
    assert oracle.charpoly_coeffs([[1, 0], [0, 2]]) == [2, -3, 1]


def test_spectrum_swap(swap):
    rep = proper_point_spectrum(swap)
    assert rep.proper_eigenvalues == [] and rep.full_spectrum_flag


def test_spectrum_nilpotent(nilpotent):
    assert proper_point_spectrum(nilpotent).proper_eigenvalues == [(gq(0), 2)]


def test_independence_diag():
    A = LinearRelation.from_matrix(mat([[1, 0], [0, 2]]))
    cert = independence_certificate(A, [(1, e1), (2, e2)])
    assert cert.independent and cert.rank == 2


def test_pencil_to_relation_full():
    A = pencil_to_relation(MatrixPencil(mat([[1, 0]]), mat([[0, 1]])))
    assert A == LinearRelation.full(1)


def test_kronecker_nilpotent_block():
    ks = kronecker_structure(MatrixPencil(mat([[0, 0], [1, 0]]), mat([[1, 0], [0, 1]])))
    assert list(ks.alpha) == [2] and not ks.epsilon and not ks.eta and ks.n0 == 0


def test_kronecker_eps2():
    ks = kronecker_structure(MatrixPencil(mat([[1, 0]]), mat([[0, 1]])))
    assert list(ks.epsilon) == [2] and not ks.alpha and not ks.eta and ks.n0 == 0


def test_kcf_generate_eps2():
    P, _ = kcf_generate(KcfSpec([], [], [2], []))
    assert P.E == mat([[1, 0]]) and P.F == mat([[0, 1]])


def test_kcf_generate_alpha1():
    P, _ = kcf_generate(KcfSpec([], [1], [], []))
    assert P.E == mat([[0]]) and P.F == mat([[1]])


def test_kcf_clause_i_eps2():
    spec = KcfSpec([], [], [2], [])
    P, _ = kcf_generate(spec)
    rep = verify_kcf_subspaces(P, spec)
    assert rep.clauses["i"]
    assert singular_chain_space(pencil_to_relation(P)) == Subspace.full(1)


def test_theorem_clauses_alpha1():
    spec = KcfSpec([], [1], [], [])
    P, _ = kcf_generate(spec)
    rep = verify_kcf_subspaces(P, spec)
    assert rep.clauses["ii"] and rep.clauses["iv"]
    A = pencil_to_relation(P)
    assert root_space(A, INF) == Subspace.full(1)
    assert proper_point_spectrum(A).eigenvalues() == [INF]


def _write(tmp_path, doc):
    p = tmp_path / "doc.json"
    p.write_text(json.dumps(doc))
    return str(p)


def test_cli_analyze_pencil_eps2(tmp_path, capsys):
    path = _write(tmp_path, {"pencil": {"E": [["1", "0"]], "F": [["0", "1"]]}})
    assert main(["analyze", "--json", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kronecker"]["epsilon"] == [2]
    assert len(out["singular_chain_space"]) == 1
    assert out["spectrum"]["full_spectrum_flag"] is True


def test_cli_rootspace_nilpotent(tmp_path, capsys):
    path = _write(tmp_path, {"relation": {"space_dim": 2, "generators": [
        {"x": ["1", "0"], "y": ["0", "0"]}, {"x": ["0", "1"], "y": ["1", "0"]}]}})
    assert main(["rootspace", "--lambda", "0", "--json", path]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 2


def test_verify_seed7_theorem_suite():
    # the full 500-trial run lives in the acceptance suite
    assert run_suite("root_intersection", HarnessConfig(trials=25, seed=7, max_dim=5)).ok


def test_mutant_is_caught(monkeypatch):
    import linrel.rootspace as rs

    def mutant(A):
        return rs.root_space(A, 0).sum(rs.root_space(A, INF))

    monkeypatch.setattr(rs, "singular_chain_space", mutant)
    res = run_suite("root_intersection", HarnessConfig(trials=20, seed=7))
    assert not res.ok
    assert "relation" in res.failures[0]
