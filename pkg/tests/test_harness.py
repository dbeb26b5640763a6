import json

import pytest

import linrel.rootspace as rs
from linrel import INF, LinearRelation, gq
from linrel.docio import loads_document
from linrel.harness import (
    CHECKS,
    SUITES,
    HarnessConfig,
    counterexample,
    replay,
    run_all,
    run_check,
    run_suite,
    transcript,
)


def test_config_validation():
    with pytest.raises(ValueError):
        HarnessConfig(trials=0)
    with pytest.raises(ValueError):
        HarnessConfig(max_dim=0)
    with pytest.raises(ValueError):
        HarnessConfig(scalar_pool=())
    assert HarnessConfig(scalar_pool=("1", "1/2")).scalar_pool == (gq(1), gq("1/2"))


def test_smoke_all_suites():
    results = run_all(HarnessConfig(trials=2, seed=42))
    assert [r.name for r in results] == list(SUITES)
    assert all(r.ok for r in results), [f for r in results for f in r.failures]


def test_seed_determinism():
    cfg = HarnessConfig(trials=4, seed=3)
    a = transcript(run_all(cfg, ["root_intersection", "forced_sum", "spectrum"]))
    b = transcript(run_all(cfg, ["root_intersection", "forced_sum", "spectrum"]))
    assert a == b
    c = transcript(run_all(HarnessConfig(trials=4, seed=4), ["forced_sum"]))
    assert "forced_sum" in c


def test_workers_give_same_counts():
    serial = run_suite("forced_sum", HarnessConfig(trials=6, seed=9))
    parallel = run_suite("forced_sum", HarnessConfig(trials=6, seed=9, workers=2))
    assert serial.counts == parallel.counts and serial.notes == parallel.notes


def test_small_max_dim():
    for r in run_all(HarnessConfig(trials=3, seed=1, max_dim=1)):
        assert r.ok, r.failures


def test_mutant_fails_and_replays(monkeypatch):
    original = rs.singular_chain_space
    monkeypatch.setattr(rs, "singular_chain_space",
                        lambda A: rs.root_space(A, 0).sum(rs.root_space(A, INF)))
    res = run_suite("root_intersection", HarnessConfig(trials=20, seed=7))
    assert not res.ok
    doc = json.loads(json.dumps(res.failures[0]))
    assert doc["check"] == "root_intersection" and "relation" in doc
    assert replay(doc)[0] is False
    monkeypatch.setattr(rs, "singular_chain_space", original)
    assert replay(doc)[0] is True


def test_counterexample_document_round_trip():
    A = LinearRelation.from_generators(2, [((0, 0), (1, 0)), ((1, 0), (0, 0))])
    doc = counterexample("root_intersection", A, [gq("1/2"), INF])
    assert loads_document(json.dumps(doc)) == A
    assert doc["scalars"] == ["1/2", "inf"]
    assert replay(doc) == (True, "")


def test_check_exceptions_are_failures():
    ok, detail = run_check("root_intersection", LinearRelation.identity(1), [gq(1)])
    assert not ok and "ValueError" in detail


def test_precondition_violations_fail():
    A = LinearRelation.identity(2)
    assert run_check("root_intersection", A, [gq(1), gq(1)])[0] is False
    assert run_check("disjoint_sums", A, [(gq(1),), (gq(1),)])[0] is False


def test_every_check_used_by_a_suite():
    import inspect

    source = "".join(inspect.getsource(fn) for fn in SUITES.values())
    assert all(f'"{name}"' in source for name in CHECKS)


def test_transcript_lists_counts():
    text = transcript([run_suite("vandermonde", HarnessConfig(trials=3, seed=0))])
    assert "vandermonde_det: 3 checks, 0 failed" in text


def test_required_blocks_that_cannot_fit_are_dropped():
    import random

    from linrel.harness import DEFAULT_POOL, Sampler, random_relation

    for i in range(20):
        S = Sampler(random.Random(i), DEFAULT_POOL)
        assert random_relation(S, 1, require=[("epsilon", 3)]).relation.space_dim == 1
