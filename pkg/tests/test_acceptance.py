"""Acceptance run: the ten criteria, each with its trial count and time limit.

Every test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary, and running this file directly prints them too.
"""
import re
import subprocess
import sys
import time
from pathlib import Path

import pytest

from linrel.harness import HarnessConfig, run_suite

SEED = 7
MAX_DIM = 5
RESULTS = {}
_suites = {}


def suite(name, trials):
    key = (name, trials)
    if key not in _suites:
        _suites[key] = run_suite(name, HarnessConfig(trials=trials, seed=SEED, max_dim=MAX_DIM))
    return _suites[key]


def record(number, title, ok, seconds, limit, detail=""):
    status = "PASS" if ok and seconds < limit else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title} ({seconds:.2f} s, limit {limit} s)"
    if detail:
        line += f"; {detail}"
    RESULTS[number] = line
    print(line)
    return status == "PASS"


def failures_text(*results):
    bad = [f for r in results for f in r.failures]
    return f"{len(bad)} failing checks, first: {bad[0]}" if bad else ""


def test_criterion_01_intersection_of_two_root_spaces():
    r = suite("root_intersection", 500)
    ok = r.ok and r.counts["root_intersection"] == 1500
    assert record(1, "R_lam & R_mu = R_c on 500 relations x 3 pairs", ok, r.seconds, 60,
                  f"{r.counts['root_intersection']} equalities, R_c != 0 in {r.notes['R_c nonzero']} relations"), failures_text(r)


def test_criterion_02_disjoint_sums():
    r = suite("disjoint_sums", 200)
    ok = r.ok and r.counts["disjoint_sums"] == 200
    assert record(2, "sum/sum intersection = R_c on 200 relations", ok, r.seconds, 60), failures_text(r)


def test_criterion_03_sums_forced_into_a_root_space():
    r = suite("forced_sum", 200)
    ok = r.ok and r.counts["forced_sum"] == 200 and r.notes["sum zero"] > 0 and r.notes["nonzero sample"] > 0
    assert record(3, "x_r in R_c whenever the sum lies in R_mu (200 trials)", ok, r.seconds, 60,
                  f"{r.notes['sum zero']} zero-sum trials, {r.notes['nonzero sample']} nonzero samples"), \
        failures_text(r)


def test_criterion_04_chain_transforms():
    a, b = suite("shift_transform", 200), suite("extend_transform", 200)
    ok = a.ok and b.ok and a.counts["shift_transform"] == 200 and b.counts["extend_transform"] == 200
    assert record(4, "shift and extension transforms on 200 chains each", ok, a.seconds + b.seconds, 30), \
        failures_text(a, b)


def test_criterion_05_confluent_vandermonde():
    r = suite("vandermonde", 100)
    ok = r.ok and r.counts["vandermonde_det"] == 100
    assert record(5, "|det W| matches the product and W is invertible (100 specs)", ok, r.seconds, 10), \
        failures_text(r)


def test_criterion_06_root_space_identities():
    r = suite("identities", 300)
    names = ("shift_invariance", "infinity_invariance", "inverse_root_space", "resolvent_identity",
             "rc_shift_invariance", "rc_with_infinity", "rc_containment")
    ok = r.ok and all(r.counts[n] == 300 for n in names)
    assert record(6, "shift/inverse/resolvent identities on 300 relations", ok, r.seconds, 60), failures_text(r)


def test_criterion_07_block_formulas_for_generated_pencils():
    r = suite("kcf_formulas", 100)
    ok = r.ok and r.counts["kcf_formulas"] == 100
    assert record(7, "R_c, R_inf, R_lam, sigma_pi from the Kronecker form (100 pencils)", ok, r.seconds, 120), \
        failures_text(r)


def test_criterion_08_kronecker_invariance():
    r = suite("kronecker", 100)
    ok = r.ok and r.counts["kronecker_invariance"] == 200 and r.counts["kronecker_dims"] == 200
    assert record(8, "equivalence invariance and dimension cross-checks (100 trials)", ok, r.seconds, 60), \
        failures_text(r)


def test_criterion_09_proper_spectrum():
    sizes = (("root_intersection", 500), ("disjoint_sums", 200), ("forced_sum", 200), ("shift_transform", 200),
             ("extend_transform", 200), ("identities", 300), ("kcf_formulas", 100), ("kronecker", 100))
    earlier = [suite(n, t) for n, t in sizes]
    bound_checks = sum(r.counts["proper_spectrum_bound"] for r in earlier)
    bound_failures = [f for r in earlier for f in r.failures if f["check"] == "proper_spectrum_bound"]
    r = suite("spectrum", 100)
    ok = (r.ok and not bound_failures and r.counts["independence_rank"] == 100 and r.counts["full_spectrum"] == 100
          and r.counts["spectrum_consistency"] == 100)
    assert record(9, "|sigma_pi| <= dim, full-spectrum criterion, 100 independence certificates", ok, r.seconds, 60,
                  f"bound checked on {bound_checks + r.counts['proper_spectrum_bound']} instances"), \
        failures_text(r) or bound_failures


def test_criterion_10_hand_derived_instances():
    path = Path(__file__).with_name("test_derived.py")
    start = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(path)],
                         capture_output=True, text=True, cwd=path.parent.parent)
    wall = time.perf_counter() - start
    m = re.search(r"(\d+) passed(?:, (\d+) \w+)* in ([\d.]+)s", res.stdout)
    seconds = float(m.group(3)) if m else wall
    ok = res.returncode == 0 and m is not None
    assert record(10, "hand-derived instances as regression tests", ok, seconds, 5,
                  f"{m.group(1) if m else 0} tests"), res.stdout[-2000:]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
