"""
Randomized verification
=======================

Every identity is a named check evaluated on random relations and pencils.
Failures come back as JSON documents that can be replayed.
"""
import json

from linrel.harness import HarnessConfig, replay, run_suite, transcript

cfg = HarnessConfig(trials=20, seed=7, max_dim=4)
results = [run_suite(name, cfg) for name in ("root_intersection", "forced_sum", "identities", "spectrum")]
print(transcript(results))

# %%
# A deliberately broken R_c (sum instead of intersection) is caught at once.
import linrel.rootspace as rs

original = rs.singular_chain_space
rs.singular_chain_space = lambda A: rs.root_space(A, 0) + rs.root_space(A, rs.INF)
broken = run_suite("root_intersection", cfg)
doc = broken.failures[0]
print(json.dumps(doc)[:200], "...")
print("replay with the mutant:", replay(doc))
rs.singular_chain_space = original
print("replay after the fix:", replay(doc))
