"""
Checking the bounds on random instances
=======================================

Generate seeded instances, compare every algorithm with the exact optimum
and count how often each bound check passes. Ratios are exact fractions,
so a bound met with equality counts as a pass.
"""

from fractions import Fraction

from mlsched.harness import sweep
from mlsched.oracle import list_scheduling_bound
from mlsched.workloads import GenSpec

specs = [GenSpec("uniform", m=m, k=k, n_max=12) for m in (2, 3, 4) for k in (1, 2, 3)]
result = sweep(specs, 100)

##############################################################################
# One row per check: how many instances passed, failed, or were out of scope.

for name, counts in result.summary["checks"].items():
    print(f"{name:>10}: {counts}")

##############################################################################
# Worst ratio seen per machine count, next to the guarantee.

for row in result.summary["worst"]:
    m = row["m"]
    print(f"m={m}: LJLLM {row['ljllm']:>6}  LS {row['ls']:>6}  LPT {row['lpt']:>6}"
          f"  (bound {list_scheduling_bound(m)})")
    assert Fraction(row["ljllm"]) <= list_scheduling_bound(m)
