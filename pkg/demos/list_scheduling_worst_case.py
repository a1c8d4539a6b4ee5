"""
When list order hurts
=====================

Graham's list scheduling can be pushed to ``2 - 1/m`` times the optimum:
feed ``m*(m-1)`` unit jobs and then one job of size ``m``. Submitting the
same jobs from separate sources at once lets LJLLM sort them first.
"""

from mlsched import competitive_ratio, ls_adversarial, opt_makespan, run_ljllm, run_ls
from mlsched.trace_io import format_ratio
from mlsched.workloads import single_batch_of

print(f"{'m':>2} {'n':>3} {'LS':>4} {'OPT':>4} {'LS/OPT':>7} {'LJLLM k=n':>10}")
for m in (2, 3, 4, 5):
    instance = ls_adversarial(m)
    # n = m*(m-1) + 1 passes the default cap at m = 5; LPT already meets the
    # lower bound here, so the search ends immediately
    opt = opt_makespan(instance, size_cap=instance.n).opt_makespan
    ls = run_ls(instance).makespan

    # one job per source: the whole input is a single batch
    parallel = single_batch_of(instance)
    lj = run_ljllm(parallel).makespan

    print(f"{m:>2} {instance.n:>3} {ls:>4} {opt:>4} {format_ratio(competitive_ratio(ls, opt)):>7} "
          f"{format_ratio(competitive_ratio(lj, opt)):>10}")
