"""
Two sources, two machines
=========================

Walk through LJLLM on the small two-list instance: three unit jobs from
the first source, three jobs of size 2 from the second.
"""

from mlsched import batches, build_instance, idle_profile, run_ljllm, run_ls, source_stats
from mlsched.oracle import opt_makespan
from mlsched.trace_io import serialize_schedule

instance = build_instance(2, [[1, 1, 1], [2, 2, 2]])

##############################################################################
# Each time step reveals one job per source. The scheduler must place the
# whole batch before it sees the next one.

for batch in batches(instance):
    print(f"step {batch.step}:", ", ".join(str(job) for job in batch))

##############################################################################
# Inside a batch the larger job goes first, each onto whichever machine is
# least loaded at that moment (lowest index on ties).

schedule = run_ljllm(instance)
print(serialize_schedule(schedule))
print("loads", schedule.loads, "makespan", schedule.makespan)

##############################################################################
# Plain list scheduling sees the same jobs as one list, source 1 first.
# Here it also reaches 5, and so does the optimum.

print("LS makespan ", run_ls(instance).makespan)
print("OPT makespan", opt_makespan(instance).opt_makespan)

##############################################################################
# Idle time is the gap between a machine's load and the makespan.

print("idle per machine", idle_profile(schedule).per_machine)

##############################################################################
# Per-source view: how much work each source got through, and when its jobs
# finished.

for row in source_stats(schedule).rows:
    print(f"source {row.list_id}: {row.jobs} jobs, size {row.total}, "
          f"last finish {row.last_finish}, mean finish {row.mean_finish}")
