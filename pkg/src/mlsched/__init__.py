"""Online scheduling of jobs submitted from several parallel sources.

Jobs arrive in batches, one per source per time step, and are placed on
identical machines by LJLLM (largest job on least loaded machine). The
package also ships the list-scheduling and LPT baselines, an exact
optimum for small instances, seeded workload generators, and an
evaluation harness that checks the competitive bounds exactly.
"""

from .algorithms import MachineState, ljllm_step, min_loaded, run_ljllm, run_lpt, run_ls
from .harness import EvaluationReport, evaluate, sweep
from .metrics import idle_profile, source_stats, verify_schedule
from .model import Assignment, Batch, Instance, Job, Schedule, batches, build_instance
from .oracle import OptResult, competitive_ratio, lower_bound, opt_makespan
from .workloads import GenSpec, generate, ls_adversarial

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "Batch",
    "EvaluationReport",
    "GenSpec",
    "Instance",
    "Job",
    "MachineState",
    "OptResult",
    "Schedule",
    "batches",
    "build_instance",
    "competitive_ratio",
    "evaluate",
    "generate",
    "idle_profile",
    "ljllm_step",
    "ls_adversarial",
    "lower_bound",
    "min_loaded",
    "opt_makespan",
    "run_ljllm",
    "run_lpt",
    "run_ls",
    "source_stats",
    "sweep",
    "verify_schedule",
]
