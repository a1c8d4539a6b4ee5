"""LJLLM and the list-scheduling baselines it reduces to.

All three algorithms share one greedy rule: a job goes to the machine with
the smallest current load, lowest index on ties. They differ only in the
order jobs are presented:

* ``run_ljllm`` walks the arrival batches; inside a batch, larger jobs go
  first and equal sizes keep list order.
* ``run_ls`` presents one flattened list, either list after list or batch
  after batch.
* ``run_lpt`` sorts every job by size up front (offline).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .model import Assignment, Batch, Instance, Job, Schedule, batches

__all__ = [
    "MachineState",
    "min_loaded",
    "ljllm_step",
    "run_ljllm",
    "run_ls",
    "run_lpt",
    "FLATTEN_MODES",
    "ALGORITHMS",
]

FLATTEN_MODES = ("concatenate", "round_robin")


class MachineState:
    """Accumulated per-machine load. Loads only ever grow."""

    __slots__ = ("loads",)

    def __init__(self, m: int | Sequence[int]):
        if isinstance(m, int):
            if m < 1:
                raise ValueError(f"need at least one machine, got {m}")
            self.loads = [0] * m
        else:
            self.loads = list(m)
            if not self.loads or min(self.loads) < 0:
                raise ValueError(f"invalid loads {self.loads!r}")

    @property
    def m(self) -> int:
        return len(self.loads)

    def assign(self, job: Job, machine: int) -> Assignment:
        start = self.loads[machine]
        self.loads[machine] = start + job.ptime
        return Assignment(job, machine, start, start + job.ptime)

    def __repr__(self) -> str:
        return f"MachineState({self.loads!r})"


def min_loaded(state: MachineState | Sequence[int]) -> int:
    """Index of a least-loaded machine; the lowest index wins ties."""
    loads = state.loads if isinstance(state, MachineState) else state
    best = 0
    for j in range(1, len(loads)):
        if loads[j] < loads[best]:
            best = j
    return best


def _largest_first(jobs: Iterable[Job]) -> list[Job]:
    return sorted(jobs, key=lambda job: (-job.ptime, job.list_id))


def ljllm_step(batch: Batch | Iterable[Job], state: MachineState) -> list[Assignment]:
    """Place one batch: largest job first, each on the currently least
    loaded machine. ``state`` is updated in place."""
    return [state.assign(job, min_loaded(state)) for job in _largest_first(batch)]


def _greedy(jobs: Iterable[Job], m: int) -> Schedule:
    state = MachineState(m)
    placed = tuple(state.assign(job, min_loaded(state)) for job in jobs)
    return Schedule(placed, tuple(state.loads), max(state.loads))


def run_ljllm(instance: Instance) -> Schedule:
    state = MachineState(instance.m)
    placed: list[Assignment] = []
    for batch in batches(instance):
        placed.extend(ljllm_step(batch, state))
    return Schedule(tuple(placed), tuple(state.loads), max(state.loads))


def run_ls(instance: Instance, flatten: str = "concatenate") -> Schedule:
    """Graham's list scheduling over the k lists flattened into one.

    ``concatenate`` presents L1 in full, then L2, and so on;
    ``round_robin`` presents the jobs batch by batch in list order.
    """
    if flatten == "concatenate":
        order = instance.jobs
    elif flatten == "round_robin":
        order = tuple(job for batch in batches(instance) for job in batch)
    else:
        raise ValueError(f"flatten must be one of {FLATTEN_MODES}, got {flatten!r}")
    return _greedy(order, instance.m)


def run_lpt(instance: Instance) -> Schedule:
    order = sorted(
        instance.jobs, key=lambda job: (-job.ptime, job.list_id, job.index_in_list)
    )
    return _greedy(order, instance.m)


def _run_ls_round_robin(instance: Instance) -> Schedule:
    return run_ls(instance, "round_robin")


# report key -> runner; order is the report order
ALGORITHMS = {
    "ljllm": run_ljllm,
    "ls": run_ls,
    "ls_rr": _run_ls_round_robin,
    "lpt": run_lpt,
}
