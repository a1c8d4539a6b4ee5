"""Schedule validation, idle time, and per-source statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import Instance, Schedule

__all__ = [
    "Verdict",
    "IdleProfile",
    "SourceRow",
    "SourceStats",
    "VIOLATIONS",
    "verify_schedule",
    "idle_profile",
    "source_stats",
]

VIOLATIONS = (
    "UnknownJob",
    "PtimeMismatch",
    "DuplicateJob",
    "BadMachine",
    "BadStart",
    "BadFinish",
    "BatchOrder",
    "MissingJob",
    "MachineCountMismatch",
    "InconsistentLoads",
    "InconsistentMakespan",
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_schedule`.

    ``index`` is the offending assignment's position in decision order, or
    ``None`` for whole-schedule violations.
    """

    ok: bool
    violation: str | None = None
    index: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        where = f" at assignment {self.index}" if self.index is not None else ""
        return f"{self.violation}{where}: {self.detail}"


OK = Verdict(True)


def verify_schedule(
    instance: Instance, schedule: Schedule, *, batch_order: bool = True
) -> Verdict:
    """Return the first violation found, or an OK verdict.

    Set ``batch_order=False`` for schedules built from a different arrival
    order (concatenated list scheduling, LPT), which legitimately place a
    later batch's job ahead of an earlier one.
    """
    expected = {job.key: job.ptime for job in instance.jobs}
    m = instance.m
    loads = [0] * m
    seen: set[tuple[int, int]] = set()
    last_step = 0

    for idx, a in enumerate(schedule.assignments):
        job = a.job
        if job.key not in expected:
            return Verdict(False, "UnknownJob", idx, f"{job} is not in the instance")
        if expected[job.key] != job.ptime:
            return Verdict(
                False, "PtimeMismatch", idx,
                f"{job} but instance has ptime {expected[job.key]}",
            )
        if job.key in seen:
            return Verdict(False, "DuplicateJob", idx, f"{job} assigned twice")
        seen.add(job.key)
        if not 0 <= a.machine < m:
            return Verdict(False, "BadMachine", idx, f"machine {a.machine} not in [0, {m})")
        if a.start != loads[a.machine]:
            return Verdict(
                False, "BadStart", idx,
                f"{job} starts at {a.start}, machine {a.machine} load is {loads[a.machine]}",
            )
        if a.finish != a.start + job.ptime:
            return Verdict(False, "BadFinish", idx, f"{job} finishes at {a.finish}")
        if batch_order:
            if job.index_in_list < last_step:
                return Verdict(
                    False, "BatchOrder", idx,
                    f"{job} from batch {job.index_in_list} after batch {last_step}",
                )
            last_step = job.index_in_list
        loads[a.machine] = a.finish

    if len(seen) != len(expected):
        missing = sorted(set(expected) - seen)[0]
        return Verdict(False, "MissingJob", None, f"job {missing} never assigned")
    if len(schedule.loads) != m:
        return Verdict(
            False, "MachineCountMismatch", None,
            f"schedule has {len(schedule.loads)} machines, instance has {m}",
        )
    if tuple(schedule.loads) != tuple(loads):
        return Verdict(
            False, "InconsistentLoads", None,
            f"loads field {list(schedule.loads)} != recomputed {loads}",
        )
    if schedule.makespan != max(loads):
        return Verdict(
            False, "InconsistentMakespan", None,
            f"makespan field {schedule.makespan} != max load {max(loads)}",
        )
    return OK


@dataclass(frozen=True)
class IdleProfile:
    per_machine: tuple[int, ...]
    total: int


def idle_profile(schedule: Schedule) -> IdleProfile:
    """Idle time per machine, ``makespan - load``.

    Jobs on a machine run back to back from time 0, so the only idle
    stretch is the tail after a machine's last job.
    """
    per = tuple(schedule.makespan - load for load in schedule.loads)
    return IdleProfile(per, sum(per))


@dataclass(frozen=True)
class SourceRow:
    list_id: int
    jobs: int
    total: int
    last_finish: int
    mean_finish: Fraction


@dataclass(frozen=True)
class SourceStats:
    rows: tuple[SourceRow, ...]

    @property
    def n(self) -> int:
        return sum(row.jobs for row in self.rows)

    def __getitem__(self, list_id: int) -> SourceRow:
        for row in self.rows:
            if row.list_id == list_id:
                return row
        raise KeyError(list_id)


def source_stats(schedule: Schedule) -> SourceStats:
    """Per-source job count, total size, last and mean finish time."""
    acc: dict[int, list[tuple[int, int]]] = {}
    for a in schedule.assignments:
        acc.setdefault(a.job.list_id, []).append((a.job.ptime, a.finish))
    rows = []
    for r in sorted(acc):
        items = acc[r]
        finishes = [f for _, f in items]
        rows.append(
            SourceRow(
                list_id=r,
                jobs=len(items),
                total=sum(p for p, _ in items),
                last_finish=max(finishes),
                mean_finish=Fraction(sum(finishes), len(finishes)),
            )
        )
    return SourceStats(tuple(rows))
