"""Domain types for multi-list online scheduling.

An :class:`Instance` holds ``m`` identical machines and ``k`` ordered job
sources. At time step ``t`` every source that still has a ``t``-th job
submits it; those jobs form one :class:`Batch` that must be placed before
the next batch is revealed.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Job",
    "Instance",
    "Batch",
    "Assignment",
    "Schedule",
    "InvalidInstance",
    "EmptyList",
    "NonPositivePtime",
    "ZeroMachines",
    "build_instance",
    "batches",
]


class InvalidInstance(ValueError):
    """Raised when an instance cannot be constructed."""


class ZeroMachines(InvalidInstance):
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"machine count must be >= 1, got {m}")


class EmptyList(InvalidInstance):
    def __init__(self, list_id: int):
        self.list_id = list_id
        super().__init__(f"list {list_id} is empty")


class NonPositivePtime(InvalidInstance):
    def __init__(self, list_id: int, index: int, value):
        self.list_id = list_id
        self.index = index
        self.value = value
        super().__init__(
            f"list {list_id}, job {index}: processing time must be a positive "
            f"integer, got {value!r}"
        )


@dataclass(frozen=True, order=True)
class Job:
    list_id: int
    index_in_list: int
    ptime: int

    @property
    def key(self) -> tuple[int, int]:
        return (self.list_id, self.index_in_list)

    def __str__(self) -> str:
        return f"J{self.list_id}_{self.index_in_list}/{self.ptime}"


def _as_ptime(value, list_id: int, index: int) -> int:
    if isinstance(value, bool):
        raise NonPositivePtime(list_id, index, value)
    try:
        p = operator.index(value)
    except TypeError:
        raise NonPositivePtime(list_id, index, value) from None
    if p < 1:
        raise NonPositivePtime(list_id, index, value)
    return p


@dataclass(frozen=True)
class Instance:
    """``m`` machines and ``k`` job sources; ``lists[r-1]`` holds source r's
    processing times in arrival order."""

    m: int
    lists: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ZeroMachines(self.m)
        if len(self.lists) == 0:
            raise InvalidInstance("an instance needs at least one list")
        lists = []
        for r, seq in enumerate(self.lists, start=1):
            seq = tuple(seq)
            if not seq:
                raise EmptyList(r)
            lists.append(tuple(_as_ptime(p, r, i) for i, p in enumerate(seq, start=1)))
        object.__setattr__(self, "lists", tuple(lists))

    @property
    def k(self) -> int:
        return len(self.lists)

    @property
    def n(self) -> int:
        return sum(len(seq) for seq in self.lists)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(seq) for seq in self.lists)

    @property
    def jobs(self) -> tuple[Job, ...]:
        """All jobs, list by list (L1 then L2 ...)."""
        return tuple(
            Job(r, i, p)
            for r, seq in enumerate(self.lists, start=1)
            for i, p in enumerate(seq, start=1)
        )

    @property
    def ptimes(self) -> tuple[int, ...]:
        return tuple(p for seq in self.lists for p in seq)

    @property
    def total(self) -> int:
        return sum(self.ptimes)

    @property
    def pmax(self) -> int:
        return max(self.ptimes)


def build_instance(m: int, lists: Iterable[Sequence[int]]) -> Instance:
    """Validate and build an :class:`Instance`.

    >>> build_instance(2, [[1, 1, 1], [2, 2, 2]]).n
    6
    """
    return Instance(m, tuple(tuple(seq) for seq in lists))


@dataclass(frozen=True)
class Batch:
    step: int
    jobs: tuple[Job, ...]

    def __len__(self) -> int:
        return len(self.jobs)

    def __iter__(self) -> Iterator[Job]:
        return iter(self.jobs)


def batches(instance: Instance) -> tuple[Batch, ...]:
    """Split an instance into its arrival batches.

    Batch ``t`` holds job ``t`` of every list that has at least ``t`` jobs,
    ordered by list id. Exhausted lists simply stop contributing.
    """
    out = []
    for step, column in enumerate(zip_longest(*instance.lists), start=1):
        jobs = tuple(
            Job(r, step, p) for r, p in enumerate(column, start=1) if p is not None
        )
        out.append(Batch(step, jobs))
    return tuple(out)


@dataclass(frozen=True)
class Assignment:
    job: Job
    machine: int
    start: int
    finish: int


@dataclass(frozen=True)
class Schedule:
    """Assignments in decision order plus final machine loads."""

    assignments: tuple[Assignment, ...]
    loads: tuple[int, ...]
    makespan: int

    @property
    def m(self) -> int:
        return len(self.loads)

    @property
    def n(self) -> int:
        return len(self.assignments)

    def machine_of(self) -> dict[tuple[int, int], int]:
        return {a.job.key: a.machine for a in self.assignments}
