"""Exact optimum makespan for small instances, plus the trivial lower bound.

The search is a depth-first branch-and-bound over machine choices for the
jobs taken largest first. It starts from the LPT schedule as incumbent and
stops as soon as the incumbent meets the global lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algorithms import run_lpt
from .model import Instance

__all__ = [
    "OptResult",
    "OracleError",
    "InstanceTooLarge",
    "NodeLimitExceeded",
    "ZeroOpt",
    "DEFAULT_SIZE_CAP",
    "DEFAULT_NODE_LIMIT",
    "lower_bound",
    "opt_makespan",
    "competitive_ratio",
    "list_scheduling_bound",
    "lpt_bound",
]

DEFAULT_SIZE_CAP = 16
DEFAULT_NODE_LIMIT = 20_000_000


@dataclass(frozen=True)
class OptResult:
    opt_makespan: int
    explored: int
    # machine per job, jobs in Instance.jobs order
    optimal_assignment: tuple[int, ...] | None = None


class OracleError(RuntimeError):
    """Base class for oracle failures that leave OPT unknown."""


class InstanceTooLarge(OracleError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"instance has {n} jobs, oracle cap is {cap}")


class NodeLimitExceeded(OracleError):
    """Search budget ran out. ``upper_bound`` holds the best schedule found,
    which is not proven optimal."""

    def __init__(self, upper_bound: OptResult, node_limit: int):
        self.upper_bound = upper_bound
        self.node_limit = node_limit
        super().__init__(
            f"node limit {node_limit} exceeded; best makespan found "
            f"{upper_bound.opt_makespan} (upper bound only)"
        )


class ZeroOpt(ValueError):
    def __init__(self, opt):
        self.opt = opt
        super().__init__(f"optimal makespan must be >= 1, got {opt!r}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lower_bound(instance: Instance) -> int:
    """``max(ceil(sum / m), largest job)``.

    >>> from mlsched.model import build_instance
    >>> lower_bound(build_instance(2, [[1, 1, 1], [2, 2, 2]]))
    5
    """
    return max(_ceil_div(instance.total, instance.m), instance.pmax)


def opt_makespan(
    instance: Instance,
    node_limit: int = DEFAULT_NODE_LIMIT,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> OptResult:
    """Exact minimum makespan over all ``m**n`` assignments.

    Raises :class:`InstanceTooLarge` when ``n > size_cap`` and
    :class:`NodeLimitExceeded` when the search visits more than
    ``node_limit`` nodes before proving optimality.
    """
    n, m = instance.n, instance.m
    if n > size_cap:
        raise InstanceTooLarge(n, size_cap)

    jobs = instance.jobs
    order = sorted(range(n), key=lambda i: (-jobs[i].ptime, i))
    sizes = [jobs[i].ptime for i in order]
    floor = lower_bound(instance)

    lpt = run_lpt(instance)
    where = lpt.machine_of()
    best = lpt.makespan
    best_vec = [where[jobs[i].key] for i in order]
    if best == floor:
        return OptResult(best, 0, _unsort(best_vec, order))

    loads = [0] * m
    vec = [0] * n
    explored = 0

    def dfs(depth: int, cur_max: int) -> bool:
        # True once the incumbent reaches the global lower bound
        nonlocal best, best_vec, explored
        explored += 1
        if explored > node_limit:
            raise NodeLimitExceeded(OptResult(best, explored, _unsort(best_vec, order)), node_limit)
        if depth == n:
            if cur_max < best:
                best = cur_max
                best_vec = vec[:]
            return best == floor
        p = sizes[depth]
        tried = set()
        for j in range(m):
            load = loads[j]
            # machines with equal load are interchangeable; this also keeps
            # at most one empty machine in play
            if load in tried:
                continue
            tried.add(load)
            new_max = max(cur_max, load + p)
            if new_max >= best:
                continue
            loads[j] = load + p
            vec[depth] = j
            done = dfs(depth + 1, new_max)
            loads[j] = load
            if done:
                return True
        return False

    dfs(0, 0)
    return OptResult(best, explored, _unsort(best_vec, order))


def _unsort(vec: list[int], order: list[int]) -> tuple[int, ...]:
    out = [0] * len(order)
    for pos, i in enumerate(order):
        out[i] = vec[pos]
    return tuple(out)


def competitive_ratio(alg_makespan: int, opt: int) -> Fraction:
    """Exact ``alg_makespan / opt``.

    >>> competitive_ratio(7, 4)
    Fraction(7, 4)
    """
    if opt < 1:
        raise ZeroOpt(opt)
    return Fraction(alg_makespan, opt)


def list_scheduling_bound(m: int) -> Fraction:
    """``2 - 1/m``, the guarantee of any greedy least-loaded placement."""
    return 2 - Fraction(1, m)


def lpt_bound(m: int) -> Fraction:
    """``4/3 - 1/(3m)``, the guarantee when jobs arrive largest first."""
    return Fraction(4, 3) - Fraction(1, 3 * m)
