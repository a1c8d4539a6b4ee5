"""Evaluation driver: run every algorithm on an instance, compare against
the oracle, and check the competitive bounds with exact arithmetic."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .algorithms import ALGORITHMS
from .metrics import SourceStats, idle_profile, source_stats, verify_schedule
from .model import Instance, Schedule
from .oracle import (
    DEFAULT_NODE_LIMIT,
    DEFAULT_SIZE_CAP,
    OracleError,
    competitive_ratio,
    list_scheduling_bound,
    lower_bound,
    lpt_bound,
    opt_makespan,
)
from .trace_io import format_ratio, instance_digest, serialize_report
from .workloads import FAMILIES, GenSpec, generate

__all__ = [
    "PASS",
    "FAIL",
    "NA",
    "CHECKS",
    "Check",
    "EvaluationReport",
    "SweepResult",
    "evaluate",
    "sweep",
    "sweep_groups",
    "format_summary",
    "write_sweep",
    "load_config",
    "acceptance_specs",
]

PASS, FAIL, NA = "pass", "fail", "n/a"
CHECKS = ("valid", "accounting", "degeneracy", "theorem1", "lemma14", "lemma15", "eq4")

# schedules that follow the batch arrival order; the others are checked
# without the batch-order rule
_BATCH_ORDERED = {"ljllm", "ls_rr"}


@dataclass(frozen=True)
class Check:
    status: str
    value: str | None = None
    bound: str | None = None


_NOT_APPLICABLE = Check(NA)


def _le(value: Fraction, bound: Fraction) -> Check:
    status = PASS if value <= bound else FAIL
    return Check(status, format_ratio(value), format_ratio(bound))


@dataclass(frozen=True)
class EvaluationReport:
    digest: str
    m: int
    k: int
    n: int
    makespans: dict[str, int]
    opt: int | None
    opt_reason: str | None
    lower_bound: int
    ratios: dict[str, Fraction | None]
    checks: dict[str, Check]
    idle: dict[str, int]
    sources: SourceStats

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks.values())

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, c in self.checks.items() if c.status == FAIL]


def _run_oracle(instance: Instance, cap: int, node_limit: int) -> tuple[int | None, str | None]:
    try:
        return opt_makespan(instance, node_limit=node_limit, size_cap=cap).opt_makespan, None
    except OracleError as exc:
        return None, type(exc).__name__


def evaluate(
    instance: Instance,
    with_oracle: bool = True,
    *,
    oracle_cap: int = DEFAULT_SIZE_CAP,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> EvaluationReport:
    """Run LJLLM, LS (both flattenings) and LPT, then check every bound
    that applies to the instance."""
    m, n, k = instance.m, instance.n, instance.k
    schedules: dict[str, Schedule] = {name: run(instance) for name, run in ALGORITHMS.items()}
    makespans = {name: s.makespan for name, s in schedules.items()}
    idle = {name: idle_profile(s).total for name, s in schedules.items()}

    if with_oracle:
        opt, reason = _run_oracle(instance, oracle_cap, node_limit)
    else:
        opt, reason = None, "OracleDisabled"
    ratios = {
        name: None if opt is None else competitive_ratio(c, opt) for name, c in makespans.items()
    }

    checks: dict[str, Check] = {}

    bad = None
    for name, s in schedules.items():
        verdict = verify_schedule(instance, s, batch_order=name in _BATCH_ORDERED)
        if not verdict:
            bad = f"{name}: {verdict}"
            break
    checks["valid"] = Check(FAIL, bad) if bad else Check(PASS)

    total = instance.total
    broken = [
        name for name, s in schedules.items() if m * s.makespan != total + idle[name]
    ]
    lj = schedules["ljllm"]
    checks["accounting"] = Check(
        FAIL if broken else PASS,
        f"{m}*{lj.makespan}", f"{total}+{idle['ljllm']}",
    )

    if k == 1:
        twin = "ls"
    elif k == n:
        twin = "lpt"
    else:
        twin = None
    if twin is None:
        checks["degeneracy"] = _NOT_APPLICABLE
    else:
        same = makespans[twin] == lj.makespan and schedules[twin].assignments == lj.assignments
        checks["degeneracy"] = Check(PASS if same else FAIL, str(lj.makespan), f"{twin}={makespans[twin]}")

    ratio = ratios["ljllm"]
    if ratio is None:
        checks["theorem1"] = _NOT_APPLICABLE
        checks["lemma14"] = _NOT_APPLICABLE
        checks["lemma15"] = _NOT_APPLICABLE
    else:
        checks["theorem1"] = _le(ratio, list_scheduling_bound(m))
        checks["lemma14"] = _le(ratio, lpt_bound(m)) if k == n else _NOT_APPLICABLE
        if m == 1 or n <= m:
            checks["lemma15"] = Check(PASS if ratio == 1 else FAIL, format_ratio(ratio), "1/1")
        else:
            checks["lemma15"] = _NOT_APPLICABLE

    cap = (m - 1) * instance.pmax
    checks["eq4"] = Check(PASS if idle["ljllm"] <= cap else FAIL, str(idle["ljllm"]), str(cap))

    return EvaluationReport(
        digest=instance_digest(instance),
        m=m,
        k=k,
        n=n,
        makespans=makespans,
        opt=opt,
        opt_reason=reason,
        lower_bound=lower_bound(instance),
        ratios=ratios,
        checks=checks,
        idle=idle,
        sources=source_stats(lj),
    )


@dataclass
class SweepResult:
    summary: dict
    reports: list[EvaluationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.summary["verdict"] == PASS


def _evaluate_spec(args: tuple[GenSpec, bool, int, int]) -> EvaluationReport:
    spec, with_oracle, cap, node_limit = args
    return evaluate(generate(spec), with_oracle, oracle_cap=cap, node_limit=node_limit)


def _family_rank(family: str) -> int:
    return FAMILIES.index(family) if family in FAMILIES else len(FAMILIES)


def sweep(
    specs: Sequence[GenSpec],
    seeds: int,
    *,
    jobs: int = 1,
    with_oracle: bool = True,
    oracle_cap: int = DEFAULT_SIZE_CAP,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> SweepResult:
    """Evaluate ``seeds`` instances per spec.

    Instance ``i`` of a spec uses seed ``spec.seed + i``. Reports come back
    sorted by instance digest, so ``jobs`` never changes the output.
    """
    return sweep_groups(
        [(spec, seeds) for spec in specs],
        jobs=jobs,
        with_oracle=with_oracle,
        oracle_cap=oracle_cap,
        node_limit=node_limit,
    )


def sweep_groups(
    groups: Iterable[tuple[GenSpec, int]],
    *,
    jobs: int = 1,
    with_oracle: bool = True,
    oracle_cap: int = DEFAULT_SIZE_CAP,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> SweepResult:
    """Like :func:`sweep`, but each spec carries its own seed count."""
    specs = [spec.with_seed(spec.seed + i) for spec, seeds in groups for i in range(seeds)]
    tasks = [(spec, with_oracle, oracle_cap, node_limit) for spec in specs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (8 * jobs))
            reports = list(pool.map(_evaluate_spec, tasks, chunksize=chunk))
    else:
        reports = [_evaluate_spec(t) for t in tasks]

    counts = {name: {PASS: 0, FAIL: 0, NA: 0} for name in CHECKS}
    missing: dict[str, int] = {}
    worst: dict[tuple[str, int], dict[str, Fraction]] = {}
    failures = set()
    for spec, report in zip(specs, reports):
        for name, c in report.checks.items():
            counts[name][c.status] += 1
        if report.opt_reason is not None:
            missing[report.opt_reason] = missing.get(report.opt_reason, 0) + 1
        if not report.passed:
            failures.add(report.digest)
        bucket = worst.setdefault((spec.family, spec.m), {})
        for alg, r in report.ratios.items():
            if r is not None and (alg not in bucket or r > bucket[alg]):
                bucket[alg] = r

    ordered = sorted(worst.items(), key=lambda kv: (_family_rank(kv[0][0]), kv[0]))
    summary = {
        "instances": len(reports),
        "verdict": FAIL if failures else PASS,
        "checks": counts,
        "opt_missing": dict(sorted(missing.items())),
        "worst": [
            {"family": family, "m": m, **{alg: format_ratio(r) for alg, r in ratios.items()}}
            for (family, m), ratios in ordered
        ],
        "failures": sorted(failures),
    }
    reports.sort(key=lambda r: r.digest)
    return SweepResult(summary, reports)


def format_summary(summary: dict) -> str:
    """Human-readable summary, one line per check."""
    lines = [f"instances: {summary['instances']}"]
    for name, c in summary["checks"].items():
        lines.append(f"{name}: {c[FAIL]} failures ({c[PASS]} pass, {c[NA]} n/a)")
    for reason, count in summary["opt_missing"].items():
        lines.append(f"opt missing ({reason}): {count}")
    lines.append(f"verdict: {summary['verdict']}")
    return "\n".join(lines) + "\n"


def write_sweep(result: SweepResult, out_dir: str | os.PathLike) -> Path:
    """Write ``summary.json`` and ``reports.jsonl`` (one report per line)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "summary.json").write_text(json.dumps(result.summary, indent=2) + "\n")
    with open(out / "reports.jsonl", "w", newline="\n") as fh:
        for report in result.reports:
            fh.write(serialize_report(report, indent=None) + "\n")
    return out


def _spec_from_dict(raw: dict) -> GenSpec:
    raw = dict(raw)
    if raw.get("lengths") is not None:
        raw["lengths"] = tuple(raw["lengths"])
    return GenSpec(**raw)


def load_config(path: str | os.PathLike) -> dict:
    """Read a sweep config (JSON).

    ``{"seeds": 500, "jobs": 1, "oracle_cap": 16, "specs": [{...}, ...]}``;
    each spec entry takes :class:`GenSpec` fields and may override
    ``seeds``.
    """
    with open(path) as fh:
        raw = json.load(fh)
    specs = raw.get("specs")
    if not isinstance(specs, list) or not specs:
        raise ValueError(f"{path}: 'specs' must be a non-empty list")
    groups: list[tuple[GenSpec, int]] = []
    default_seeds = int(raw.get("seeds", 1))
    for entry in specs:
        entry = dict(entry)
        n_seeds = int(entry.pop("seeds", default_seeds))
        groups.append((_spec_from_dict(entry), n_seeds))
    return {
        "groups": groups,
        "jobs": int(raw.get("jobs", 1)),
        "oracle_cap": int(raw.get("oracle_cap", DEFAULT_SIZE_CAP)),
        "node_limit": int(raw.get("node_limit", DEFAULT_NODE_LIMIT)),
    }


def acceptance_specs() -> list[tuple[str, list[tuple[GenSpec, int]]]]:
    """The acceptance sweeps as ``(name, [(spec, seeds), ...])``."""
    return [
        ("uniform", [
            (GenSpec("uniform", m=m, k=k, n_max=12), 500)
            for m in (2, 3, 4) for k in (1, 2, 3)
        ]),
        ("equal_lists", [
            (GenSpec("equal_lists", m=m, k=k, n_max=12), 300)
            for m in (2, 3, 4) for k in (2, 3)
        ]),
        ("unit_jobs", [
            (GenSpec("unit", m=m, k=k, n_max=12), 200)
            for m in (2, 3, 4) for k in (1, 2, 3)
        ]),
        ("single_batch", [
            (GenSpec("single_batch", m=m, n_max=10), 300) for m in (2, 3)
        ]),
        ("exact_cases", [
            (GenSpec("uniform", m=1, k=2, n_max=12), 100),
            (GenSpec("uniform", m=4, k=2, n_max=4), 100),
        ]),
    ]
