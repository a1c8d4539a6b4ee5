"""Command line entry point.

Exit codes: 0 success, 1 a bound check or schedule verification failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .algorithms import FLATTEN_MODES, run_ljllm, run_lpt, run_ls
from .metrics import verify_schedule
from .model import InvalidInstance
from .oracle import DEFAULT_NODE_LIMIT, DEFAULT_SIZE_CAP
from .trace_io import (
    ParseError,
    parse_instance,
    parse_schedule,
    serialize_instance,
    serialize_report,
    serialize_schedule,
)
from .workloads import FAMILIES, GenSpec, InconsistentSpec, generate

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _lens(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load_instance(path: str):
    text = _read(path)
    try:
        return parse_instance(text)
    except (ParseError, InvalidInstance) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family,
        m=args.m,
        k=args.k,
        lengths=args.lens,
        n=args.n,
        lo=args.lo,
        hi=args.hi,
        seed=args.seed,
        n_max=args.n_max,
    )
    try:
        instance = generate(spec)
    except InconsistentSpec as exc:
        raise UsageError(f"InconsistentSpec: {exc}") from None
    _write(args.out, serialize_instance(instance))
    return EXIT_OK


_RUNNERS = {"ljllm": run_ljllm, "lpt": run_lpt}


def cmd_run(args) -> int:
    instance = _load_instance(args.input)
    if args.alg == "ls":
        schedule = run_ls(instance, args.flatten)
    else:
        schedule = _RUNNERS[args.alg](instance)
    csv = serialize_schedule(schedule)
    if args.schedule_out is not None:
        _write(args.schedule_out, csv)
    else:
        sys.stdout.write(csv)
    print(f"makespan {schedule.makespan}")
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = _load_instance(args.input)
    text = _read(args.schedule)
    try:
        schedule = parse_schedule(text, instance.m)
    except ParseError as exc:
        raise UsageError(f"{args.schedule}: {exc}") from None
    verdict = verify_schedule(instance, schedule, batch_order=not args.no_batch_order)
    print(verdict)
    if verdict:
        print(f"makespan {schedule.makespan}")
        return EXIT_OK
    return EXIT_CHECK_FAILED


def cmd_ratio(args) -> int:
    instance = _load_instance(args.input)
    report = harness.evaluate(
        instance,
        with_oracle=not args.no_oracle,
        oracle_cap=args.oracle_cap,
        node_limit=args.node_limit,
    )
    sys.stdout.write(serialize_report(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_sweep(args) -> int:
    try:
        config = harness.load_config(args.config)
    except OSError as exc:
        raise UsageError(f"cannot read {args.config}: {exc.strerror}") from None
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad config {args.config}: {exc}") from None
    for spec, _ in config["groups"]:
        try:
            generate(spec)
        except InconsistentSpec as exc:
            raise UsageError(f"InconsistentSpec in {spec.label()}: {exc}") from None
    result = harness.sweep_groups(
        config["groups"],
        jobs=args.jobs if args.jobs is not None else config["jobs"],
        oracle_cap=config["oracle_cap"],
        node_limit=config["node_limit"],
    )
    if args.out is not None:
        harness.write_sweep(result, args.out)
    sys.stdout.write(harness.format_summary(result.summary))
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlsched",
        description="Multi-list online scheduling: LJLLM, baselines, exact oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--k", type=int)
    p.add_argument("--lens", type=_lens, help="list lengths, e.g. 2,2")
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="schedule an instance with one algorithm")
    p.add_argument("--alg", choices=("ljllm", "ls", "lpt"), required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--flatten", choices=FLATTEN_MODES, default="concatenate")
    p.add_argument("--schedule-out")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="check a schedule CSV against an instance")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--no-batch-order", action="store_true",
                   help="skip the batch-order rule (LS-concatenate and LPT schedules)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio", help="evaluate all algorithms against the oracle")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_SIZE_CAP)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("sweep", help="run a configured batch of generated instances")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="directory for summary.json and reports.jsonl")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mlsched {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
