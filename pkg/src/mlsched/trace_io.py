"""Text formats for instances, schedules and evaluation reports.

Instance file (``.mls``)::

    mls 1              format magic and version
    <m> <k>            machine count, list count
    <p> <p> ...        one line per list, processing times in arrival order

Tokens are ASCII decimal integers separated by a single space; every line
ends with ``\\n`` and carries no trailing whitespace.

Schedule CSV: header ``step,list,job,ptime,machine,start,finish`` then one
row per assignment in decision order. ``machine`` is 0-based.

Report: a JSON object with a fixed key order; rationals are ``"p/q"``
strings.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from .model import Assignment, Instance, Job, Schedule, build_instance

if TYPE_CHECKING:
    from .harness import EvaluationReport

__all__ = [
    "MAGIC",
    "SCHEDULE_HEADER",
    "ParseError",
    "BadMagic",
    "BadHeader",
    "NonIntegerToken",
    "ListCountMismatch",
    "NonPositivePtime",
    "BadScheduleRow",
    "parse_instance",
    "serialize_instance",
    "instance_digest",
    "serialize_schedule",
    "parse_schedule",
    "format_ratio",
    "parse_ratio",
    "report_to_dict",
    "serialize_report",
    "parse_report",
]

MAGIC = "mls 1"
SCHEDULE_HEADER = "step,list,job,ptime,machine,start,finish"

_INT = re.compile(r"-?[0-9]+\Z")


class ParseError(ValueError):
    """Malformed document. ``line`` and ``col`` are 1-based."""

    def __init__(self, message: str, line: int, col: int = 1):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class BadMagic(ParseError):
    pass


class BadHeader(ParseError):
    pass


class NonIntegerToken(ParseError):
    pass


class ListCountMismatch(ParseError):
    pass


class NonPositivePtime(ParseError):
    pass


class BadScheduleRow(ParseError):
    pass


def _tokens(text: str, line_no: int) -> list[tuple[int, int]]:
    """Split a line on single spaces into ``(value, column)`` pairs."""
    out = []
    col = 1
    for tok in text.split(" "):
        if not _INT.match(tok):
            raise NonIntegerToken(f"expected an integer, got {tok!r}", line_no, col)
        out.append((int(tok), col))
        col += len(tok) + 1
    return out


def parse_instance(document: str) -> Instance:
    """Parse an ``.mls`` document.

    >>> parse_instance("mls 1\\n2 2\\n1 1 1\\n2 2 2\\n").lists
    ((1, 1, 1), (2, 2, 2))
    """
    lines = document.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        got = lines[0] if lines else ""
        raise BadMagic(f"expected {MAGIC!r}, got {got!r}", 1)
    if len(lines) < 2:
        raise BadHeader("missing '<m> <k>' header", 2)
    try:
        header = _tokens(lines[1], 2)
    except NonIntegerToken as exc:
        raise BadHeader(f"header must be '<m> <k>': {exc}", 2, exc.col) from None
    if len(header) != 2:
        raise BadHeader(f"header must have 2 fields, got {len(header)}", 2)
    (m, _), (k, kcol) = header
    if m < 1:
        raise BadHeader(f"machine count must be >= 1, got {m}", 2, 1)
    if k < 1:
        raise BadHeader(f"list count must be >= 1, got {k}", 2, kcol)

    body = lines[2:]
    if len(body) != k:
        raise ListCountMismatch(f"header declares {k} lists, found {len(body)}", 3 + min(len(body), k))
    lists = []
    for offset, text in enumerate(body):
        line_no = offset + 3
        seq = []
        for value, col in _tokens(text, line_no):
            if value < 1:
                raise NonPositivePtime(f"processing time must be >= 1, got {value}", line_no, col)
            seq.append(value)
        lists.append(seq)
    return build_instance(m, lists)


def serialize_instance(instance: Instance) -> str:
    lines = [MAGIC, f"{instance.m} {instance.k}"]
    lines += [" ".join(map(str, seq)) for seq in instance.lists]
    return "\n".join(lines) + "\n"


def instance_digest(instance: Instance) -> str:
    """SHA-256 of the serialized instance, hex."""
    return hashlib.sha256(serialize_instance(instance).encode("ascii")).hexdigest()


def serialize_schedule(schedule: Schedule) -> str:
    rows = [SCHEDULE_HEADER]
    for a in schedule.assignments:
        j = a.job
        rows.append(f"{j.index_in_list},{j.list_id},{j.index_in_list},{j.ptime},{a.machine},{a.start},{a.finish}")
    return "\n".join(rows) + "\n"


def parse_schedule(document: str, m: int) -> Schedule:
    """Read a schedule CSV back.

    The CSV does not carry loads, so they are recomputed from the rows as
    finish times of the last job per machine; ``m`` fixes the machine count.
    Row contents are not validated against any instance here, see
    :func:`mlsched.metrics.verify_schedule`.
    """
    lines = document.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != SCHEDULE_HEADER:
        raise BadHeader(f"expected header {SCHEDULE_HEADER!r}", 1)
    assignments = []
    loads = [0] * m
    for offset, text in enumerate(lines[1:]):
        line_no = offset + 2
        fields = text.split(",")
        if len(fields) != 7:
            raise BadScheduleRow(f"expected 7 fields, got {len(fields)}", line_no)
        values = []
        col = 1
        for tok in fields:
            if not _INT.match(tok):
                raise NonIntegerToken(f"expected an integer, got {tok!r}", line_no, col)
            values.append(int(tok))
            col += len(tok) + 1
        step, list_id, index, ptime, machine, start, finish = values
        if step != index:
            raise BadScheduleRow(f"step {step} differs from job index {index}", line_no)
        assignments.append(Assignment(Job(list_id, index, ptime), machine, start, finish))
        if 0 <= machine < m:
            loads[machine] = max(loads[machine], finish)
    return Schedule(tuple(assignments), tuple(loads), max(loads) if loads else 0)


def format_ratio(value: Fraction | None) -> str | None:
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


def parse_ratio(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def report_to_dict(report: "EvaluationReport") -> dict[str, Any]:
    """Plain-JSON view of a report, keys in their published order."""
    return {
        "instance": report.digest,
        "m": report.m,
        "k": report.k,
        "n": report.n,
        "makespans": dict(report.makespans),
        "opt": report.opt,
        "opt_reason": report.opt_reason,
        "lower_bound": report.lower_bound,
        "ratios": {name: format_ratio(r) for name, r in report.ratios.items()},
        "checks": {
            name: {"status": c.status, "value": c.value, "bound": c.bound}
            for name, c in report.checks.items()
        },
        "idle": dict(report.idle),
        "sources": [
            {
                "list": row.list_id,
                "jobs": row.jobs,
                "total": row.total,
                "last_finish": row.last_finish,
                "mean_finish": format_ratio(row.mean_finish),
            }
            for row in report.sources.rows
        ],
    }


def serialize_report(report: "EvaluationReport", *, indent: int | None = 2) -> str:
    text = json.dumps(report_to_dict(report), indent=indent, ensure_ascii=True)
    return text + "\n" if indent is not None else text


def parse_report(document: str) -> dict[str, Any]:
    """Load a report document; ratio strings come back as ``Fraction``."""
    data = json.loads(document)
    data["ratios"] = {
        name: None if r is None else parse_ratio(r) for name, r in data["ratios"].items()
    }
    return data
