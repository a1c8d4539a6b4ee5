"""
Instance files, schedule CSVs and reports
=========================================

Round-trip an instance through its text format, write a schedule CSV and
re-check it the way an external tool would.
"""

from mlsched import evaluate, generate, run_ljllm, verify_schedule
from mlsched.trace_io import (
    parse_instance,
    parse_schedule,
    serialize_instance,
    serialize_report,
    serialize_schedule,
)
from mlsched.workloads import GenSpec

instance = generate(GenSpec("uniform", m=3, k=3, n=9, seed=42))
text = serialize_instance(instance)
print(text)
assert parse_instance(text) == instance

##############################################################################
# The CSV lists assignments in decision order. Reading it back and checking
# it against the instance catches any mismatch in start times or loads.

csv = serialize_schedule(run_ljllm(instance))
print(csv)
print(verify_schedule(instance, parse_schedule(csv, instance.m)))

##############################################################################
# The report keeps ratios as exact ``p/q`` strings.

print(serialize_report(evaluate(instance)))
