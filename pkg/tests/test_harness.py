import json
from fractions import Fraction

import pytest

from mlsched import harness
from mlsched.algorithms import MachineState
from mlsched.harness import FAIL, NA, PASS, evaluate, load_config, sweep, sweep_groups, write_sweep
from mlsched.model import Schedule, build_instance
from mlsched.oracle import lpt_bound
from mlsched.workloads import GenSpec, generate, ls_adversarial


def test_figure2_all_pass(fig2):
    report = evaluate(fig2)
    assert report.passed
    t1 = report.checks["theorem1"]
    assert (t1.status, t1.value, t1.bound) == (PASS, "1/1", "3/2")
    assert report.checks["eq4"].status == PASS
    assert report.checks["lemma14"].status == NA
    assert report.checks["degeneracy"].status == NA


def test_single_machine_is_exact():
    report = evaluate(build_instance(1, [[3, 4], [5]]))
    assert report.ratios["ljllm"] == 1
    assert report.checks["lemma15"].status == PASS
    assert report.checks["degeneracy"].status == NA


def test_single_batch_lpt_bound():
    inst = generate(GenSpec("single_batch", m=3, n=8, seed=5))
    report = evaluate(inst)
    check = report.checks["lemma14"]
    assert check.bound == "11/9" == str(lpt_bound(3))
    assert check.status == PASS
    assert report.checks["degeneracy"].status == PASS
    assert report.makespans["ljllm"] == report.makespans["lpt"]


def test_single_list_degeneracy():
    report = evaluate(generate(GenSpec("uniform", m=3, k=1, n=9, seed=3)))
    assert report.checks["degeneracy"].status == PASS
    assert report.makespans["ljllm"] == report.makespans["ls"]


def test_without_oracle():
    report = evaluate(ls_adversarial(3), with_oracle=False)
    assert report.opt is None
    assert report.opt_reason == "OracleDisabled"
    for name in ("theorem1", "lemma14", "lemma15"):
        assert report.checks[name].status == NA
    assert report.checks["eq4"].status == PASS


def test_node_limit_reason():
    report = evaluate(build_instance(2, [[3, 3, 2, 2, 2]]), node_limit=1)
    assert (report.opt, report.opt_reason) == (None, "NodeLimitExceeded")


def _stack_everything(instance):
    # places every job on machine 0; valid as a schedule, terrible as a ratio
    state = MachineState(instance.m)
    placed = tuple(state.assign(job, 0) for job in instance.jobs)
    return Schedule(placed, tuple(state.loads), max(state.loads))


def test_checks_catch_a_bad_algorithm(monkeypatch):
    monkeypatch.setitem(harness.ALGORITHMS, "ljllm", _stack_everything)
    report = evaluate(build_instance(3, [[2, 2], [2, 2], [2, 2]]))
    assert report.checks["theorem1"].status == FAIL
    assert report.checks["eq4"].status == FAIL
    assert not report.passed
    result = sweep([GenSpec("uniform", m=3, k=2, n=6)], 3)
    assert result.summary["verdict"] == FAIL
    assert result.summary["checks"]["theorem1"][FAIL] == 3


def test_sweep_summary_and_determinism():
    specs = [GenSpec("uniform", m=m, k=2) for m in (2, 3)]
    a = sweep(specs, 20)
    b = sweep(specs, 20, jobs=2)
    assert a.summary == b.summary
    assert [r.digest for r in a.reports] == sorted(r.digest for r in a.reports)
    assert a.reports == b.reports
    assert a.summary["instances"] == 40
    assert a.summary["verdict"] == PASS
    assert a.summary["checks"]["theorem1"][FAIL] == 0
    assert {(row["family"], row["m"]) for row in a.summary["worst"]} == {("uniform", 2), ("uniform", 3)}


def test_ls_adversarial_worst_ratios():
    result = sweep([GenSpec("ls_adversarial", m=m) for m in (2, 3, 4)], 1)
    worst = {row["m"]: row for row in result.summary["worst"]}
    for m in (2, 3, 4):
        assert Fraction(worst[m]["ls"]) == Fraction(2 * m - 1, m)


def test_unit_family_worst_below_two():
    result = sweep([GenSpec("unit", m=3, k=2)], 30)
    for row in result.summary["worst"]:
        assert Fraction(row["ljllm"]) <= 2


def test_write_and_reload(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "seeds": 5,
        "specs": [{"family": "uniform", "m": 2, "k": 2}, {"family": "unit", "m": 3, "k": 3, "seeds": 2}],
    }))
    config = load_config(cfg)
    assert [s for _, s in config["groups"]] == [5, 2]
    result = sweep_groups(config["groups"])
    out = write_sweep(result, tmp_path / "out")
    first = (out / "reports.jsonl").read_bytes()
    assert len(first.splitlines()) == 7
    write_sweep(sweep_groups(config["groups"], jobs=2), tmp_path / "again")
    assert (tmp_path / "again" / "reports.jsonl").read_bytes() == first
    assert (tmp_path / "again" / "summary.json").read_bytes() == (out / "summary.json").read_bytes()


def test_empty_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"specs": []}')
    with pytest.raises(ValueError):
        load_config(cfg)
