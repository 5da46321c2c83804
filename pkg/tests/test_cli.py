import json
import subprocess
import sys

import pytest

from cdcover import checks
from cdcover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["command"] == argv[0]
    return code, report


@pytest.mark.parametrize(
    "moduli,expected",
    [(["2", "4", "5", "10", "20"], "19/20"), (["7"], "1/7"), (["2", "3"], "2/3")],
)
def test_density_formula(capsys, moduli, expected):
    code, out, _ = run(capsys, "density-formula", *moduli)
    assert (code, out) == (0, expected + "\n")
    code, report = run_json(capsys, "density-formula", *moduli)
    assert report["results"]["density"] == expected


def test_density_formula_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["density-formula", "two"])
    assert info.value.code == 2
    code, _, err = run(capsys, "density-formula", "2", "2")
    assert code == 2 and "distinct" in err


def test_check_cd(capsys):
    code, out, _ = run(capsys, "check-cd", "1:3", "3:9")
    assert code == 0
    assert out.splitlines()[:2] == ["cd: true", "density: 4/9"]
    code, report = run_json(capsys, "check-cd", "0:2", "0:4")
    assert report["results"]["cd"] is False
    assert report["results"]["violation"] == [[0, 2], [0, 4]]
    code, report = run_json(capsys, "check-cd", "0:5", "2:3", "4:9", "6:15", "16:45")
    assert report["results"]["cd"] is True
    assert report["results"]["density"] == "29/45"


@pytest.mark.parametrize("bad", ["1-3", "3:3", "a:5", "1:1"])
def test_check_cd_malformed(capsys, bad):
    code, _, err = run(capsys, "check-cd", bad)
    assert code == 2


def test_check_cd_sieve_cap(capsys):
    code, report = run_json(capsys, "check-cd", "0:7", "0:11", "--sieve-cap", "10")
    assert code == 0 and report["results"]["density"] is None


def test_decide(capsys):
    code, report = run_json(capsys, "decide", "--n", "20")
    assert code == 0 and report["results"]["status"] == "infeasible"
    code, report = run_json(capsys, "decide", "--moduli", "3", "6", "12", "18", "30", "42")
    assert report["results"]["status"] == "infeasible"
    code, out, _ = run(capsys, "decide", "--n", "27")
    assert "status: feasible" in out and "witness: " in out and "nodes: " in out


def test_decide_budget(capsys):
    code, report = run_json(capsys, "decide", "--moduli", "3", "6", "12", "18", "30", "42", "--budget", "10")
    assert code == 3 and report["results"]["status"] == "budget_exceeded"
    with pytest.raises(SystemExit) as info:
        main(["decide", "--n", "20", "--budget", "lots"])
    assert info.value.code == 2


def test_report(capsys):
    code, report = run_json(capsys, "report", "18")
    r = report["results"]
    assert (r["case_tag"], r["bound_kind"], r["bound_value"]) == ("Case1b", "cd_density", "17/18")
    code, report = run_json(capsys, "report", "20")
    r = report["results"]
    assert (r["case_tag"], r["smallest_prime"], r["distinct_primes_of_n_over_p"]) == ("FailsLemma3", 2, 2)
    code, out, _ = run(capsys, "report", "2")
    assert "case: Case1b" in out and "reciprocal_sum = 1/2 < 1" in out


def test_construct(capsys):
    code, report = run_json(capsys, "construct", "9")
    r = report["results"]
    assert code == 0 and r["congruences"] == [[1, 3], [3, 9]] and r["density_simulated"] == "4/9"
    code, report = run_json(capsys, "construct", "45")
    r = report["results"]
    assert r["density_simulated"] == r["density_formula"] == r["density_closed_form"] == "29/45"
    code, out, _ = run(capsys, "construct", "12")
    assert code == 1 and "proven-infeasible" in out
    code, _, err = run(capsys, "construct", "30")
    assert code == 2 and "supported shapes" in err


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--max", "20")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("n=2 lemma3=pass") and "feasible" in lines[0]
    assert any(l.startswith("n=20 lemma3=fail") and "infeasible" in l for l in lines)
    assert "counterexamples: 0" in lines
    code, out, _ = run(capsys, "scan", "--max", "2")
    assert out.splitlines()[0].startswith("n=2 ") and "feasible" in out


def test_scan_jobs_and_min(capsys):
    _, serial, _ = run(capsys, "scan", "--min", "30", "--max", "80")
    _, parallel, _ = run(capsys, "scan", "--min", "30", "--max", "80", "--jobs", "3")
    assert serial == parallel
    assert serial.splitlines()[0].startswith("n=30 ")


def test_scan_budget_exit(capsys):
    code, report = run_json(capsys, "scan", "--max", "30", "--budget", "2")
    assert code == 3 and report["results"]["summary"]["budget_exceeded"] > 0


def test_scan_counterexample_exit(capsys, monkeypatch):
    import cdcover.cli as cli
    from cdcover.search import ScanRow, SearchOutcome, Status

    def fake(n, budget=None, search_failing=True):
        return ScanRow(n, True, 2, 0, SearchOutcome(Status.INFEASIBLE, (n,)))

    monkeypatch.setattr(cli, "scan_one", fake)
    code, out, _ = run(capsys, "scan", "--max", "3")
    assert code == 1 and "CONJECTURE COUNTEREXAMPLE" in out


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert all(l.startswith("PASS") for l in out.splitlines()[:-1])
    code, report = run_json(capsys, "verify-paper")
    assert report["results"]["failed"] == []
    assert len(report["results"]["checks"]) == len(checks.CHECKS)


def test_verify_paper_injected_fault(capsys, monkeypatch):
    monkeypatch.setitem(checks.CHECKS, "injected", lambda: (False, "fault"))
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1 and "FAIL injected: fault" in out
    monkeypatch.setitem(checks.CHECKS, "crashing", lambda: 1 / 0)
    code, report = run_json(capsys, "verify-paper")
    assert set(report["results"]["failed"]) == {"injected", "crashing"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cdcover", "density-formula", "2", "4", "5", "10", "20"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "19/20\n"


def test_output_is_byte_identical(capsys):
    outs = {run(capsys, "report", "45", "--json")[1] for _ in range(3)}
    assert len(outs) == 1
