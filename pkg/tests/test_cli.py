import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hyperint.cli import main

SI = ["--family", "si", "--beta", "1", "--alpha", "1", "--lambda", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", *SI, "--x", "0")
    assert code == 0 and "value=0 " in out
    code, out, _ = run(capsys, "eval", *SI, "--x", "1")
    assert code == 0 and "value=0.946083 " in out and "regime=series" in out


def test_eval_machine_formats_round_trip(capsys):
    code, out, _ = run(capsys, "eval", *SI, "--x", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["value"] == 0.946083070367183 and rec["regime"] == "series"
    code, out, _ = run(capsys, "eval", *SI, "--x", "-20", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x", "value", "regime", "terms", "tail"]
    assert rows[1][2] == "asymptotic" and rows[1][4] == ""
    assert float(rows[1][0]) == -20.0


def test_eval_scope_error(capsys):
    code, out, err = run(capsys, "eval", "--family", "ci", "--beta", "1", "--alpha", "5",
                         "--lambda", "1", "--x", "1")
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and "alpha exceeds 2*beta+1" in err
    code, _, err = run(capsys, "eval", "--family", "si", "--beta", "1", "--alpha", "3",
                       "--lambda", "1", "--x", "1")
    assert code == 2 and "alpha exceeds beta+1" in err


def test_eval_domain_error(capsys):
    code, _, err = run(capsys, "eval", "--family", "ei", "--beta", "1", "--alpha", "1",
                       "--lambda", "1", "--x", "-2")
    assert code == 2 and err.startswith("error:")


def test_definite(capsys):
    code, out, _ = run(capsys, "definite", "--family", "si", "--beta", "1", "--alpha", "1",
                       "--lambda", "2", "-inf", "+inf", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["a"] == "-inf" and rec["b"] == "+inf"
    assert rec["value"] == pytest.approx(math.pi / 2, rel=1e-12)
    code, out, _ = run(capsys, "definite", *SI, "1", "1")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "definite", "--family", "ei", "--beta", "1", "--alpha", "1",
                       "--lambda", "1", "1", "2")
    assert code == 0 and out.strip() == "3.05912"
    # even integrand: equals Si(10) - Si(1)
    code, out, _ = run(capsys, "definite", *SI, "-1e1", "-1")
    assert code == 0 and out.strip() == "0.712265"


def test_definite_errors(capsys):
    code, _, err = run(capsys, "definite", "--family", "ci", "--beta", "1", "--alpha", "1",
                       "--lambda", "1", "-1", "1")
    assert code == 2 and "x=0" in err
    code, _, err = run(capsys, "definite", "--family", "shi", "--beta", "1", "--alpha", "1",
                       "--lambda", "1", "0", "+inf")
    assert code == 2 and "diverges" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "nope"])
    assert exc.value.code == 2


def test_table(tmp_path, capsys):
    path = tmp_path / "g.csv"
    argv = ["table", *SI, "--x-min", "-1", "--x-max", "1", "--steps", "2", "--out", str(path)]
    assert main(argv) == 0
    first = path.read_bytes()
    assert main(argv) == 0
    assert path.read_bytes() == first
    assert b"\r" not in first
    rows = list(csv.reader(io.StringIO(first.decode())))
    assert rows[0] == ["x", "value", "regime", "terms", "tail"] and len(rows) == 3
    code, out, _ = run(capsys, "table", *SI, "--x-min", "0", "--x-max", "1", "--steps", "3",
                       "--format", "json")
    data = json.loads(out)
    assert [r["x"] for r in data] == [0.0, 0.5, 1.0]


def test_table_errors(tmp_path, capsys):
    code, _, err = run(capsys, "table", *SI, "--x-min", "1", "--x-max", "0", "--steps", "3")
    assert code == 2
    code, _, err = run(capsys, "table", *SI, "--x-min", "0", "--x-max", "1", "--steps", "1")
    assert code == 2
    bad = tmp_path / "missing" / "g.csv"
    code, _, err = run(capsys, "table", *SI, "--x-min", "0", "--x-max", "1", "--steps", "2",
                       "--out", str(bad))
    assert code == 2 and str(bad) in err


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "primes")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5 and all(l.startswith("PASS") for l in lines[:4])
    assert "pi=1229" in out and "pi=78498" in out
    code, out, _ = run(capsys, "check", "ftc", "--cases", "0")
    assert code == 0 and "0/0 passed" in out
    code, out, _ = run(capsys, "check", "identities", "--cases", "5")
    assert code == 0 and "20/20 passed" in out


def test_check_is_deterministic(capsys):
    _, first, _ = run(capsys, "check", "oracle", "--cases", "3")
    _, second, _ = run(capsys, "check", "oracle", "--cases", "3")
    assert first == second


def test_check_failure_exit_code(capsys, monkeypatch):
    from hyperint import checks

    monkeypatch.setitem(checks.SUITES, "primes",
                        lambda: checks.SuiteReport("primes", (checks.CaseResult("primes", False, "forced"),)))
    code, out, _ = run(capsys, "check", "primes")
    assert code == 1 and out.startswith("FAIL")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperint", "eval", *SI, "--x", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "0.946083" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "hyperint", "eval", "--family", "ci", "--beta", "1",
                           "--alpha", "5", "--lambda", "1", "--x", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "Traceback" not in proc.stderr
