import csv
import io
import json
import subprocess
import sys

import pytest

from interlace_lab.cli import _join_negative_values, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_zeros_table1_row():
    code, out = run("zeros", "--n", "8", "--alpha", "1", "--digits", "3")
    assert code == 0
    assert out.splitlines()[0] == "0.409 1.38 2.96 5.18 8.16 12.1 17.2 24.6"
    assert "residual_bound" in out


def test_zeros_trivial():
    code, out = run("zeros", "--n", "1", "--alpha", "0")
    assert code == 0 and out.splitlines()[0] == "1.00000000000000"


def test_zeros_table6_row():
    _, out = run("zeros", "--n", "5", "--alpha", "144", "--digits", "6")
    assert out.splitlines()[0] == "115.547 131.765 147.665 164.792 185.231"


def test_zeros_negative_alpha_and_json():
    code, out = run("zeros", "--n", "7", "--alpha", "-0.5", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["polynomial"] == "L_7^(-0.5)" and len(d["zeros"]) == 7


@pytest.mark.parametrize("argv", [
    ["zeros", "--n", "0", "--alpha", "1"],
    ["zeros", "--n", "3", "--alpha", "-1"],
    ["zeros", "--n", "3", "--alpha", "1", "--digits", "2"],
    ["zeros", "--n", "3", "--alpha", "1", "--digits", "16"],
    ["zeros", "--n", "3"],
    ["table", "T9"],
    ["verify", "--theorem", "T2_1", "--n", "0..1", "--alpha", "0"],
    ["verify", "--theorem", "T2_1", "--n", "2", "--alpha", "-1.5"],
    ["bogus"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_table_t1():
    code, out = run("table", "T1")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("| L_")]
    assert len(lines) == 20
    row = next(l for l in lines if l.startswith("| L_8^(12) "))
    assert "[5.11] | [8.07]" in row


def test_table_t4_and_t7():
    _, out = run("table", "t4")
    assert "| L_8^(102) | 70.0175 | 81.022 |" in out
    _, out = run("table", "T7", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["value"] for r in rows if r["boxed"] == "true"] == ["79.455", "92.849"]


def test_verify_pass_and_skip_listing():
    code, out = run("verify", "--theorem", "T4_1", "--n", "2..3", "--alpha", "-0.9,0..3", "--jobs", "1")
    assert code == 0
    assert "FAIL 0" in out
    assert "Skipped: T4_1 n=2 alpha=2.0: common zeros" in out


def test_verify_failure_exit(monkeypatch):
    import interlace_lab.analysis as an

    real = an.critical_points

    def wrong(t, p):
        c = real(t, p)
        return an.CriticalPointSet(c.theorem, c.param, (c.points[0] + 30.0,), False, ())

    monkeypatch.setattr(an, "critical_points", wrong)
    code, out = run("verify", "--theorem", "T2_1", "--n", "7", "--alpha", "0", "--jobs", "1")
    assert code == 1
    assert "FAIL: T2_1 n=7 alpha=0.0" in out


def test_verify_json():
    code, out = run("verify", "--theorem", "T2_2", "--n", "5", "--alpha", "43", "--format", "json")
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["outcome"] == "PASS" and rec["observed"] == "Full"


def test_figure():
    _, out = run("figure", "F2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert any(r["role"] == "critical" and float(r["re"]) == 44.0 for r in rows)
    _, out = run("figure", "F3")
    assert out.startswith("F3: status PartialWithGap")


def test_identities_command():
    code, out = run("identities", "--samples", "20")
    assert code == 0
    assert out.count("PASS") == 18


def test_common_zeros():
    code, out = run("common-zeros", "--n", "2", "1", "--alpha", "2", "5")
    assert code == 0 and "6.0" in out
    code, out = run("common-zeros", "--n", "7", "8", "--alpha", "0", "1")
    assert "no common zeros" in out
    code, out = run("common-zeros", "--n", "2", "1", "--alpha", "-0.5", "-0.5", "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_threshold():
    code, out = run("threshold", "--n", "2..3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["n"] for r in rows] == ["2", "3"]


def test_precision_flag_restores_env(monkeypatch):
    import os

    monkeypatch.delenv("INTERLACE_LAB_PRECISION", raising=False)
    code, _ = run("table", "T6", "--precision", "double")
    assert code == 0 and "INTERLACE_LAB_PRECISION" not in os.environ


def test_argv_rewrite():
    assert _join_negative_values(["--alpha", "-0.9,0"]) == ["--alpha=-0.9,0"]
    assert _join_negative_values(["--alpha", "-0.5..1"]) == ["--alpha=-0.5..1"]
    assert _join_negative_values(["--alpha", "-0.5", "-0.5"]) == ["--alpha", "-0.5", "-0.5"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "interlace_lab", "zeros", "--n", "2", "--alpha", "0",
                        "--digits", "5"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("0.58579 3.4142")
