import csv
import io
import json
import subprocess
import sys

import pytest

from gbcount import cli, survey
from gbcount.polynomial import parse_polynomial


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def data(tmp_path):
    def write(text, name="data.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def basis_set(line, n, p):
    body = line.strip()[1:-1]
    return {parse_polynomial(t, n, p) for t in body.split(", ")}


def test_count_example(capsys, data):
    code, out, _ = run(capsys, "count", "-i", data("2 2\n0 0\n1 1\n"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2"
    P = lambda t: parse_polynomial(t, 2, 2)
    assert {frozenset(basis_set(l, 2, 2)) for l in lines[1:]} == {
        frozenset({P("x1 + x2"), P("x2^2 + x2")}), frozenset({P("x1 + x2"), P("x1^2 + x1")})}
    assert all(l.startswith("{*") for l in lines[1:])


def test_count_empty_set(capsys, data):
    code, out, _ = run(capsys, "count", "-i", data("2 2\n"))
    assert code == 0 and out.splitlines() == ["1", "{*1}"]


def test_count_json_and_output_file(capsys, data, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "count", "-i", data("2 3\n1 0 0\n0 1 0\n0 0 1\n"),
                       "--format", "json", "-o", str(dest))
    assert code == 0 and out == ""
    doc = json.loads(dest.read_text())
    assert doc["count"] == 3 and len(doc["bases"]) == 3
    assert all(all(w > 0 for w in b["weights"]) for b in doc["bases"])


def test_parse_error_exit_1(capsys, data):
    code, _, err = run(capsys, "count", "-i", data("2 2\n0 0\n0 7\n"))
    assert code == 1 and "line 3" in err
    code, _, err = run(capsys, "count", "-i", "/nonexistent/file")
    assert code == 1 and "cannot read" in err


def test_usage_errors_exit_1(capsys):
    assert run(capsys)[0] == 1
    with pytest.raises(SystemExit) as e:
        cli.main(["bound", "-n", "x"])
    assert e.value.code == 1
    assert run(capsys, "bound", "-n", "2", "-m", "9", "-p", "2")[0] == 1
    assert run(capsys, "survey", "-n", "2", "-p", "2", "--m-range", "a:b")[0] == 1


def test_formula(capsys, data):
    code, out, _ = run(capsys, "formula", "-i", data("2 3\n0 0 0\n1 1 0\n"), "--verify")
    assert code == 0 and out.splitlines() == ["formula: 2", "enumeration: 2", "MATCH"]
    code, _, err = run(capsys, "formula", "-i", data("3 2\n0 0\n1 1\n2 0\n"))
    assert code == 1 and "hard to generate" in err


def test_formula_mismatch_exit_3(capsys, data, monkeypatch):
    monkeypatch.setattr(cli, "count_gbs", lambda S: 99)
    code, out, _ = run(capsys, "formula", "-i", data("2 2\n0 0\n1 1\n"), "--verify")
    assert code == 3 and out.splitlines()[-1] == "MISMATCH"


@pytest.mark.parametrize("n,m,p,orig,mod", [(3, 4, 2, 64, 23), (2, 7, 3, 13, 3), (4, 2, 2, 28, 28)])
def test_bound(capsys, n, m, p, orig, mod):
    code, out, _ = run(capsys, "bound", "-n", str(n), "-m", str(m), "-p", str(p))
    assert code == 0 and out == f"original bound: {orig}\nmodified bound: {mod}\n"
    code, out, _ = run(capsys, "bound", "-n", str(n), "-m", str(m), "-p", str(p), "--format", "json")
    assert json.loads(out)["modified_bound"] == mod


def test_survey_csv(capsys):
    code, out, _ = run(capsys, "survey", "-n", "3", "-p", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["m", "actual_max", "original_bound", "modified_bound", "witness"]
    assert [int(r["actual_max"]) for r in rows] == [1, 1, 3, 3, 3, 3, 3, 1, 1]
    assert rows[2]["witness"] == "0 0 0;1 1 1"
    assert rows[0]["witness"] == ""


def test_survey_deterministic_across_jobs(capsys):
    one = run(capsys, "survey", "-n", "3", "-p", "2", "--format", "json")[1]
    two = run(capsys, "survey", "-n", "3", "-p", "2", "--format", "json", "--jobs", "2")[1]
    assert one == two


def test_survey_m_range_and_compare(capsys):
    code, out, err = run(capsys, "survey", "-n", "4", "-p", "2", "--m-range", "2:4", "--compare-paper")
    assert code == 0
    assert [r.split(",")[1] for r in out.splitlines()[1:]] == ["4", "5", "6"]
    assert "discrepancy [table m=4, p=2] m=4 actual_max: published 5, computed 6" in err


def test_survey_budget_exit_2(capsys):
    code, _, err = run(capsys, "survey", "-n", "3", "-p", "3", "--m-range", "10")
    assert code == 2 and "budget" in err


def test_survey_sample(capsys):
    code, out, err = run(capsys, "survey", "-n", "3", "-p", "3", "--m-range", "10",
                         "--sample", "30", "--seed", "4", "--format", "json")
    assert code == 0 and "lower bound" in err
    row = json.loads(out)["rows"][0]
    assert row["exact"] is False and row["subsets"] == 30 and len(row["witness"]) == 10
    assert run(capsys, "survey", "-n", "3", "-p", "3", "--m-range", "10",
               "--sample", "30", "--seed", "4", "--format", "json")[1] == out


def test_survey_invariant_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(survey, "modified_bound", lambda n, m, p: 0)
    code, _, err = run(capsys, "survey", "-n", "2", "-p", "2")
    assert code == 3 and "INVARIANT" in err


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "-p", "2", "-n", "2", "--max-m", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["violation_count"] == 0 and doc["sets_examined"] == 14
    code, out, _ = run(capsys, "conjecture", "-p", "2", "-n", "2", "--max-m", "2", "--format", "text")
    assert "violations: 0" in out


def test_augment(capsys, data):
    code, out, _ = run(capsys, "augment", "-i", data("2 4\n0 0 0 0\n1 1 1 1\n"), "--budget", "5",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["base_count"] == 4 and doc["added_count"] == 3
    code, out, _ = run(capsys, "augment", "-i", data("2 3\n0 0 0\n1 1 1\n"), "--budget", "0")
    assert "not found within 0" in out


def test_models(capsys, data):
    code, out, _ = run(capsys, "models", "-i", data("2 2\n0 0 0 0\n1 1 1 1\n"))
    assert code == 0 and out.splitlines()[0] == "2"
    code, out, _ = run(capsys, "models", "-i", data("2 2\n0 0 1 0\n0 1 0 1\n"), "--format", "json")
    assert json.loads(out)["count"] == 1
    code, _, err = run(capsys, "models", "-i", data("2 2\n0 0 1\n"))
    assert code == 1 and "line 2" in err


def test_backend_flag(capsys):
    code, out, _ = run(capsys, "--backend")
    assert code == 0 and out.strip() in ("cython", "python")


def test_python_backend_subprocess(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("3 2\n1 2\n2 1\n")
    env = {"GBCOUNT_KERNELS": "python", "PATH": "/usr/bin:/bin"}
    res = subprocess.run([sys.executable, "-m", "gbcount.cli", "--backend"], env=env,
                         capture_output=True, text=True)
    assert res.stdout.strip() == "python"
    res = subprocess.run([sys.executable, "-m", "gbcount.cli", "count", "-i", str(path)], env=env,
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "2"
