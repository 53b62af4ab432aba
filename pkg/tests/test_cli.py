import io
import json

import pytest

from arithgeom import classical
from arithgeom.cli import main

CUBIC_TEXT = "p=3\nambient=projective\ndim=2\npoly=y^2*z - x^3 + x*z^2\n"
STATUSES = {"pass", "fail", "skip"}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def rows(text):
    return [line.split("\t") for line in text.splitlines() if not line.startswith("#")]


def check_report(doc):
    """Structural check of the JSON report schema documented in the README."""
    assert set(doc) <= {"status", "exit_code", "checks", "first_failure"}
    assert doc["status"] in ("pass", "fail")
    assert doc["exit_code"] == (1 if doc["status"] == "fail" else 0)
    for c in doc["checks"]:
        assert {"suite", "id", "params", "status", "detail"} <= set(c)
        assert set(c) <= {"suite", "id", "params", "status", "detail", "counterexample", "witness"}
        assert c["status"] in STATUSES and isinstance(c["params"], dict)
        assert ("counterexample" in c) == (c["status"] == "fail")
    failures = [c for c in doc["checks"] if c["status"] == "fail"]
    if failures:
        assert doc["first_failure"] == {"suite": failures[0]["suite"], "id": failures[0]["id"]}
    else:
        assert "first_failure" not in doc


def test_table_examples():
    code, out = run("table", "phi", "--limit", "5")
    assert code == 0
    assert rows(out) == [["n", "value"], ["1", "1"], ["2", "1"], ["3", "2"], ["4", "2"], ["5", "4"]]
    assert rows(run("table", "psi", "--limit", "1")[1])[-1] == ["1", "1"]
    assert rows(run("table", "sigma1", "--limit", "6")[1])[-1] == ["6", "12"]
    code, out = run("table", "phi", "--limit", "3", "--format", "json")
    assert json.loads(out) == [[1, 1], [2, 1], [3, 2]]


def test_table_field():
    code, out = run("table", "zeta", "--field", "-1", "--limit", "5", "--format", "json")
    assert code == 0
    table = json.loads(out)
    assert [r[0] for r in table] == [1, 2, 4, 5, 5]
    assert table[0][1] == "1"


def test_table_errors():
    assert run("table", "tau")[0] == 2
    assert run("table", "phi", "--limit", "0")[0] == 2
    assert run("table", "phi", "--field", "-1", "--limit", "5", "--format", "tsv")[0] == 0


def test_zeta_examples(tmp_path):
    code, out = run("zeta", "--builtin", "P1", "--p", "2", "-D", "4")
    assert code == 0
    table = {r[0]: r[1] for r in rows(out)}
    assert table["Z"] == "1 3 7 15 31" and table["Phi"] == "1 3 12 48 192"
    _, out = run("zeta", "--builtin", "point", "--p", "7", "-D", "3")
    assert {r[0]: r[1] for r in rows(out)}["Z"] == "1 1 1 1"
    spec = tmp_path / "cubic.var"
    spec.write_text(CUBIC_TEXT)
    code, out = run("zeta", str(spec), "-D", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == [4, 16, 28, 64]
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_zeta_errors(tmp_path):
    bad = tmp_path / "bad.var"
    bad.write_text("ambient=projective\ndim=2\npoly=x^2+y\n")
    assert run("zeta", str(bad))[0] == 2
    assert run("zeta")[0] == 2
    assert run("zeta", "--builtin", "P1")[0] == 2
    assert run("zeta", str(tmp_path / "missing.var"))[0] == 2
    assert run("zeta", "--builtin", "P1", "--p", "2", "-D", "40")[0] == 2


def test_parse_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.var"
    bad.write_text("p=3\nambient=projective\ndim=2\npoly=x^2+y\n")
    assert run("zeta", str(bad))[0] == 2
    err = capsys.readouterr().err
    assert "line 4" in err and "monomial y" in err


def test_usage_errors():
    assert run()[0] == 2
    assert run("verify", "nosuch")[0] == 2
    assert run("verify", "classical", "--limit", "0")[0] == 2
    assert run("verify", "quadfield", "--field", "4")[0] == 2
    assert run("verify", "variety", "--builtin", "P1")[0] == 2
    assert run("witt", "--p", "7", "--k", "1")[0] == 2


def test_witt_command():
    code, out = run("witt", "--p", "2", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["coset_count"] == 6 and doc["psi"] == 6 and doc["passed"]


def test_verify_quadfield_json():
    code, out = run("verify", "quadfield", "--field", "-1", "--norm", "100", "--format", "json")
    doc = json.loads(out)
    check_report(doc)
    failed = [c["id"] for c in doc["checks"] if c["status"] == "fail"]
    assert failed == ["SIGMAK_ORACLE"] and code == 1
    assert json.loads(json.dumps(doc)) == doc


def test_verify_global_tsv():
    code, out = run("verify", "global", "--builtin", "P1", "--nmax", "40")
    assert code == 0
    table = rows(out)
    assert table[0] == ["suite", "id", "status", "params", "detail"]
    assert [r[2] for r in table[1:]] == ["pass"] * 5
    assert out.splitlines()[-1] == "# 5 pass, 0 fail, 0 skip"


def test_verify_deterministic():
    a = run("verify", "witt", "--format", "json", "--seed", "3")
    b = run("verify", "witt", "--format", "json", "--seed", "3")
    assert a == b and a[0] == 0
    check_report(json.loads(a[1]))


def test_verify_classical_reports_p1_defect():
    code, out = run("verify", "classical", "--limit", "500", "--format", "json")
    doc = json.loads(out)
    check_report(doc)
    assert code == 1
    assert doc["first_failure"] == {"suite": "classical", "id": "SIGMA_P1_COUNT"}
    bad = next(c for c in doc["checks"] if c["status"] == "fail")
    assert bad["counterexample"]["n"] == 4


def test_broken_mu_is_caught(monkeypatch):
    real = classical.mu
    monkeypatch.setattr(classical, "mu", lambda n: 1 if n == 4 else real(n))
    code, out = run("verify", "all", "--limit", "30", "--norm", "20", "--nmax", "20", "-D", "4",
                    "--format", "json")
    doc = json.loads(out)
    check_report(doc)
    assert code == 1
    assert doc["first_failure"] == {"suite": "classical", "id": "MU_ZETA_DELTA"}
    first = next(c for c in doc["checks"] if c["status"] == "fail")
    assert first["counterexample"]["n"] == 4


@pytest.mark.parametrize("argv", [["verify", "classical", "--limit", "10"], ["table", "mu", "--limit", "10"]])
def test_module_entry_point(argv):
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "arithgeom", *argv], capture_output=True, text=True)
    assert r.returncode in (0, 1) and r.stdout
