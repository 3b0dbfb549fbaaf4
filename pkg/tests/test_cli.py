import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from univalent_bounds import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("lam, text", [("0", "7/12 ≈ 0.583333"), ("5", "9/2 ≈ 4.500000"),
                                       ("1", "1/2 ≈ 0.500000"), ("-1/3", "5/6 ≈ 0.833333")])
def test_bound(capsys, lam, text):
    code, out, _ = run(capsys, "bound", "--lambda", lam)
    assert code == 0 and out.startswith(text)


def test_bound_reports_branch(capsys):
    _, out, _ = run(capsys, "bound", "--lambda", "0")
    assert out.strip().endswith("branch (-1/3, 1/6]")


def test_lambda_range_inclusive():
    values = cli.parse_lambda_range("-2:3:0.125")
    assert len(values) == 41
    assert values[0] == -2 and values[-1] == 3
    assert Fraction(-1, 3) not in values and Fraction(1, 6) not in values
    assert Fraction(-1, 3) in cli.parse_lambda_range("-1/3:1/6:1/6")


def test_verify_fekete_pass(capsys):
    code, out, err = run(capsys, "verify", "fekete", "--lambda-range", "-1:1:0.5", "--samples", "20",
                         "--seed", "7", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and len(doc["reports"]) == 5
    assert err.count("[PASS]") == 5


def test_verify_single_report_schema(capsys):
    code, out, _ = run(capsys, "verify", "radius", "--samples", "5", "--grid-radii", "6",
                       "--grid-angles", "32", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    for key in ("schema", "theorem_id", "bound", "empirical_max", "margin", "witness", "grid", "seed",
                "samples", "tail_uncertainty"):
        assert key in doc
    assert doc["theorem_id"] == "radius"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from univalent_bounds import verify

    real = verify.verify_fekete_campaign

    def broken(*a, **k):
        reports = real(*a, **k)
        for r in reports:
            r.empirical_max = r.bound_value + 1.0
        return reports

    monkeypatch.setattr(verify, "verify_fekete_campaign", broken)
    code, _, err = run(capsys, "verify", "fekete", "--lambda", "0", "--samples", "3")
    assert code == 1 and "[FAIL]" in err


def test_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "bieberbach")
    assert code == 2 and "unknown theorem" in err


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "fekete", "--lambda", "0", "--samples", "2",
                       "--out", str(tmp_path / "missing" / "r.json"))
    assert code == 2 and "cannot write" in err


def test_bad_arguments_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bound", "--lambda", "abc"])
    assert exc.value.code == 2


def test_byte_identical_reports(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert cli.main(["verify", "norm", "--samples", "5", "--seed", "3", "--grid-radii", "6",
                         "--grid-angles", "32", "--no-timestamp", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    capsys.readouterr()


def test_timestamp_present_by_default(capsys):
    _, out, _ = run(capsys, "verify", "fekete", "--lambda", "0", "--samples", "2")
    assert "generated_at" in json.loads(out)


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(cli.SEED_ENV, "11")
    _, out, _ = run(capsys, "verify", "fekete", "--lambda", "0", "--samples", "2", "--no-timestamp")
    assert json.loads(out)["seed"] == 11
    monkeypatch.setenv(cli.SEED_ENV, "eleven")
    code, _, _ = run(capsys, "verify", "fekete", "--lambda", "0", "--samples", "2")
    assert code == 2


def test_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "fekete", "--lambda", "1/2", "--samples", "4", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("theorem_id,") and len(lines) == 5


def test_omega_reports_unsupported(capsys):
    code, _, err = run(capsys, "verify", "omega", "--cases", "20", "--seed", "1")
    assert code == 0 and "unsupported=" in err and "mismatches=0" in err


@pytest.mark.parametrize("name, a2, a3", [("f2", "1", "0.5"), ("f3", "0", "0.5")])
def test_extremal(capsys, name, a2, a3):
    code, out, _ = run(capsys, "extremal", name)
    lines = out.splitlines()
    assert code == 0 and lines[0] == f"a2 = {a2}" and lines[1] == f"a3 = {a3}"
    assert json.loads(lines[3])["omega1"]


def test_extremal_case2(capsys):
    code, out, _ = run(capsys, "extremal", "case2", "--lambda", "0")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "a2 = 0.75"
    assert float(lines[1].split("=")[1]) == pytest.approx(7 / 12, abs=1e-12)
    assert float(lines[2].split("=")[1]) == pytest.approx(7 / 12, abs=1e-12)


@pytest.mark.parametrize("argv", [["extremal", "case2"], ["extremal", "case2", "--lambda", "-1/3"],
                                  ["extremal", "case2", "--lambda", "1"]])
def test_extremal_case2_usage(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "univalent_bounds", "bound", "--lambda", "2"],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0 and proc.stdout.startswith("3/2")
