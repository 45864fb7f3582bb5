import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from semigap import cli
from semigap.cli import main, render_float, render_rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_info(capsys):
    code, rec, _ = run_json(capsys, "info", "5", "8")
    assert code == 0
    assert rec["schema_version"] == "1" and rec["command"] == "info"
    assert rec["results"] == {
        "frobenius": 27,
        "conductor": 28,
        "genus": 14,
        "gaps": [1, 2, 3, 4, 6, 7, 9, 11, 12, 14, 17, 19, 22, 27],
    }
    _, rec, _ = run_json(capsys, "info", "2", "3")
    assert rec["results"]["gaps"] == [1]


@pytest.mark.parametrize("argv, message", [(("info", "4", "6"), "generators not coprime"), (("info", "1", "6"), ">= 2")])
def test_info_invalid(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert message in err


def test_gsum_all_finite(capsys):
    code, rec, _ = run_json(capsys, "gsum", "3", "4", "-1", "--method", "all")
    assert code == 0
    res = rec["results"]
    assert res["direct"]["exact"] == "17/10"
    assert res["finite"]["exact"] == "17/10"
    assert float(res["discrepancy"]) == 0.0


def test_gsum_zeta(capsys):
    code, rec, _ = run_json(capsys, "gsum", "3", "4", "-2", "--method", "zeta-a")
    assert code == 0
    value = float(rec["results"]["zeta-a"]["value"])
    bound = float(rec["error_bounds"]["zeta-a"])
    assert abs(value - 1.29) <= max(bound, 1e-15)


def test_gsum_nonnegative(capsys):
    _, rec, _ = run_json(capsys, "gsum", "3", "4", "0", "--method", "direct")
    assert rec["results"]["direct"]["exact"] == "3/1"
    _, rec, _ = run_json(capsys, "gsum", "3", "4", "1")
    assert Fraction(rec["results"]["direct"]["exact"]) == 8


def test_gsum_all_zeta_discrepancy(capsys):
    _, rec, _ = run_json(capsys, "gsum", "5", "8", "-3", "--method", "all")
    res = rec["results"]
    assert set(res) == {"direct", "zeta-a", "zeta-b", "discrepancy"}
    assert float(res["discrepancy"]) <= 1e-14


@pytest.mark.parametrize(
    "argv",
    [
        ("gsum", "3", "4", "-2", "--method", "finite"),
        ("gsum", "3", "4", "-1", "--method", "zeta-b"),
        ("gsum", "3", "4", "2", "--method", "zeta-a"),
        ("gsum", "3", "4", "-1", "--method", "bogus"),
    ],
)
def test_gsum_invalid_combinations(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(list(argv))
        raise SystemExit(code)
    assert exc.value.code == 2


def test_verify_both(capsys):
    code, rec, _ = run_json(capsys, "verify", "2", "3", "4", "--kind", "both")
    assert code == 0
    assert [r["kind"] for r in rec["results"]["reports"]] == ["dual", "gaps"]
    assert rec["results"]["passed"] is True


def test_verify_gaps(capsys):
    code, rec, _ = run_json(capsys, "verify", "3", "4", "2", "--kind", "gaps")
    assert code == 0
    (report,) = rec["results"]["reports"]
    assert float(report["residual"]) <= 1e-12


def test_verify_rejects_n1(capsys):
    code, out, err = run(capsys, "verify", "5", "8", "1")
    assert code == 2 and "n must be >= 2" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from semigap.identities import IdentityReport

    def failing(d1, d2, n, tolerance, strict):
        return IdentityReport(d1, d2, n, "dual", 1.0, 2.0, 1.0, 0.0, tolerance, False)

    monkeypatch.setattr(cli, "verify_dual_identity", failing)
    code, out, _ = run(capsys, "verify", "2", "3", "2", "--kind", "dual")
    assert code == 1
    assert json.loads(out)["results"]["passed"] is False


def test_scan_csv(capsys):
    code, out, err = run(capsys, "scan", "--dmax", "10", "--n-min", "2", "--n-max", "4", "--format", "csv")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    # 22 coprime pairs with 2 <= d1 < d2 <= 10, 3 orders, 2 kinds
    assert len(rows) == 132
    assert list(rows[0]) == ["d1", "d2", "n", "kind", "lhs", "rhs", "residual", "budget", "passed"]
    assert all(r["passed"] == "true" for r in rows)
    assert "rows=132 passed=132 failed=0" in err


def test_scan_dmax3(capsys):
    code, rec, _ = run_json(capsys, "scan", "--dmax", "3", "--n-min", "2", "--n-max", "3")
    assert code == 0
    assert {(r["d1"], r["d2"]) for r in rec["results"]["rows"]} == {(2, 3)}
    assert rec["results"]["summary"] == {"rows": 4, "passed": 4, "failed": 0}


@pytest.mark.parametrize("argv", [("--dmax", "2"), ("--n-min", "1"), ("--n-min", "5", "--n-max", "4"), ("--n-max", "65")])
def test_scan_invalid(capsys, argv):
    code, _, err = run(capsys, "scan", *argv)
    assert code == 2 and err


def test_scan_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--dmax", "3", "--n-max", "2", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 2 and "cannot write" in err


def test_scan_out_file(capsys, tmp_path):
    target = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--dmax", "5", "--n-max", "3", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_bytes().startswith(b"d1,d2,n,kind,")


@pytest.mark.parametrize(
    "argv",
    [
        ("info", "5", "8"),
        ("gsum", "5", "8", "-4", "--method", "all"),
        ("verify", "7", "10", "3"),
        ("scan", "--dmax", "6", "--n-max", "3"),
    ],
)
def test_json_round_trip(capsys, argv):
    _, out, _ = run(capsys, *argv)
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_flat_csv_output(capsys):
    code, out, _ = run(capsys, "info", "3", "4", "--format", "csv")
    assert code == 0
    rows = dict(csv.reader(io.StringIO(out)))
    assert rows["results.gaps"] == "1 2 5"
    assert rows["results.frobenius"] == "5"


def test_render_float_round_trips():
    for x in [0.1, 1.29, -3.5e-200, 2.0**-1074, 1e300, 6.02214076e23]:
        s = render_float(x)
        assert float(s) == x
        mantissa = s.split("e")[0].lstrip("-").replace(".", "")
        assert len(mantissa) == 17


def test_render_rational():
    assert render_rational(Fraction(34, 20)) == "17/10"
    assert render_rational(3) == "3/1"
    assert render_rational(Fraction(-2, 4)) == "-1/2"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "semigap", "info", "2", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["gaps"] == [1]
