import csv
import io
import json
import subprocess
import sys

import pytest

from cyclecensus.census import census_table
from cyclecensus.cli import main
from cyclecensus.formats import table_from_csv, table_to_csv


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_table_csv(capsys):
    status, out, _ = run(capsys, "table", "--a", "1", "--n-max", "4")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,count"
    assert "4,2,3" in lines
    assert "\r" not in out


def test_table_json(capsys):
    status, out, _ = run(capsys, "table", "--a", "0", "--n-max", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][3] == ["0", "2", "3", "1"]
    assert list(doc) == ["a", "n_max", "rows"]


def test_big_counts_are_decimal_strings(capsys):
    _, out, _ = run(capsys, "table", "--a", "0", "--n-max", "30")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert int([r for r in rows if r["n"] == "30" and r["k"] == "1"][0]["count"]) == 8841761993739701954543616000000


def test_table_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "table", "--a", "2", "--n-max", "25")
    assert table_to_csv(table_from_csv(out, a=2)) == out
    assert table_from_csv(out, a=2).rows == census_table(2, 25).rows


def test_eval(capsys):
    status, out, _ = run(capsys, "eval", "--a", "1", "--n", "6", "--at", "-1")
    assert status == 0
    assert json.loads(out) == {"n": 6, "a": 1, "at": "-1", "value": "-5"}


def test_eval_rational_point(capsys):
    _, out, _ = run(capsys, "eval", "--a", "1", "--n", "4", "--at", "-3/2")
    # 6(-3/2) + 3(9/4) = -9 + 27/4
    assert json.loads(out)["value"] == "-9/4"


def test_roots_found(capsys):
    status, out, _ = run(capsys, "roots", "--a", "1", "--n", "4", "--t", "2", "--epsilon", "1/100")
    doc = json.loads(out)
    assert status == 0 and doc["found"] is True
    from fractions import Fraction

    assert Fraction(doc["lo"]) < -2 <= Fraction(doc["hi"])
    assert doc["sturm_count"] == 1
    assert Fraction(doc["achieved_radius"]) <= Fraction(1, 100)


def test_roots_absent(capsys):
    _, out, _ = run(capsys, "roots", "--a", "1", "--n", "4", "--t", "1", "--epsilon", "1/10")
    assert json.loads(out) == {"found": False}


def test_balance_csv(capsys):
    status, out, _ = run(capsys, "balance", "--a", "1", "--q", "2", "--n-grid", "4:6:2")
    assert status == 0
    assert out.splitlines() == [
        "n,r,count,ratio,max_deviation",
        "4,0,3,1/3,1/6",
        "4,1,6,2/3,1/6",
        "6,0,130,26/53,1/106",
        "6,1,135,27/53,1/106",
    ]


def test_balance_json(capsys):
    _, out, _ = run(capsys, "balance", "--a", "0", "--q", "3", "--n-grid", "4:4:1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["count"] for r in rows] == ["6", "7", "11"]


def test_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert main(["-o", str(path), "table", "--a", "1", "--n-max", "3"]) == 0
    assert path.read_text().startswith("n,k,count\n")
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--a", "x", "--n-max", "3"],
        ["table", "--n-max", "3"],
        ["balance", "--a", "1", "--q", "2", "--n-grid", "5:1:1"],
        ["roots", "--a", "1", "--n", "4", "--t", "1", "--epsilon", "-1"],
        ["eval", "--a", "1", "--n", "4", "--at", "1/0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_domain_error_exit_2(capsys):
    # D_1 is the zero polynomial, so there is nothing to isolate
    status, _, err = run(capsys, "roots", "--a", "1", "--n", "1", "--t", "1", "--epsilon", "1")
    assert status == 2 and "zero polynomial" in err


def test_resource_cap_exit_3(capsys):
    status, _, err = run(capsys, "table", "--a", "9", "--n-max", "3")
    assert status == 3 and "cap" in err
    status, _, _ = run(capsys, "--max-a", "9", "table", "--a", "9", "--n-max", "3")
    assert status == 0
    status, _, _ = run(capsys, "--max-n", "10", "table", "--a", "0", "--n-max", "11")
    assert status == 3


def test_verify_suite_tables(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "tables")
    assert status == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_failure_exit_1(monkeypatch, capsys):
    from cyclecensus import verify

    monkeypatch.setitem(verify.SUITES, "tables", [("broken", lambda: (False, "forced"))])
    status, out, _ = run(capsys, "verify", "--suite", "tables")
    assert status == 1
    assert "FAIL tables/broken: forced" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclecensus", "eval", "--a", "1", "--n", "5", "--at", "-2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["value"] == "32"
