import csv
import io
import json

import pytest

from src.cli.commands import dispatch
from src.main import main


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bezout_json_with_trace(capsys):
    code, out, _ = run(capsys, "bezout", "2", "3", "--json", "--trace")
    assert code == 0
    doc = json.loads(out)
    assert doc["L1"]["terms"] == [[0, "1/1"], [2, "2/1"]]
    assert doc["L2"]["terms"] == [[1, "-2/1"]]
    assert doc["k_sequence"] == [0, 4, 2]
    assert [s["alpha"] for s in doc["steps"]] == ["A", "B", "A"]


def test_bezout_text(capsys):
    code, out, _ = run(capsys, "bezout", "3", "2")
    assert code == 0
    assert out == "L1 = 2 cosh(2x) + 1\nL2 = -2 cosh(x)\n"


def test_bezout_arrays_only(capsys):
    code, out, _ = run(capsys, "bezout", "2", "3", "--arrays-only")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["k", "L1", "L2"], ["0", "1", "0"], ["1", "0", "-2"], ["2", "2", "0"]]


def test_bezout_both_odd_exit_code(capsys):
    code, out, err = run(capsys, "bezout", "3", "5")
    assert code == 2
    assert out == ""
    assert "torsion" in err


def test_bezout_common_factor_exit_code(capsys):
    code, _, err = run(capsys, "bezout", "4", "6")
    assert code == 3
    assert "rescale" in err


def test_usage_error(capsys):
    code, _, _ = run(capsys, "bezout", "two", "3")
    assert code == 1
    assert run(capsys, "no-such-command")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "12", "17")
    assert code == 0
    doc = json.loads(out)
    assert doc["residual_zero"] and doc["oracle_checked"] and doc["oracle_agrees"]


def test_series_exact_csv(capsys):
    code, out, _ = run(capsys, "series", "2", "3", "--order", "2", "--exact")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["power", "L1_coeff", "L2_coeff"], ["0", "3", "-2"], ["2", "1", "-1/4"], ["4", "1/12", "-1/192"]]


def test_series_normalized_json(capsys):
    code, out, _ = run(capsys, "series", "2", "3", "--order", "1", "--exact", "--normalize", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["normalized"] and doc["mode"] == "exact"
    assert doc["rows"][0] == {"power": 0, "L1_coeff": "1", "L2_coeff": "0"}
    assert doc["rows"][1]["L1_coeff"] == "-5/4"


def test_approx_json(capsys):
    code, out, _ = run(capsys, "approx", "--sqrt", "2", "--count", "2", "--order", "3", "--exact", "--json")
    assert code == 0
    doc = json.loads(out)
    assert [(r["a"], r["b"]) for r in doc["rows"]] == [(2, 3), (12, 17)]
    assert doc["rows"][0]["rows"][0]["L1_coeff"] == "1"
    assert doc["rows"][0]["raw_rows"][0]["L1_coeff"] == "3"


def test_approx_unsupported_target(capsys):
    code, _, err = run(capsys, "approx", "--target", "pi", "--count", "2")
    assert code == 1
    assert "pi" in err


def test_table_csv(capsys, tmp_path):
    path = tmp_path / "table.csv"
    code, _, _ = run(capsys, "table", "--sqrt", "2", "--count", "3", "--csv", str(path))
    assert code == 0
    rows = list(csv.reader(path.open(encoding="utf-8", newline="")))
    assert rows[0] == ["a", "b", "L1_x20"]
    assert [(r[0], r[1]) for r in rows[1:]] == [("2", "3"), ("12", "17"), ("70", "99")]
    assert float(rows[1][2]) == pytest.approx(-2.7327502044e-15, rel=1e-9)


def test_flat_output_check(capsys):
    code, out, _ = run(capsys, "flat-output", "2", "3", "--check", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weights"] == {"1": -2, "3": 2, "5": 1}
    verdicts = {v["pairing"]: v for v in doc["verdicts"]}
    assert verdicts["derived"]["is_flat"]
    assert verdicts["printed"]["touches_heated"] and not verdicts["printed"]["is_flat"]


def test_fold_text(capsys):
    code, out, _ = run(capsys, "fold", "2", "3")
    assert code == 0
    assert out.splitlines() == ["border_1\t+2", "border_3\t-2", "border_5\t-1"]


def test_rank_both_odd(capsys):
    code, out, _ = run(capsys, "rank", "3", "5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 8 and doc["rank"] == 7 and doc["deficiency"] == 1


def test_plan_summary(capsys, tmp_path):
    path = tmp_path / "plan.csv"
    code, out, _ = run(capsys, "plan", "--a", "1", "--q", "4", "--order", "8", "--grid", "51", "--csv", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["q"] == 4 and doc["grid_points"] == 51
    header = next(csv.reader(path.open(encoding="utf-8", newline="")))
    assert header == ["t", "u"] + [f"theta_{i}" for i in range(5)]


def test_plan_unstable_step(capsys):
    code, _, err = run(capsys, "plan", "--a", "1", "--q", "4", "--dt", "0.5")
    assert code == 1
    assert "0.5" in err


def test_main_wraps_dispatch(capsys):
    assert main(["rank", "1", "2"]) == 0
    assert capsys.readouterr().out == "3\n"
