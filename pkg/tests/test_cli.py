import io
import json
import subprocess
import sys

import pytest

from subpowers import oeis
from subpowers.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(oeis.CACHE_ENV, str(tmp_path / "cache"))


def test_table_markdown_layout():
    code, text = run("table", "--max-m", "8", "--format", "markdown")
    lines = text.splitlines()
    assert code == 0
    assert len(lines) == 2 + 9
    assert lines[-1] == "| 8 | 0 | 1 | 254 | 5796 | 40824 | 126000 | 191520 | 141120 | 40320 |"
    assert lines[3] == "| 1 | 0 | 1 |  |  |  |  |  |  |  |"


def test_table_single_cell():
    code, text = run("table", "--max-m", "0")
    assert code == 0
    assert text == "0\n1\n"


def test_table_json_rows_are_strings():
    code, text = run("table", "--max-m", "5", "--format", "json")
    rows = json.loads(text)["rows"]
    assert [[int(v) for v in r] for r in rows] == [
        [1], [0, 1], [0, 1, 2], [0, 1, 6, 6], [0, 1, 14, 36, 24], [0, 1, 30, 150, 240, 120]
    ]
    assert all(isinstance(v, str) for r in rows for v in r)


def test_table_csv_omits_upper_triangle():
    code, text = run("table", "--max-m", "3")
    assert text.splitlines() == ["0,1,2,3", "1", "0,1", "0,1,2", "0,1,6,6"]


def test_table_requires_max_m():
    assert run("table")[0] == 2


def test_check_core_passes():
    code, text = run("check", "--suite", "core")
    assert code == 0
    assert text.startswith("[PASS] core:")
    assert "0 failures" in text.splitlines()[-1]


def test_check_analytic_relaxed_tolerance_reports_discrepancy():
    code, text = run("check", "--suite", "analytic", "--tol", "1e-6")
    assert code == 0
    assert "575/216" in text and "576/216" in text
    assert "NOTE" in text


def test_check_failure_exits_one(monkeypatch):
    from subpowers import checks

    def broken(bounds):
        r = checks.SuiteResult()
        r.equal("forced", 1, 2, "x=0")
        return r

    monkeypatch.setitem(checks.RUNNERS, "core", broken)
    code, text = run("check", "--suite", "core")
    assert code == 1
    assert "FAIL forced (x=0)" in text


def test_check_unknown_suite_is_usage_error():
    assert run("check", "--suite", "nope")[0] == 2


def test_fermat_ten():
    code, text = run("fermat", "--max-m", "10")
    assert code == 0
    assert text.splitlines()[-1] == "solutions only at m in {2, 5, 7}"
    assert "m=7: (4,4,5)" in text


def test_fermat_two():
    code, text = run("fermat", "--max-m", "2")
    assert text.splitlines() == ["m=1: none", "m=2: (1,1,2)", "solutions only at m in {2}"]


def test_fermat_forty():
    code, text = run("fermat", "--max-m", "40")
    assert code == 0
    assert text.splitlines()[-1] == "solutions only at m in {2, 5, 7}"
    assert sum(1 for line in text.splitlines() if line.endswith(": none")) == 37


def test_fermat_zero_is_usage_error():
    assert run("fermat", "--max-m", "0")[0] == 2


def test_plot_data_grid():
    code, text = run("plot-data", "--n-max", "5", "--z-min", "0", "--z-max", "5", "--step", "0.1")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "z,n1,n2,n3,n4,n5"
    assert len(lines) == 1 + 51
    rows = [line.split(",") for line in lines[1:]]
    assert all(len(r) == 6 for r in rows)
    assert all(r[1] == "1.0" for r in rows)
    assert rows[-1][0] == "5.0" and float(rows[-1][5]) == 120.0
    assert rows[3][0] == "0.3"


@pytest.mark.parametrize(
    "argv",
    [
        ("plot-data", "--z-min", "3", "--z-max", "1"),
        ("plot-data", "--step", "0"),
        ("plot-data", "--step", "-1"),
    ],
)
def test_plot_data_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_plot_data_json():
    code, text = run("plot-data", "--n-max", "2", "--z-min", "3", "--z-max", "3", "--step", "1", "--format", "json")
    assert json.loads(text) == {"samples": [{"n": 1, "z": 3.0, "value": 1.0}, {"n": 2, "z": 3.0, "value": 6.0}]}


def test_oeis_triangle_and_fubini():
    code, text = run("oeis", "A131689", "--against", "triangle")
    assert code == 0 and "matched 91" in text
    code, text = run("oeis", "A000670", "--against", "fubini")
    assert code == 0 and "matched 13" in text


def test_oeis_malformed_a_number():
    assert run("oeis", "670", "--against", "fubini")[0] == 2


def test_oeis_missing_snapshot_is_io_error():
    code, text = run("oeis", "A999999", "--against", "fubini")
    assert code == 3
    assert "--fetch" in text


def test_oeis_mismatch_exits_one(tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    cache.mkdir(exist_ok=True)
    (cache / "b000670.txt").write_text("0 1\n1 1\n2 3\n3 14\n")
    code, text = run("oeis", "A000670", "--against", "fubini")
    assert code == 1
    assert "first mismatch at index 3: b-file 14, computed 13" in text


def test_family_subcommands():
    assert run("sum-powers", "--m", "5", "--n", "2")[1] == "33\n"
    assert run("sum-powers", "--m", "1", "--n", "100", "--method", "bernoulli")[1] == "5050\n"
    code, text = run("bernoulli", "--upto", "12")
    lines = text.splitlines()
    assert lines[0] == "m,B_m" and lines[2] == "1,1/2" and lines[-1] == "12,-691/2730"
    code, text = run("fubini", "--max-m", "8", "--method", "recurrence")
    assert text.splitlines()[-1] == "8,545835"


def test_seq_subcommand():
    assert run("seq", "--name", "subfactorial", "--count", "5")[1] == "index,value\n0,1\n1,0\n2,1\n3,2\n4,9\n"
    assert run("seq", "--name", "harmonic", "--count", "3")[1].splitlines()[-1] == "2,3/2"
    code, text = run("seq", "--name", "triangle", "--count", "10", "--format", "json")
    assert [int(v) for _, v in json.loads(text)["rows"]] == [1, 0, 1, 0, 1, 2, 0, 1, 6, 6]
    assert run("seq", "--name", "subpower-row", "--count", "9")[0] == 2
    assert run("seq", "--name", "subpower-column", "--n", "3", "--count", "6")[1].splitlines()[-1] == "5,150"


def test_long_flags_only():
    assert run("table", "-m", "3")[0] == 2


def test_output_is_deterministic():
    for argv in (("table", "--max-m", "12", "--format", "markdown"), ("plot-data",), ("bernoulli", "--upto", "20")):
        assert run(*argv) == run(*argv)


def test_console_entry_point(tmp_path):
    env_cmd = [sys.executable, "-m", "subpowers", "table", "--max-m", "2", "--format", "json"]
    proc = subprocess.run(env_cmd, capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"rows": [["1"], ["0", "1"], ["0", "1", "2"]]}
    proc = subprocess.run([sys.executable, "-m", "subpowers", "oeis", "670", "--against", "fubini"], capture_output=True, text=True)
    assert proc.returncode == 2
