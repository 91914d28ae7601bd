import json
from pathlib import Path

import pytest

from apsquares.cli import (
    ReferenceTableError,
    RunConfig,
    load_reference,
    main,
    run,
)
from apsquares.solver import Solution

REFERENCE = Path(__file__).parent / "data" / "reference_solutions.csv"

EXPECTED_CSV_1_10 = "r,x_abs,y,n\n2,21,11,3\n7,3,5,3\n"


def test_csv_output_exact_bytes(capsys):
    assert main(["--r-min", "1", "--r-max", "10", "--format", "csv"]) == 0
    assert capsys.readouterr().out == EXPECTED_CSV_1_10


def test_json_output(capsys):
    assert main(["--r-min", "1", "--r-max", "10", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows == [
        {"r": 2, "x_abs": 21, "y": 11, "n": 3},
        {"r": 7, "x_abs": 3, "y": 5, "n": 3},
    ]


def test_table_output(capsys):
    assert main(["--r-min", "1", "--r-max", "10"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["r", "x_abs", "y", "n"]
    assert out[1].split() == ["2", "21", "11", "3"]
    assert out[2].split() == ["7", "3", "5", "3"]


def test_empty_range_prints_header_only(capsys):
    assert main(["--r-min", "3", "--r-max", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out == "r,x_abs,y,n\n"


def test_include_composite_flag(capsys):
    code = main(
        ["--r-min", "119", "--r-max", "119", "--format", "csv", "--include-composite"]
    )
    assert code == 0
    assert capsys.readouterr().out == "r,x_abs,y,n\n119,801,125,3\n119,801,5,9\n"


def test_verify_flag(capsys):
    assert main(["--r-min", "1", "--r-max", "10", "--verify"]) == 0
    assert "verified 2 rows" in capsys.readouterr().err


def test_progress_goes_to_stderr(capsys):
    main(["--r-min", "1", "--r-max", "10", "--format", "csv"])
    captured = capsys.readouterr()
    assert "r=2: x=21 y=11 n=3" in captured.err
    assert "r=2" not in captured.out.replace("r,x_abs,y,n", "")


def test_jobs_flag_output_identical(capsys):
    main(["--r-min", "1", "--r-max", "40", "--format", "csv", "--jobs", "1"])
    serial = capsys.readouterr().out
    main(["--r-min", "1", "--r-max", "40", "--format", "csv", "--jobs", "4"])
    assert capsys.readouterr().out == serial


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["--r-min", "5", "--r-max", "1"]) == 1
    assert main(["--r-min", "0", "--r-max", "4"]) == 1
    assert main(["--r-min", "1", "--r-max", "4", "--jobs", "0"]) == 1
    assert main(["--r-min", "1", "--r-max", "4", "--format", "xml"]) == 1
    capsys.readouterr()


def test_missing_reference_exits_1(capsys):
    assert main(["--r-min", "1", "--r-max", "4", "--compare", "/no/such/file.csv"]) == 1
    assert "error" in capsys.readouterr().err


def test_compare_match_exits_0(capsys):
    code = main(
        ["--r-min", "1", "--r-max", "150", "--format", "csv", "--compare", str(REFERENCE)]
    )
    captured = capsys.readouterr()
    assert code == 0
    # rows with r <= 150: r = 2, 7, 11, 70, 79, 92, 119, 133, 146
    assert "9 rows matched" in captured.err


def test_compare_mismatch_exits_2(tmp_path, capsys):
    ref = tmp_path / "ref.csv"
    ref.write_text("r,x_abs,y,n\n2,21,11,3\n")
    code = main(["--r-min", "1", "--r-max", "10", "--format", "csv", "--compare", str(ref)])
    captured = capsys.readouterr()
    assert code == 2
    assert "extra: r=7" in captured.err


def test_compare_detects_missing(tmp_path, capsys):
    ref = tmp_path / "ref.csv"
    # a genuine row (119's composite alias) that a prime-exponent run omits
    ref.write_text("r,x_abs,y,n\n119,801,125,3\n119,801,5,9\n")
    code = main(["--r-min", "119", "--r-max", "119", "--format", "csv", "--compare", str(ref)])
    captured = capsys.readouterr()
    assert code == 2
    assert "missing: r=119 x_abs=801 y=5 n=9" in captured.err


def test_load_reference_reads_table():
    rows = load_reference(REFERENCE)
    assert len(rows) == 86
    assert rows[0] == Solution(2, 21, 11, 3)
    assert Solution(4687, 1277, 5, 11) in rows


def test_load_reference_rejects_bad_files(tmp_path):
    cases = {
        "empty.csv": "",
        "header.csv": "a,b,c,d\n2,21,11,3\n",
        "fields.csv": "r,x_abs,y,n\n2,21,11\n",
        "types.csv": "r,x_abs,y,n\n2,x,11,3\n",
        "arith.csv": "r,x_abs,y,n\n2,21,12,3\n",
    }
    for name, text in cases.items():
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(ReferenceTableError):
            load_reference(path)


def test_run_config_api(capsys):
    # the library-level entry point mirrors the flag surface
    assert run(RunConfig(r_min=1, r_max=10, format="csv")) == 0
    assert capsys.readouterr().out == EXPECTED_CSV_1_10
