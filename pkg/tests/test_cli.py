"""CLI: subcommands, exit codes, JSON schema, golden reports."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from divpattern.cli import SCHEMA_VERSION, load_report_schema, main

TESTDATA = Path(__file__).resolve().parent.parent / "testdata"
SCHEMA = load_report_schema()


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


VERIFY_ARGS = ["verify", "--p", "17", "--a", "3", "--b", "6", "--l", "5"]


def test_schema_is_valid_draft7():
    jsonschema.Draft7Validator.check_schema(SCHEMA)
    assert SCHEMA_VERSION == 1


def test_verify_text_output(capsys):
    code, out, _ = run_cli(VERIFY_ARGS + ["--no-timing"], capsys)
    assert code == 0
    assert "class: split_distinct (alpha=2, rho=4, beta=4)" in out
    assert "predicted: ((1,2),(2,1),(4,2))" in out
    assert "match: True" in out
    assert "uncorrected" in out and "((1,2),(2,1),(2,4))" in out


def test_verify_json_validates_and_has_no_private_keys(capsys):
    code, out, _ = run_cli(VERIFY_ARGS + ["--json", "--no-timing"], capsys)
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert "_text" not in data
    assert data["match"] is True
    assert data["schema_version"] == SCHEMA_VERSION


def test_verify_timings_present_by_default(capsys):
    _, out, _ = run_cli(VERIFY_ARGS + ["--json"], capsys)
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert "timings" in data


def test_verify_json_deterministic_with_no_timing(capsys):
    _, first, _ = run_cli(VERIFY_ARGS + ["--json", "--no-timing"], capsys)
    _, second, _ = run_cli(VERIFY_ARGS + ["--json", "--no-timing"], capsys)
    assert first == second


def test_verify_golden_json(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, _, _ = run_cli(
        VERIFY_ARGS + ["--oracle", "--json", "--no-timing", "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    golden = (TESTDATA / "verify_p17_a3_b6_l5.json").read_bytes()
    assert out_file.read_bytes() == golden


def test_verify_golden_text(tmp_path, capsys):
    out_file = tmp_path / "report.txt"
    run_cli(VERIFY_ARGS + ["--no-timing", "--out", str(out_file)], capsys)
    golden = (TESTDATA / "verify_p17_a3_b6_l5.txt").read_bytes()
    assert out_file.read_bytes() == golden


def test_oracle_golden_json(tmp_path, capsys):
    out_file = tmp_path / "oracle.json"
    code, _, _ = run_cli(
        ["oracle", "--p", "17", "--a", "3", "--b", "6", "--l", "5", "--json",
         "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    data = json.loads(out_file.read_text())
    jsonschema.validate(data, SCHEMA)
    assert out_file.read_bytes() == (TESTDATA / "oracle_p17_a3_b6_l5.json").read_bytes()


def test_factor_golden_json(tmp_path, capsys):
    out_file = tmp_path / "factor.json"
    code, _, _ = run_cli(
        ["factor", "--p", "31", "--coeffs", "5,0,1,0,0,0,3,1", "--json",
         "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    data = json.loads(out_file.read_text())
    jsonschema.validate(data, SCHEMA)
    assert out_file.read_bytes() == (TESTDATA / "factor_p31_deg7.json").read_bytes()


def test_scan_golden_json(tmp_path, capsys):
    out_file = tmp_path / "scan.json"
    code, _, _ = run_cli(
        ["scan", "--p-min", "5", "--p-max", "13", "--l-set", "3,5", "--quota", "2",
         "--json", "--no-timing", "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    data = json.loads(out_file.read_text())
    jsonschema.validate(data, SCHEMA)
    assert out_file.read_bytes() == (TESTDATA / "scan_p5_13_l35.json").read_bytes()


def test_factor_reconstruction(capsys):
    code, out, _ = run_cli(
        ["factor", "--p", "31", "--coeffs", "0,0,1", "--json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert data["pattern"] == [[1, 2]]
    assert data["factors"] == [{"coeffs": [0, 1], "multiplicity": 2}]


def test_usage_errors_exit_1(capsys):
    for argv in (
        ["verify", "--p", "15", "--a", "1", "--b", "1", "--l", "5"],   # composite p
        ["verify", "--p", "17", "--a", "1", "--b", "1", "--l", "4"],   # even l
        ["verify", "--p", "17", "--a", "1", "--b", "1", "--l", "17"],  # l = p
        ["verify", "--p", "17", "--a", "0", "--b", "0", "--l", "5"],   # singular
        ["factor", "--p", "31", "--coeffs", "7"],                      # constant
        ["factor", "--p", "31", "--coeffs", "x,y"],                    # junk
    ):
        code, _, err = run_cli(argv, capsys)
        assert code == 1, argv
        assert "error" in err.lower() or err == "", argv


def test_missing_required_flag_exits_nonzero(capsys):
    code, _, _ = run_cli(["verify", "--p", "17", "--a", "3", "--b", "6"], capsys)
    assert code == 1


def test_scan_exit_zero_and_valid_json(capsys):
    code, out, _ = run_cli(
        ["scan", "--p-min", "5", "--p-max", "7", "--l-set", "3", "--json"], capsys
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert data["mismatches"] == []
    assert data["attempted"] > 0


def test_scan_text_reports_missing_classes(capsys):
    code, out, _ = run_cli(
        ["scan", "--p-min", "5", "--p-max", "5", "--l-set", "3"], capsys
    )
    assert code == 0
    # tiny range cannot hit all five classes; absence must be explicit
    assert "classes with no instance in range" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "divpattern.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0


def test_extension_base_field_verify(capsys):
    # verify over GF(5^2): coefficients as comma-separated vectors
    code, out, _ = run_cli(
        ["verify", "--p", "5", "--m", "2", "--a", "1,1", "--b", "0,1", "--l", "3",
         "--json", "--no-timing"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    assert data["instance"]["m"] == 2
    assert data["empirical"]
