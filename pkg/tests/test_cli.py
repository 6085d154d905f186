import json

import pytest
from click.testing import CliRunner

from legendre_hgf.cli import main
from legendre_hgf.survey import CSV_COLUMNS, rows_from_csv


@pytest.fixture
def runner():
    return CliRunner()


def test_count_both_agree(runner):
    result = runner.invoke(main, ["count", "--p", "5", "--lambda", "2"])
    assert result.exit_code == 0
    assert "agree" in result.output
    assert "8" in result.output


def test_count_formula_bad_residue_is_usage_error(runner):
    result = runner.invoke(
        main, ["count", "--p", "7", "--lambda", "3", "--method", "formula"]
    )
    assert result.exit_code == 2
    assert "BadFieldResidue" in result.output


def test_count_singular_curve_is_usage_error(runner):
    result = runner.invoke(main, ["count", "--p", "5", "--lambda", "1"])
    assert result.exit_code == 2
    assert "SingularCurve" in result.output


def test_count_json_mode(runner):
    result = runner.invoke(main, ["count", "--p", "13", "--lambda", "2", "--json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["brute_count"] == body["formula_count"]
    assert body["lambda"] == 2


def test_periods_partial_sums(runner):
    result = runner.invoke(main, ["periods", "--lambda", "1/4", "--terms", "2"])
    assert result.exit_code == 0
    assert "17/16" in result.output
    assert result.output.count("recurrence ok") == 3


def test_periods_at_zero(runner):
    result = runner.invoke(main, ["periods", "--lambda", "0", "--terms", "10", "--json"])
    body = json.loads(result.output)
    assert [row["partial_sum"] for row in body["periods"]] == ["1", "1", "1"]


def test_periods_warns_outside_unit_disk(runner):
    result = runner.invoke(main, ["periods", "--lambda", "2", "--terms", "3"])
    assert result.exit_code == 0
    assert "warning" in result.output


def test_congruence_all_x(runner):
    result = runner.invoke(
        main, ["congruence", "--m", "1", "--d", "2", "--p", "13", "--all-x"]
    )
    assert result.exit_code == 0
    assert "12/12 hold" in result.output


def test_congruence_precondition_exit(runner):
    result = runner.invoke(
        main, ["congruence", "--m", "1", "--d", "4", "--p", "7", "--x", "2"]
    )
    assert result.exit_code == 2


def test_hasse_witt(runner):
    result = runner.invoke(main, ["hasse-witt", "--p", "5", "--lambda", "2"])
    assert result.exit_code == 0
    assert "trace mod p: 3" in result.output
    assert "ok" in result.output


def test_transform(runner):
    result = runner.invoke(
        main,
        ["transform", "--p", "13", "--a", "3", "--b", "9", "--c", "6", "--x", "3"],
    )
    assert result.exit_code == 0
    assert "residual" in result.output


def test_match(runner):
    result = runner.invoke(main, ["match", "--p", "13", "--lambda", "2"])
    assert result.exit_code == 0
    assert "pi_2" in result.output
    assert "holds" in result.output


def test_survey_stdout_csv(runner):
    result = runner.invoke(main, ["survey", "--pmax", "13"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 3 + 11


def test_survey_writes_file_and_round_trips(runner, tmp_path):
    out = tmp_path / "rows.csv"
    result = runner.invoke(main, ["survey", "--pmax", "13", "--out", str(out)])
    assert result.exit_code == 0
    rows = rows_from_csv(out.read_text())
    assert len(rows) == 14
    assert {r.p for r in rows} == {5, 13}


def test_survey_json_format(runner, tmp_path):
    out = tmp_path / "rows.json"
    result = runner.invoke(
        main, ["survey", "--pmax", "5", "--format", "json", "--out", str(out)]
    )
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert [row["lambda"] for row in data] == [2, 3, 4]


def test_survey_pmax_too_small_is_usage_error(runner):
    result = runner.invoke(main, ["survey", "--pmax", "4"])
    assert result.exit_code == 2


def test_survey_fault_hook_exits_one(runner):
    result = runner.invoke(
        main, ["survey", "--pmax", "5"], env={"LEGENDRE_HGF_FAULT": "1"}
    )
    assert result.exit_code == 1
    assert "invariant failure" in result.output


def test_survey_parallel(runner):
    result = runner.invoke(main, ["survey", "--pmax", "17", "--jobs", "2"])
    assert result.exit_code == 0


def test_missing_required_option_is_usage_error(runner):
    result = runner.invoke(main, ["count", "--p", "5"])
    assert result.exit_code == 2
