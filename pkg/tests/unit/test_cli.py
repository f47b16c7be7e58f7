"""
Unit tests for the command line
"""

import csv
import io
import json

import pytest

from rootboard.cli import CommandConfig, ExitCode, OutputFormat, Subcommand, main, run

pytestmark = pytest.mark.unit


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


class TestIsqrt:
    def test_manuscript_number(self, capsys):
        code, out, _ = invoke(capsys, "isqrt", "54756")
        assert code == ExitCode.OK
        assert out == "root=234 remainder=0"

    def test_zero(self, capsys):
        assert invoke(capsys, "isqrt", "0")[1] == "root=0 remainder=0"

    def test_shortcut(self, capsys):
        code, out, _ = invoke(capsys, "isqrt", "5290000", "--shortcut")
        assert out == "root=2300 remainder=0 shortcut_zeros=2"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "isqrt", "5000000", "--format", "json")
        payload = json.loads(out)
        assert payload["root"] == "2236"
        assert payload["remainder"] == "304"

    @pytest.mark.parametrize("text", ["007", "-4", "12.5", "abc"])
    def test_malformed_number(self, capsys, text):
        code, out, err = invoke(capsys, "isqrt", text)
        assert code == ExitCode.USAGE
        assert out == ""
        assert "error:" in err

    def test_csv_not_available(self, capsys):
        code, _, err = invoke(capsys, "isqrt", "49", "--format", "csv")
        assert code == ExitCode.USAGE
        assert "CSV" in err


def test_unknown_subcommand_is_a_usage_error(capsys):
    code, _, err = invoke(capsys, "cube", "8")
    assert code == ExitCode.USAGE
    assert "error:" in err


class TestTrace:
    def test_board_sequence_ends_with_403(self, capsys):
        code, out, _ = invoke(capsys, "trace", "41209", "--format", "text")
        assert code == ExitCode.OK
        assert out.endswith("4 0 3")
        assert out.count("step ") == 3

    def test_paper_layout(self, capsys):
        code, out, _ = invoke(capsys, "trace", "54756", "--paper-layout")
        lines = out.splitlines()
        assert lines[0] == "5 4 7 5 6"
        assert lines[-2] == "0 0 0 0 0"
        assert lines[-1].endswith("4 6 4")

    def test_csv_rows(self, capsys):
        code, out, _ = invoke(capsys, "trace", "54756", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["residual"] for row in rows] == ["14756", "1856", "0"]
        assert [row["work_row"] for row in rows] == ["4", "46", "464"]

    def test_json_halved_root(self, capsys):
        _, out, _ = invoke(capsys, "trace", "5290000", "--shortcut", "--format", "json")
        payload = json.loads(out)
        assert payload["halved_root"] == "2300"
        assert payload["zero_shortcut_used"] is True


class TestApprox:
    def test_auto_selects_khwarizmi_for_ten(self, capsys):
        _, out, _ = invoke(capsys, "approx", "10", "--format", "json")
        payload = json.loads(out)
        assert payload["rule"] == "khwarizmi"
        assert payload["value"] == "19/6"
        assert payload["selected_by"] == "criterion"

    def test_explicit_conventional(self, capsys):
        _, out, _ = invoke(capsys, "approx", "155", "--rule", "conventional")
        assert "12 + 11/25" in out

    def test_khwarizmi_on_zero(self, capsys):
        code, _, err = invoke(capsys, "approx", "0", "--rule", "khwarizmi")
        assert code == ExitCode.PRECONDITION
        assert "error:" in err


def test_compare_two(capsys):
    _, out, _ = invoke(capsys, "compare", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["khwarizmi"]["square"] == "9/4"
    assert payload["conventional"]["square"] == "16/9"
    assert payload["measured_winner"] == "conventional"
    assert payload["agree"] is True


def test_scale(capsys):
    _, out, _ = invoke(capsys, "scale", "2", "--base", "3", "--pairs", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["scaled_root"] == "12"
    assert payload["scaled_remainder"] == "18"
    assert payload["value"] == "4/3"


class TestSexagesimal:
    def test_root_five(self, capsys):
        code, out, _ = invoke(capsys, "sexagesimal", "5", "--places", "3")
        assert code == ExitCode.OK
        assert out == "2;14,9,36"

    def test_chain(self, capsys):
        _, out, _ = invoke(capsys, "sexagesimal", "5", "--places", "3", "--show-chain")
        assert "236 x 60 = 14160" in out
        assert "160 x 60 = 9600" in out
        assert "600 x 60 = 36000" in out
        assert out.splitlines()[-1] == "2;14,9,36"


class TestVerify:
    def test_consistent_claim(self, capsys):
        code, out, _ = invoke(capsys, "verify", "249", "--root", "15", "--remainder", "24")
        assert code == ExitCode.OK
        assert "a=6 b=0 c=6" in out

    def test_refuted_claim(self, capsys):
        code, out, _ = invoke(capsys, "verify", "249", "--root", "16", "--remainder", "24")
        assert code == ExitCode.REFUTED
        assert "ne correspond pas" in out

    def test_screening_without_root(self, capsys):
        code, out, _ = invoke(capsys, "verify", "1000", "--format", "json")
        assert code == ExitCode.OK
        assert json.loads(out)["possible"] is True

    @pytest.mark.parametrize("n", ["0", "1", "54756", "41209", "5290000", "249", "5000000", "99999999999"])
    def test_isqrt_output_feeds_verify(self, capsys, n):
        _, out, _ = invoke(capsys, "isqrt", n, "--format", "json")
        payload = json.loads(out)
        code, _, _ = invoke(capsys, "verify", n, "--root", payload["root"], "--remainder", payload["remainder"])
        assert code == ExitCode.OK


class TestNewton:
    def test_csv_iterates(self, capsys):
        _, out, _ = invoke(capsys, "newton", "2", "--u0", "1", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["value"] for row in rows[:4]] == ["1", "3/2", "17/12", "577/408"]

    def test_compare(self, capsys):
        _, out, _ = invoke(capsys, "newton", "5", "--compare", "3", "--steps", "4", "--format", "json")
        payload = json.loads(out)
        assert payload["takht_value"] == "2.236"
        assert payload["takht_distance"] == "19/62500"

    def test_step_cap(self, capsys):
        code, _, _ = invoke(capsys, "newton", "2", "--max-steps", "999")
        assert code == ExitCode.PRECONDITION

    def test_compare_step_cap(self, capsys):
        code, out, err = invoke(capsys, "newton", "2", "--compare", "3", "--steps", "40")
        assert code == ExitCode.PRECONDITION
        assert out == ""
        assert "error:" in err

    def test_bad_tolerance(self, capsys):
        code, _, _ = invoke(capsys, "newton", "2", "--tolerance", "0.5")
        assert code == ExitCode.USAGE


class TestSweep:
    def test_criterion_csv(self, capsys):
        code, out, _ = invoke(capsys, "sweep", "--kind", "criterion", "--start", "2", "--stop", "50")
        assert code == ExitCode.OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 49 - 6
        assert all(row["agree"] == "True" for row in rows)

    def test_newton_csv(self, capsys):
        _, out, _ = invoke(capsys, "sweep", "--start", "2", "--stop", "5", "--places", "4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 8
        assert rows[0]["a"] == "2"

    def test_inverted_bounds(self, capsys):
        code, _, _ = invoke(capsys, "sweep", "--start", "9", "--stop", "3")
        assert code == ExitCode.USAGE

    def test_newton_steps_above_cap(self, capsys):
        code, _, _ = invoke(capsys, "sweep", "--start", "2", "--stop", "3", "--steps", "40")
        assert code == ExitCode.PRECONDITION


def test_text_and_json_carry_the_same_numbers():
    text = run(CommandConfig(subcommand=Subcommand.ISQRT, input="249"))
    data = run(CommandConfig(subcommand=Subcommand.ISQRT, input="249", output_format=OutputFormat.JSON))
    payload = json.loads(data.output)
    assert text.output == f"root={payload['root']} remainder={payload['remainder']}"


def test_run_without_input():
    result = run(CommandConfig(subcommand=Subcommand.ISQRT))
    assert result.exit_code == ExitCode.USAGE
    assert result.error
