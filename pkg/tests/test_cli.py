"""Tests for the command-line interface."""

import json
from dataclasses import replace

import pytest
from click.testing import CliRunner

from stirlingb.cli import EXIT_FAILURE, EXIT_USAGE, main
from stirlingb.core.guards import get_guards, set_guards
from stirlingb.verify import identities
from stirlingb.verify.identities import WORKED_PERMUTATION
from stirlingb.verify.models import Counterexample


@pytest.fixture(autouse=True)
def restore_guards():
    # The CLI installs process-wide guards from the config it loads.
    previous = get_guards()
    yield
    set_guards(previous)


def _json_lines(output: str) -> list[dict]:
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


class TestTableCommand:
    """Tests for the table command."""

    def test_csv(self):
        """Test the second-kind triangle as CSV."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["table", "S", "--max-n", "2", "--format", "csv"])
        assert result.exit_code == 0
        assert "2,1,2 + q + q^2" in result.output.splitlines()

    def test_json(self):
        """Test the first-kind triangle as JSON lines."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["table", "s", "--max-n", "2"])
        assert result.exit_code == 0
        rows = _json_lines(result.output)
        assert rows[-1] == {
            "n": 2,
            "row": [{"coeffs": [2, 1]}, {"coeffs": [3, 1]}, {"coeffs": [1]}],
        }

    def test_r_variant(self):
        """Test a q,r-variant table."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["table", "s", "--max-n", "2", "--r", "1"])
        assert result.exit_code == 0
        assert _json_lines(result.output)[-1] == {
            "n": 2,
            "row": [{"coeffs": []}, {"coeffs": [2, 1]}, {"coeffs": [1]}],
        }

    def test_shifted_has_no_r_variant(self):
        """Test that ss rejects --r."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["table", "ss", "--max-n", "2", "--r", "1"])
        assert result.exit_code == EXIT_USAGE

    def test_size_guard(self):
        """Test that the object budget from the environment is enforced."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(
                main, ["table", "s", "--max-n", "4"], env={"STIRLINGB_MAX_OBJECTS": "100"}
            )
        assert result.exit_code == EXIT_USAGE

    def test_bad_budget(self):
        """Test that a malformed budget is a usage error."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(
                main, ["table", "S", "--max-n", "2"], env={"STIRLINGB_MAX_OBJECTS": "lots"}
            )
        assert result.exit_code == EXIT_USAGE


class TestStatCommand:
    """Tests for the stat command."""

    def test_permutation(self):
        """Test the statistics of the worked permutation."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["stat", "perm", WORKED_PERMUTATION])
        assert result.exit_code == 0
        payload = _json_lines(result.output)[0]
        assert payload["ss_inv"] == 34
        assert payload["finv"] == 27
        assert payload["sfinv"] == 32
        assert payload["k"] == 3
        assert payload["flag_parts"]["p_A"] == 11

    def test_first_kind_word(self):
        """Test a first-kind word and its permutation."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["stat", "word1", "(-1,1)(-1,-2)"])
        assert result.exit_code == 0
        payload = _json_lines(result.output)[0]
        assert (payload["finv"], payload["sfinv"], payload["k"]) == (1, 2, 1)

    def test_second_kind_word(self):
        """Test a second-kind word and its weight."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["stat", "word2", "1,0,-1,2,-2,2"])
        assert result.exit_code == 0
        payload = _json_lines(result.output)[0]
        assert payload["weight"] == 8
        assert payload["k"] == 2

    def test_invalid_word(self):
        """Test that an invalid word exits with a usage error."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["stat", "word2", "1,0,-2,2"])
        assert result.exit_code == EXIT_USAGE

    def test_violation_payload(self):
        """Test that the failed condition and position are printed as JSON."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["stat", "word2", "1,0,-2,2,0,-2,-1"])
        assert result.exit_code == EXIT_USAGE
        payload = _json_lines(result.output)[0]
        assert payload["violation"]["condition"] == "2b"
        assert payload["violation"]["position"] == 3
        assert "2b" in payload["error"]


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_single_identity(self):
        """Test one identity streaming one JSON line."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["verify", "second-recursion", "--max-n", "3"])
        assert result.exit_code == 0
        lines = _json_lines(result.output)
        assert lines[0]["identity"] == "second-recursion"
        assert lines[0]["status"] == "pass"
        assert lines[0]["range"] == {"max_n": 3}

    def test_unknown_identity(self):
        """Test that an unknown identity is a usage error."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["verify", "no-such-identity"])
        assert result.exit_code == EXIT_USAGE

    def test_report(self):
        """Test writing an HTML report."""
        runner = CliRunner()
        with runner.isolated_filesystem() as tmpdir:
            result = runner.invoke(
                main, ["verify", "e-lemma", "--max-n", "3", "--report", "out/report.html"]
            )
            assert result.exit_code == 0
            with open(f"{tmpdir}/out/report.html", encoding="utf-8") as f:
                assert "e-lemma" in f.read()

    def test_failing_identity(self, monkeypatch):
        """Test that a failed identity streams its counterexample and exits 1."""
        counterexample = Counterexample(parameters={"n": 2, "k": 1}, expected="1", actual="2")
        failing = replace(identities.get_identity("e-lemma"), check=lambda *args: counterexample)
        monkeypatch.setitem(identities._BY_ID, "e-lemma", failing)

        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["verify", "e-lemma", "--max-n", "3"])
        assert result.exit_code == EXIT_FAILURE
        line = _json_lines(result.output)[0]
        assert line["status"] == "fail"
        assert line["counterexample"] == {
            "parameters": {"n": 2, "k": 1},
            "expected": "1",
            "actual": "2",
        }


class TestInitCommand:
    """Tests for the init command."""

    def test_init(self):
        """Test creating and refusing to overwrite a config file."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            assert runner.invoke(main, ["init"]).exit_code == 0
            assert runner.invoke(main, ["init"]).exit_code == EXIT_USAGE
            assert runner.invoke(main, ["init", "--force"]).exit_code == 0
            with open("stirlingb.json") as f:
                assert json.load(f)["verify"]["jobs"] == 2

    def test_config_is_used(self):
        """Test that the config file found in the working directory is applied."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            with open("stirlingb.json", "w") as f:
                json.dump({"guards": {"max_perm_n": 1}}, f)
            result = runner.invoke(main, ["table", "s", "--max-n", "2"])
        assert result.exit_code == EXIT_USAGE

    def test_missing_config(self):
        """Test that an explicit missing config is a usage error."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["-c", "missing.json", "table", "S", "--max-n", "1"])
        assert result.exit_code == EXIT_USAGE
