"""Tests for table rendering and the HTML report generator."""

import json
import tempfile
from datetime import datetime
from pathlib import Path

import pytest

from stirlingb.config import get_default_config
from stirlingb.core.qpoly import QPoly
from stirlingb.report.generator import ReportGenerator, render_report_line, render_table
from stirlingb.stirling import stirling2_row
from stirlingb.verify.models import Counterexample, VerifyReport, VerifyStatus


class TestRenderTable:
    """Tests for render_table."""

    def test_csv(self):
        """Test the CSV layout with a header line."""
        text = render_table([stirling2_row(n) for n in range(3)], "csv")
        assert text.splitlines() == [
            "n,k,poly",
            "0,0,1",
            "1,0,1",
            "1,1,1",
            "2,0,1",
            "2,1,2 + q + q^2",
            "2,2,1",
        ]

    def test_json(self):
        """Test one JSON object per row with coefficient-list cells."""
        text = render_table([[QPoly.one()], [QPoly((2, 1)), QPoly((3, 1))]], "json")
        lines = [json.loads(line) for line in text.splitlines()]
        assert lines == [
            {"n": 0, "row": [{"coeffs": [1]}]},
            {"n": 1, "row": [{"coeffs": [2, 1]}, {"coeffs": [3, 1]}]},
        ]
        assert text.endswith("\n")

    def test_unknown_format(self):
        """Test that unknown formats are rejected."""
        with pytest.raises(ValueError):
            render_table([], "xml")


class TestReportLine:
    """Tests for render_report_line."""

    def test_line(self):
        """Test the JSON line of a passing report."""
        report = VerifyReport(identity="e-lemma", range={"max_n": 3}, elapsed_ms=5)
        assert json.loads(render_report_line(report)) == {
            "identity": "e-lemma",
            "range": {"max_n": 3},
            "status": "pass",
            "counterexample": None,
            "elapsed_ms": 5,
        }


class TestReportGenerator:
    """Tests for ReportGenerator."""

    def _reports(self):
        return [
            VerifyReport(identity="e-lemma", range={"max_n": 3}, elapsed_ms=4, description="e"),
            VerifyReport(
                identity="broken",
                range={"max_n": 2, "max_m": 1},
                status=VerifyStatus.FAIL,
                counterexample=Counterexample({"n": 1, "m": 1}, "0", "1 + q + q^2"),
                elapsed_ms=1500,
            ),
        ]

    def test_generate(self):
        """Test writing the report to an explicit path."""
        config = get_default_config()
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "out" / "report.html"
            result = ReportGenerator(config).generate(
                self._reports(), path, generated_at=datetime(2024, 1, 2, 3, 4, 5)
            )
            assert result == path
            html = path.read_text(encoding="utf-8")
            assert config.output.title in html
            assert "2024-01-02 03:04:05" in html
            assert "1 + q + q^2" in html
            assert "1.50s" in html
            assert "max_n=2, max_m=1" in html

    def test_default_path(self):
        """Test that the configured report path is used by default."""
        config = get_default_config()
        with tempfile.TemporaryDirectory() as tmpdir:
            result = ReportGenerator(config, Path(tmpdir)).generate(self._reports()[:1])
            assert result == config.report_path(tmpdir)
            assert result.exists()

    @pytest.mark.parametrize("ms,text", [(250, "250ms"), (1500, "1.50s"), (90000, "1m 30.0s")])
    def test_duration_format(self, ms, text):
        """Test duration formatting."""
        assert ReportGenerator._format_duration(ms) == text
