"""Rendering of tables and verification reports.

Tables and report streams are rendered as deterministic text (JSON lines or
CSV). The HTML summary of a verification run uses Jinja2 templates.
"""

import csv
import io
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from jinja2 import Environment, FileSystemLoader, select_autoescape

from stirlingb.config import StirlingConfig
from stirlingb.core.qpoly import QPoly
from stirlingb.verify.models import VerifyReport, VerifyStatus


def render_table(rows: Sequence[Sequence[QPoly]], fmt: str = "json") -> str:
    """Render a triangle of polynomials.

    Args:
        rows: rows[n][k] is the entry at (n, k)
        fmt: "json" for one JSON object per row with {"coeffs": [...]} cells,
            "csv" for "n,k,poly" lines with the text form of each entry

    Returns:
        The rendered text, newline terminated
    """
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "k", "poly"])
        for n, row in enumerate(rows):
            for k, entry in enumerate(row):
                writer.writerow([n, k, str(entry)])
        return buffer.getvalue()
    if fmt == "json":
        lines = [
            json.dumps({"n": n, "row": [entry.to_dict() for entry in row]})
            for n, row in enumerate(rows)
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown table format: {fmt}")


def render_report_line(report: VerifyReport) -> str:
    """One JSON line for a verification report."""
    return json.dumps(report.to_dict())


class ReportGenerator:
    """Generates static HTML reports from verification runs."""

    def __init__(self, config: StirlingConfig, base_dir: Optional[Path] = None):
        """Initialize the report generator.

        Args:
            config: stirlingb configuration
            base_dir: Directory that relative report paths are resolved against
        """
        self.config = config
        self.base_dir = base_dir or Path.cwd()

        template_dir = Path(__file__).parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            autoescape=select_autoescape(["html", "xml"]),
        )

        self.env.filters["duration_format"] = self._format_duration
        self.env.filters["datetime_format"] = self._format_datetime

    def generate(
        self,
        reports: Iterable[VerifyReport],
        output_path: Optional[Path] = None,
        generated_at: Optional[datetime] = None,
    ) -> Path:
        """Generate an HTML report.

        Args:
            reports: Verification reports in run order
            output_path: Target file; defaults to the configured report path
            generated_at: Timestamp shown in the header (defaults to now)

        Returns:
            Path to the generated report file
        """
        context = self._prepare_context(list(reports), generated_at or datetime.now())

        template = self.env.get_template("report.html")
        html_content = template.render(**context)

        report_path = Path(output_path) if output_path else self.config.report_path(self.base_dir)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        report_path.write_text(html_content, encoding="utf-8")

        return report_path

    def _prepare_context(
        self, reports: list[VerifyReport], generated_at: datetime
    ) -> dict[str, Any]:
        passed = [r for r in reports if r.status is VerifyStatus.PASS]
        failed = [r for r in reports if r.status is VerifyStatus.FAIL]
        return {
            "title": self.config.output.title,
            "generated_at": generated_at,
            "total": len(reports),
            "passed": len(passed),
            "failed": len(failed),
            "duration_ms": sum(r.elapsed_ms for r in reports),
            "reports": reports,
            "failed_reports": failed,
        }

    @staticmethod
    def _format_duration(ms: int) -> str:
        """Format duration in milliseconds to human-readable string."""
        if ms < 1000:
            return f"{ms}ms"
        elif ms < 60000:
            return f"{ms / 1000:.2f}s"
        else:
            minutes = ms // 60000
            seconds = (ms % 60000) / 1000
            return f"{minutes}m {seconds:.1f}s"

    @staticmethod
    def _format_datetime(dt: Any) -> str:
        if isinstance(dt, datetime):
            return dt.strftime("%Y-%m-%d %H:%M:%S")
        return str(dt)
