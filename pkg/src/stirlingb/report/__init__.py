"""Report generation for tables and verification runs."""

from stirlingb.report.generator import ReportGenerator, render_report_line, render_table

__all__ = ["ReportGenerator", "render_report_line", "render_table"]
