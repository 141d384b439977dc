"""Command-line interface for stirlingb."""

import json
import logging
import sys
from pathlib import Path
from typing import Callable, NoReturn, Optional

import click
from dotenv import load_dotenv
from pydantic import ValidationError as ConfigValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from stirlingb import __version__
from stirlingb.combinat.permutations import SignedPermutation
from stirlingb.config import StirlingConfig, create_example_config
from stirlingb.core.errors import StirlingError
from stirlingb.core.guards import Family, get_guards, set_guards
from stirlingb.core.qpoly import QPoly
from stirlingb.report.generator import ReportGenerator, render_report_line, render_table
from stirlingb.ssinv.standard_form import flag_parts, ss_inv, ss_standard_form
from stirlingb.stirling.first_kind import (
    sstirlingB1_q,
    stirlingA_q,
    stirlingA_q_r,
    stirlingB1_q,
    stirlingB1_q_r,
)
from stirlingb.stirling.second_kind import stirling2_q, stirling2_q_r
from stirlingb.verify.identities import identity_ids
from stirlingb.verify.models import VerifyReport
from stirlingb.verify.runner import run_verification
from stirlingb.words.first_kind import RGWordB1, first_kind_stats, phiB, phiB_inverse
from stirlingb.words.second_kind import RGWord2, rg2_to_partition, weight_exponent

EXIT_FAILURE = 1
EXIT_USAGE = 2

# stdout carries the machine-readable payload; everything else goes to stderr.
console = Console(stderr=True)

logger = logging.getLogger(__name__)

# kind -> (plain number, r-variant or None, guarded family)
TableKind = tuple[Callable[[int, int], QPoly], Optional[Callable[..., QPoly]], Family]

TABLE_KINDS: dict[str, TableKind] = {
    "S": (stirling2_q, stirling2_q_r, Family.SECOND_KIND_WORDS),
    "s": (stirlingB1_q, stirlingB1_q_r, Family.SIGNED_PERMUTATIONS),
    "ss": (sstirlingB1_q, None, Family.SIGNED_PERMUTATIONS),
    "A": (stirlingA_q, stirlingA_q_r, Family.PLAIN_PERMUTATIONS),
}


def print_banner() -> None:
    """Print the stirlingb banner."""
    console.print(
        Panel.fit(
            "[bold blue]stirlingb[/bold blue] - q-Stirling numbers of type B",
            subtitle=f"v{__version__}",
        )
    )


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    console.print(f"[red]Error:[/red] {message}")
    sys.exit(code)


def _configure_logging(verbose: bool) -> None:
    package_logger = logging.getLogger("stirlingb")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    package_logger.addHandler(RichHandler(console=console, show_path=False))
    package_logger.setLevel(logging.INFO if verbose else logging.WARNING)
    package_logger.propagate = False


def _load_config(ctx: click.Context) -> StirlingConfig:
    """Load the configuration once and install the size guards."""
    if "config" in ctx.obj:
        return ctx.obj["config"]

    config_path = ctx.obj.get("config_path")
    try:
        if config_path:
            config = StirlingConfig.from_file(config_path)
        else:
            config = StirlingConfig.find_and_load()
        set_guards(config.size_guards())
    except (FileNotFoundError, ConfigValidationError, json.JSONDecodeError, StirlingError) as e:
        _fail(str(e))
    logger.info("size guards: %s", get_guards())
    ctx.obj["config"] = config
    return config


@click.group()
@click.version_option(version=__version__, prog_name="stirlingb")
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=False),
    help="Path to configuration file (default: stirlingb.json, searched upward)",
)
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.pass_context
def main(ctx: click.Context, config: Optional[str], verbose: bool) -> None:
    """stirlingb - q-Stirling numbers of type B.

    Prints triangles of q-Stirling numbers, computes permutation and word
    statistics, and verifies the identities between them.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["config_path"] = config
    load_dotenv(Path.cwd() / ".env")
    _configure_logging(verbose)


@main.command()
@click.option(
    "--output",
    "-o",
    type=click.Path(),
    default="stirlingb.json",
    help="Output path for configuration file",
)
@click.option("--force", "-f", is_flag=True, help="Overwrite existing configuration")
def init(output: str, force: bool) -> None:
    """Initialize a new stirlingb configuration file."""
    print_banner()

    output_path = Path(output)
    if output_path.exists() and not force:
        console.print(f"[yellow]Configuration file already exists:[/yellow] {output_path}")
        console.print("Use --force to overwrite")
        sys.exit(EXIT_USAGE)

    try:
        create_example_config(output_path)
    except OSError as e:
        _fail(f"could not create configuration: {e}")
    console.print(f"[green]Created configuration file:[/green] {output_path}")


@main.command()
@click.argument("kind", type=click.Choice(list(TABLE_KINDS)))
@click.option("--max-n", type=click.IntRange(min=0), required=True, help="Largest n")
@click.option("--r", "r", type=click.IntRange(min=0), default=None, help="q,r-variant index")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "csv"], case_sensitive=False),
    default=None,
    help="Output format (default from config)",
)
@click.pass_context
def table(ctx: click.Context, kind: str, max_n: int, r: Optional[int], fmt: Optional[str]) -> None:
    """Print the triangle of KIND (S, s, ss or A) for n = 0..MAX_N."""
    config = _load_config(ctx)
    plain, restricted, family = TABLE_KINDS[kind]
    if r is not None and restricted is None:
        _fail(f"table {kind} has no q,r-variant")

    try:
        get_guards().check(family, max_n)
        if r is None:
            rows = [[plain(n, k) for k in range(n + 1)] for n in range(max_n + 1)]
        else:
            assert restricted is not None
            rows = [[restricted(n, k, r) for k in range(n + 1)] for n in range(max_n + 1)]
        text = render_table(rows, (fmt or config.output.format).lower())
    except StirlingError as e:
        _fail(str(e))
    click.echo(text, nl=False)


def _perm_stats(text: str) -> dict:
    p = SignedPermutation.parse(text)
    word = phiB(p)
    return {
        "object": str(p),
        "ss_form": str(ss_standard_form(p)),
        "word1": str(word),
        **first_kind_stats(word).to_dict(),
        "ss_inv": ss_inv(p),
        "flag_parts": flag_parts(p).to_dict(),
    }


def _word1_stats(text: str) -> dict:
    word = RGWordB1.parse(text)
    return {
        "object": str(word),
        "permutation": str(phiB_inverse(word)),
        **first_kind_stats(word).to_dict(),
    }


def _word2_stats(text: str) -> dict:
    word = RGWord2.parse(text)
    return {
        "object": str(word),
        "partition": str(rg2_to_partition(word)),
        "k": word.max_letter,
        "weight": weight_exponent(word),
    }


STAT_KINDS: dict[str, Callable[[str], dict]] = {
    "perm": _perm_stats,
    "word1": _word1_stats,
    "word2": _word2_stats,
}


@main.command()
@click.argument("kind", type=click.Choice(list(STAT_KINDS)))
@click.argument("text")
@click.pass_context
def stat(ctx: click.Context, kind: str, text: str) -> None:
    """Print the statistics of one object as JSON.

    TEXT is a signed permutation ("[-3,2,-1]" or "(1,-7)(2,-5,4,-9)*"), a
    first-kind word ("(1,1)(-2,1)") or a second-kind word ("1,0,-1,2").
    """
    _load_config(ctx)
    try:
        payload = STAT_KINDS[kind](text)
    except StirlingError as e:
        details = getattr(e, "details", None)
        if details:
            click.echo(json.dumps({"error": str(e), "violation": details}))
        condition = getattr(e, "condition", None)
        _fail(f"{e}" + (f" [condition {condition}]" if condition else ""))
    click.echo(json.dumps(payload))


@main.command()
@click.argument("identity")
@click.option("--max-n", type=click.IntRange(min=0), default=None, help="Largest n swept")
@click.option("--max-m", type=click.IntRange(min=1), default=None, help="Largest m swept")
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write an HTML summary to this path",
)
@click.pass_context
def verify(
    ctx: click.Context,
    identity: str,
    max_n: Optional[int],
    max_m: Optional[int],
    jobs: Optional[int],
    report_path: Optional[str],
) -> None:
    """Verify IDENTITY (or "all") and stream one JSON line per identity."""
    config = _load_config(ctx)
    if identity != "all" and identity not in identity_ids():
        _fail(f"unknown identity {identity!r}; known: all, {', '.join(identity_ids())}")

    def emit(report: VerifyReport) -> None:
        click.echo(render_report_line(report))

    try:
        reports = run_verification(
            identity,
            max_n if max_n is not None else config.verify.default_max_n,
            max_m if max_m is not None else config.verify.default_max_m,
            jobs=jobs or config.verify.jobs,
            on_report=emit,
        )
    except StirlingError as e:
        _fail(str(e))

    _display_summary(reports)

    if report_path:
        path = ReportGenerator(config).generate(reports, Path(report_path))
        console.print(f"[green]Report generated:[/green] {path}")

    if any(not r.passed for r in reports):
        sys.exit(EXIT_FAILURE)


def _display_summary(reports: list[VerifyReport]) -> None:
    """Display a summary of the verification run on stderr."""
    summary = Table(show_header=True, box=None)
    summary.add_column("Identity", style="bold")
    summary.add_column("Status")
    summary.add_column("Time", justify="right")
    for report in reports:
        status = "[green]pass[/green]" if report.passed else "[red]fail[/red]"
        summary.add_row(report.identity, status, f"{report.elapsed_ms}ms")
    console.print(summary)

    failed = [r for r in reports if not r.passed]
    if failed:
        console.print(f"\n[red]{len(failed)} of {len(reports)} identities failed[/red]")
    else:
        console.print(f"\n[green]All {len(reports)} identities passed[/green]")


if __name__ == "__main__":
    main()
