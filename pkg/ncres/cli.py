"""Main CLI application using Typer."""

import json
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from ncres.algebra.quiver import Subquiver
from ncres.catalog.builders import build_algebra, catalog_entries
from ncres.config.models import OutputFormat, Settings
from ncres.config.parser import load_settings
from ncres.errors import NcresError
from ncres.harness.report import VerificationReport
from ncres.harness.serialize import chart_label, chart_to_dot, export_case
from ncres.harness.verify import (
    verify_case,
    verify_conifold,
    verify_cyclic,
    verify_preprojective,
    verify_su3,
    verify_tautological,
)
from ncres.log import setup_logging
from ncres.modules.families import solve_iso_parameters, trivialize_support
from ncres.oracle.hj import hj_continued_fraction
from ncres.ui.display import (
    display_catalog_table,
    display_chart,
    display_hj,
    display_report,
    print_error,
    print_info,
    print_success,
    print_warning,
    show_spinner,
)
from ncres.ui.prompts import confirm_action, select_case


app = typer.Typer(
    name="ncres",
    help="Large and almost large modules over quiver algebras",
    add_completion=False,
    no_args_is_help=False,
)
catalog_app = typer.Typer(help="Browse the algebras in the catalog.", add_completion=False)
verify_app = typer.Typer(help="Run a verification workflow.", add_completion=False)
oracle_app = typer.Typer(help="Geometry on the resolution side.", add_completion=False)
app.add_typer(catalog_app, name="catalog")
app.add_typer(verify_app, name="verify")
app.add_typer(oracle_app, name="oracle")

console = Console()

FORMAT_HELP = "Output format: table, json or dot"


def get_settings() -> Settings:
    """Load settings (resolved fresh for each command)."""
    try:
        return load_settings()
    except NcresError as exc:
        print_error(str(exc))
        raise typer.Exit(1)


def _emit(report: VerificationReport, fmt: Optional[OutputFormat]) -> None:
    """Render a report and exit 0 iff no check failed."""
    fmt = fmt or get_settings().default_format
    if fmt == OutputFormat.JSON:
        print(report.to_json())
    elif fmt == OutputFormat.DOT:
        print(report.to_dot(), end="")
    else:
        display_report(report)
    raise typer.Exit(report.exit_code)


def _verify(message: str, body, fmt: Optional[OutputFormat]) -> None:
    try:
        if fmt in (None, OutputFormat.TABLE):
            with show_spinner(message):
                report = body()
        else:
            report = body()
    except NcresError as exc:
        print_error(str(exc))
        raise typer.Exit(1)
    _emit(report, fmt)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(
        None,
        "--log-level",
        help="Log level for diagnostics on stderr (default: NCRES_LOG_LEVEL, config file, WARNING)",
    ),
):
    """Large and almost large modules over quiver algebras.

    Run without arguments to pick a catalog case interactively.
    """
    settings = get_settings()
    try:
        setup_logging((log_level or settings.log_level).upper())
    except ValueError:
        print_error(f"Unknown log level: {log_level}")
        raise typer.Exit(1)

    # If a subcommand is invoked, don't run default behavior
    if ctx.invoked_subcommand is not None:
        return

    selected = select_case(catalog_entries())
    if selected is None:
        print_warning("Cancelled.")
        raise typer.Exit(1)
    _verify(f"Verifying {selected}...", lambda: verify_case(selected, settings)[1], OutputFormat.TABLE)


@catalog_app.command(name="list")
def catalog_list():
    """List the catalog cases."""
    display_catalog_table(catalog_entries())


@verify_app.command()
def cyclic(
    r: int = typer.Option(..., "--r", help="Group order r"),
    b: int = typer.Option(..., "--b", help="Weight b, coprime to r"),
    socle: int = typer.Option(0, "--socle", help="Socle vertex"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Check the families of (1/r)(1,b) against the Hirzebruch-Jung resolution."""
    settings = get_settings()
    _verify(f"Verifying cyclic({r},{b})...", lambda: verify_cyclic(r, b, socle, settings), fmt)


@verify_app.command()
def conifold(
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Check the two P^1 families of the conifold algebra."""
    settings = get_settings()
    _verify("Verifying the conifold...", lambda: verify_conifold(settings), fmt)


@verify_app.command()
def preprojective(
    kind: str = typer.Option(..., "--kind", "-k", help="D4, D5, ... or E6"),
    socle: int = typer.Option(0, "--socle", help="Socle vertex"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Check the built-in P^1 charts of a preprojective algebra."""
    settings = get_settings()
    _verify(f"Verifying {kind}...", lambda: verify_preprojective(kind, socle, settings), fmt)


@verify_app.command()
def su3(
    count: bool = typer.Option(True, "--count/--no-count", help="Run the brute-force level count"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Check the su3 figure supports against the toric diagram."""
    settings = get_settings()
    _verify("Verifying su3(4)...", lambda: verify_su3(settings, count_level=count), fmt)


@verify_app.command()
def tautological(
    n: int = typer.Option(3, "--n", help="Number of arrows a_i"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Check the P^(n-1) family of the tautological algebra."""
    settings = get_settings()
    _verify(f"Verifying tautological({n})...", lambda: verify_tautological(n, settings), fmt)


@oracle_app.command()
def hj(
    r: int = typer.Option(..., "--r", help="Group order r"),
    b: int = typer.Option(..., "--b", help="Weight b, coprime to r"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="table or json"),
):
    """Show the Hirzebruch-Jung continued fraction of r/b."""
    try:
        data = hj_continued_fraction(r, b)
    except NcresError as exc:
        print_error(str(exc))
        raise typer.Exit(1)

    if fmt == OutputFormat.JSON:
        print(json.dumps({
            "r": data.r,
            "b": data.b,
            "coefficients": list(data.coefficients),
            "points": [list(p) for p in data.points],
        }, indent=2))
    else:
        display_hj(data)


@app.command()
def export(
    case: str = typer.Option(..., "--case", "-c", help="Catalog case id, e.g. cyclic-7-3"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory (default from settings)"),
    force: bool = typer.Option(False, "--force", help="Write into a non-empty directory without asking"),
):
    """Write DOT diagrams, the JSON quiver description and report.json for a case."""
    settings = get_settings()
    out = out or settings.output_dir

    if out.exists() and any(out.iterdir()) and not force:
        if not confirm_action(f"{out} is not empty. Write into it anyway?"):
            print_warning("Cancelled.")
            raise typer.Exit(1)

    try:
        with show_spinner(f"Verifying {case}..."):
            algebra, report = verify_case(case, settings)
        paths = export_case(algebra, report, out)
    except NcresError as exc:
        print_error(str(exc))
        raise typer.Exit(1)

    print_success(f"Wrote {len(paths)} file(s) to {out}")
    for path in paths:
        console.print(f"  - {path.name}")
    if not report.ok:
        print_warning(f"{len(report.failures)} check(s) failed; see report.json")
    raise typer.Exit(report.exit_code)


@app.command()
def family(
    algebra_name: str = typer.Option(..., "--algebra", "-a", help="Algebra name, e.g. conifold or cyclic(7,3)"),
    support: str = typer.Option(..., "--support", "-s", help='JSON list of arrow names, e.g. \'["a_1", "a_2"]\''),
    sink: int = typer.Option(..., "--sink", help="Socle vertex of the family"),
    fmt: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
):
    """Trivialize a thin support and show its family chart."""
    try:
        names = json.loads(support)
    except json.JSONDecodeError:
        print_error(f"--support is not valid JSON: {support}")
        raise typer.Exit(1)
    if not isinstance(names, list):
        print_error("--support must be a JSON list of arrow names")
        raise typer.Exit(1)

    try:
        algebra = build_algebra(algebra_name)
        chart = trivialize_support(algebra, Subquiver.from_names(algebra.quiver, names), sink)
        verdict = solve_iso_parameters(chart, get_settings().samples).verdict
        coordinates = chart_label(chart)
    except NcresError as exc:
        print_error(str(exc))
        raise typer.Exit(1)

    if fmt == OutputFormat.JSON:
        support_lines = chart.support
        print(json.dumps({
            "name": chart.name,
            "parameters": [str(t) for t in chart.parameters],
            "entries": [
                {"arrow": support_lines.name(la), "entry": str(e)}
                for la, e in zip(support_lines.line_arrows, chart.entries)
            ],
            "family": verdict,
            "coordinates": coordinates,
        }, indent=2))
    elif fmt == OutputFormat.DOT:
        print(chart_to_dot(chart), end="")
    else:
        display_chart(chart, verdict, coordinates)
        if not chart.parameters:
            print_info("The support carries a single isoclass.")


if __name__ == "__main__":
    app()
