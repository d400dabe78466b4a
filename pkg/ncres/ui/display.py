"""Display utilities for rich output."""

from contextlib import contextmanager
from typing import Generator, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ncres.catalog.builders import CatalogEntry
from ncres.config.models import CheckStatus
from ncres.harness.report import VerificationReport
from ncres.modules.families import FamilyChart
from ncres.oracle.hj import HJData

console = Console()

_STATUS_STYLE = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.ASSUMED: "yellow",
}


@contextmanager
def show_spinner(message: str) -> Generator[None, None, None]:
    """Show a spinner while a verification runs.

    Usage:
        with show_spinner("Checking cyclic(7,3)..."):
            report = verify_cyclic(7, 3)
    """
    with console.status(f"[cyan]{message}[/cyan]", spinner="dots"):
        yield


def display_catalog_table(entries: List[CatalogEntry]) -> None:
    """Display the catalog cases in a rich table."""
    table = Table(title="Catalog", show_header=True, header_style="bold cyan")
    table.add_column("Case", style="bold")
    table.add_column("Description")

    for entry in entries:
        table.add_row(entry.case, entry.description)

    console.print(table)


def display_report(report: VerificationReport) -> None:
    """Display a report as a table of checks, followed by a summary line."""
    table = Table(title=report.case, show_header=True, header_style="bold cyan")
    table.add_column("", justify="center")
    table.add_column("Check", style="bold")
    table.add_column("Detail")

    for check in report.checks:
        style = _STATUS_STYLE[check.status]
        table.add_row(f"[{style}]{check.status.symbol}[/{style}]", check.name, check.detail)

    console.print(table)
    summary = (
        f"{report.count(CheckStatus.PASS)} passed, "
        f"{report.count(CheckStatus.FAIL)} failed, "
        f"{report.count(CheckStatus.ASSUMED)} assumed"
    )
    if report.ok:
        print_success(summary)
    else:
        print_error(summary)


def display_hj(data: HJData) -> None:
    """Display a continued fraction and its staircase."""
    content = [
        f"[bold]r/b:[/bold] {data.r}/{data.b}",
        f"[bold]Continued fraction:[/bold] {data.render()}",
        f"[bold]Components:[/bold] {data.length}",
        "[bold]Boundary points (n, m):[/bold] " + ", ".join(f"({n}, {m})" for n, m in data.points),
    ]
    console.print(Panel("\n".join(content), title=f"(1/{data.r})(1,{data.b})", border_style="cyan"))


def display_chart(chart: FamilyChart, verdict: Optional[str] = None, coordinates: Optional[str] = None) -> None:
    """Display a family chart: its parameters and the entry on every line arrow."""
    table = Table(title=chart.name, show_header=True, header_style="bold cyan")
    table.add_column("Arrow", style="bold")
    table.add_column("Line", justify="center")
    table.add_column("Entry")

    support = chart.support
    for la, entry in zip(support.line_arrows, chart.entries):
        table.add_row(support.name(la), f"{support.tail(la)} -> {support.head(la)}", str(entry))

    console.print(table)
    if coordinates:
        print_info(f"Coordinates: {coordinates}")
    if verdict:
        print_info(f"Family: {verdict}")


def print_success(message: str) -> None:
    """Print a success message."""
    console.print(f"[green]✓[/green] {message}")


def print_error(message: str) -> None:
    """Print an error message."""
    console.print(f"[red]✗[/red] {message}")


def print_warning(message: str) -> None:
    """Print a warning message."""
    console.print(f"[yellow]![/yellow] {message}")


def print_info(message: str) -> None:
    """Print an info message."""
    console.print(f"[cyan]ℹ[/cyan] {message}")
