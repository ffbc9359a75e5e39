"""
blobalg CLI - Main entry point.

Command-line access to basis enumeration, products, Gram determinants,
dimension tables, verification suites, semisimplicity scans and export.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from blobalg import __version__
from blobalg.core.config import get_config
from blobalg.core.exceptions import BlobAlgError, RankLimitError, UnknownParameterError
from blobalg.core.models import FamilyName, OutputFormat, SuiteName
from blobalg.params.laurent import PARAMS, ParamName, resolve_param
from blobalg.utils.logging import get_logger, setup_logging

# Data goes to stdout, diagnostics to stderr
console = Console()
err_console = Console(stderr=True)
logger = get_logger(__name__)

FORMATS = click.Choice([f.value for f in OutputFormat])


def handle_error(func):
    """Decorator to handle errors gracefully."""
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except BlobAlgError as e:
            err_console.print(f"[red]Error:[/red] {e.message}")
            if e.details:
                for key, value in e.details.items():
                    err_console.print(f"  [dim]{key}:[/dim] {value}")
            sys.exit(1)
        except Exception as e:
            err_console.print(f"[red]Unexpected error:[/red] {e}")
            logger.exception("Unexpected error")
            sys.exit(1)
    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper


def parse_point(assignments: tuple[str, ...]) -> dict[ParamName, Fraction]:
    """Turn ``name=value`` pairs into a parameter point."""
    point: dict[ParamName, Fraction] = {}
    for item in assignments:
        name, sep, value = item.partition("=")
        if not sep:
            raise click.UsageError(f"--set expects name=value, got '{item}'")
        try:
            param = resolve_param(name.strip())
        except UnknownParameterError as e:
            raise click.UsageError(e.message)
        try:
            point[param] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"'{value}' is not a rational number")
    return point


def guard_rank(rank: int) -> int:
    """Apply the BLOBALG_MAX_RANK guard as a usage error."""
    try:
        return get_config().check_rank(rank)
    except RankLimitError as e:
        raise click.UsageError(e.message)


def echo_json(data) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=False))


@click.group()
@click.version_option(version=__version__, prog_name="blobalg")
@click.option("-v", "--verbose", is_flag=True, help="Enable verbose (DEBUG) logging")
@click.option("-q", "--quiet", is_flag=True, help="Suppress non-essential output")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, quiet: bool) -> None:
    """
    blobalg - exact diagram calculus for Temperley-Lieb type algebras

    \b
    Examples:
        blobalg enumerate --family tl --n 3
        blobalg gram --m 3 --weight -1
        blobalg dims --m 4
        blobalg verify dims gram-paper-identities
        blobalg scan --m 3 --set d=2 --set dL=3 ...
    """
    config = get_config()
    if verbose:
        log_level = "DEBUG"
    elif quiet:
        log_level = "ERROR"
    else:
        log_level = config.logging.level

    setup_logging(
        level=log_level,
        log_file=config.logging.log_file,
        json_format=config.logging.json_format,
    )
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet
    ctx.obj["config"] = config


# =============================================================================
# Diagrams
# =============================================================================

def _basis(family: FamilyName, n: int, period: Optional[int], bound: Optional[int]) -> list:
    from blobalg.diagrams import enumerate_basis
    from blobalg.symplectic import enumerate_Bx, enumerate_phi

    if family is FamilyName.X:
        return list(enumerate_Bx(n))
    if family is FamilyName.PERIODIC:
        return list(enumerate_phi(n))
    return enumerate_basis(family, n, period, bound)


@cli.command("enumerate")
@click.option("--family", "-f", type=click.Choice([f.value for f in FamilyName]), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Rank (m for x and periodic)")
@click.option("--period", type=int, help="Contour bead period")
@click.option("--bound", type=int, help="Contour exposure bound")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def enumerate_cmd(family: str, n: int, period: Optional[int], bound: Optional[int], fmt: str) -> None:
    """List the basis diagrams of a family."""
    guard_rank(n)
    basis = _basis(FamilyName(family), n, period, bound)
    if fmt == OutputFormat.JSON.value:
        echo_json([d.to_model().model_dump() for d in basis])
        return
    if fmt == OutputFormat.CSV.value:
        click.echo("index,diagram")
        for i, d in enumerate(basis):
            click.echo(f'{i},"{d}"')
        return
    for d in basis:
        click.echo(str(d))
    err_console.print(f"[dim]{len(basis)} diagrams[/dim]")


def _load_diagram(family: FamilyName, text: str):
    from blobalg.diagrams import Diagram
    from blobalg.symplectic import PeriodicSymDiagram

    cls = PeriodicSymDiagram if family is FamilyName.PERIODIC else Diagram
    try:
        return cls.from_json(text)
    except ValidationError as e:
        raise click.BadParameter(f"not a {family.value} diagram: {e.error_count()} errors")


def _product(family: FamilyName, period: Optional[int], bound: Optional[int]):
    from blobalg.diagrams import ContourAlgebra, blob_product
    from blobalg.symplectic import compose_phi, x_product

    if family is FamilyName.PERIODIC:
        return compose_phi
    if family is FamilyName.X:
        return x_product
    if family is FamilyName.CONTOUR:
        if period is None or bound is None:
            raise click.UsageError("contour products need --period and --bound")
        return lambda a, b: ContourAlgebra(a.n, period, bound).product(a, b)
    return blob_product


@cli.command("multiply")
@click.argument("left")
@click.argument("right")
@click.option("--family", "-f", type=click.Choice([f.value for f in FamilyName]), default="blob")
@click.option("--period", type=int, help="Contour bead period")
@click.option("--bound", type=int, help="Contour exposure bound")
@click.option("--set", "assignments", multiple=True, help="Parameter value, e.g. kLR=3/2")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def multiply(
    left: str,
    right: str,
    family: str,
    period: Optional[int],
    bound: Optional[int],
    assignments: tuple[str, ...],
    fmt: str,
) -> None:
    """Multiply two diagrams given as JSON."""
    fam = FamilyName(family)
    point = parse_point(assignments)
    a, b = _load_diagram(fam, left), _load_diagram(fam, right)
    scalar, result = _product(fam, period, bound)(a, b)
    value = scalar.evaluate(point) if point else None

    if fmt == OutputFormat.JSON.value:
        data = {"coefficient": str(scalar), "diagram": result.to_model().model_dump()}
        if value is not None:
            data["value"] = str(value)
        echo_json(data)
        return
    click.echo(f"({scalar}) {result}")
    if value is not None:
        click.echo(f"value: {value}")


# =============================================================================
# Representation theory
# =============================================================================

@cli.command("gram")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Half rank")
@click.option("--weight", "-l", "weight", type=int, required=True)
@click.option("--set", "assignments", multiple=True, help="Parameter value, e.g. kLR=3/2")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def gram(m: int, weight: int, assignments: tuple[str, ...], fmt: str) -> None:
    """Gram matrix and determinant of a standard module."""
    from blobalg.reptheory import gram_matrix

    guard_rank(m)
    point = parse_point(assignments)
    report = gram_matrix(m, weight)

    if fmt == OutputFormat.JSON.value:
        data = report.to_model().model_dump()
        if point:
            data["value"] = str(report.determinant.evaluate(point))
            if len(point) == len(PARAMS):
                data["rank"] = report.rank_at(point)
        echo_json(data)
        return
    if fmt == OutputFormat.CSV.value:
        click.echo(",".join(["", *(str(t) for t in report.basis)]))
        for t, row in zip(report.basis, report.matrix):
            click.echo(",".join([str(t), *(f'"{e}"' for e in row)]))
        return

    table = Table(title=f"Gram matrix of S_{weight}({2 * m})")
    table.add_column("", style="cyan")
    for t in report.basis:
        table.add_column(str(t))
    for t, row in zip(report.basis, report.matrix):
        table.add_row(str(t), *(str(e) for e in row))
    if report.dimension <= 8:
        console.print(table)
    click.echo(str(report.factorisation))
    if point:
        click.echo(f"value: {report.determinant.evaluate(point)}")
        if len(point) == len(PARAMS):
            click.echo(f"rank: {report.rank_at(point)} of {report.dimension}")


@cli.command("dims")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Largest half rank")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def dims(m: int, fmt: str) -> None:
    """Dimensions of the standard modules for ranks 0..2m."""
    from blobalg.analysis.export import dimension_table

    guard_rank(m)
    rows = dimension_table(m)
    if fmt == OutputFormat.JSON.value:
        echo_json([row.model_dump() for row in rows])
        return
    columns = list(range(-m, m)) if m else [0]
    if fmt == OutputFormat.CSV.value:
        click.echo(",".join(["m", *(str(l) for l in columns), "total"]))
        for row in rows:
            cells = [str(row.dims.get(l, "")) for l in columns]
            click.echo(",".join([str(row.m), *cells, str(row.total)]))
        return

    table = Table(title="dim S_l(2m)")
    table.add_column("m", style="cyan")
    for l in columns:
        table.add_column(str(l), justify="right")
    table.add_column("sum of squares", style="green", justify="right")
    for row in rows:
        table.add_row(
            str(row.m), *(str(row.dims.get(l, "")) for l in columns), str(row.total)
        )
    console.print(table)


@cli.command("scan")
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Half rank")
@click.option("--set", "assignments", multiple=True, help="Parameter value, e.g. kLR=3/2")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def scan(m: int, assignments: tuple[str, ...], fmt: str) -> None:
    """Evaluate every Gram determinant at a parameter point."""
    from blobalg.reptheory import semisimplicity_scan

    guard_rank(m)
    point = parse_point(assignments)
    missing = [p.value for p in PARAMS if p not in point]
    if missing:
        raise click.UsageError(f"scan needs all six parameters; missing {', '.join(missing)}")
    report = semisimplicity_scan(m, point)

    if fmt == OutputFormat.JSON.value:
        echo_json({
            "m": report.m,
            "point": {k: str(v) for k, v in report.point.items()},
            "determinants": {str(l): str(v) for l, v in report.determinants.items()},
            "conditions": report.conditions,
            "semisimple": report.semisimple,
        })
        return

    table = Table(title=f"Gram determinants of b_{2 * m} at the point")
    table.add_column("weight", style="cyan", justify="right")
    table.add_column("value")
    for l, value in report.determinants.items():
        table.add_row(str(l), f"[red]{value}[/red]" if value == 0 else str(value))
    console.print(table)
    for label, hit in report.conditions.items():
        console.print(f"  {label} = 0: {'[red]yes[/red]' if hit else 'no'}")
    verdict = "[green]semisimple[/green]" if report.semisimple else "[red]not semisimple[/red]"
    console.print(Panel.fit(verdict, title="Verdict"))


# =============================================================================
# Verification and export
# =============================================================================

@cli.command("verify")
@click.argument("suites", nargs=-1, type=click.Choice([s.value for s in SuiteName]))
@click.option("--max-rank", type=click.IntRange(min=0), help="Override every suite's rank")
@click.option("--seed", type=int, help="Random seed (defaults to BLOBALG_SEED)")
@click.option("--format", "fmt", type=FORMATS, default="text")
@handle_error
def verify(suites: tuple[str, ...], max_rank: Optional[int], seed: Optional[int], fmt: str) -> None:
    """Run verification suites (all of them by default)."""
    from blobalg.analysis.verify import SuiteRunner

    if max_rank is not None:
        guard_rank(max_rank)
    results = SuiteRunner(seed=seed).run_all(suites or None, max_rank)

    if fmt == OutputFormat.JSON.value:
        echo_json([r.to_model().model_dump(mode="json") for r in results])
    else:
        table = Table(title="Verification")
        table.add_column("suite", style="cyan")
        table.add_column("result")
        table.add_column("checks", justify="right")
        table.add_column("seconds", justify="right")
        table.add_column("detail", style="dim")
        for r in results:
            status = "[green]pass[/green]" if r.passed else f"[red]FAIL ({len(r.failures)})[/red]"
            table.add_row(r.name.value, status, str(r.checks), f"{r.elapsed:.2f}", r.detail or "")
        console.print(table)
        for r in results:
            for failure in r.failures[:10]:
                err_console.print(f"[red]{r.name.value}:[/red] {failure}")

    if not all(r.passed for r in results):
        sys.exit(1)


@cli.command("export")
@click.argument("what", type=click.Choice(["dims", "gram"]))
@click.option("--m", "m", type=click.IntRange(min=0), required=True, help="Largest half rank")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Output file")
@click.pass_context
@handle_error
def export(ctx: click.Context, what: str, m: int, fmt: str, output: Optional[str]) -> None:
    """Write a dimension table or all Gram reports up to rank 2m."""
    from blobalg.analysis.export import dimension_table, export_dimensions, export_gram
    from blobalg.reptheory import gram_matrix, weights

    guard_rank(m)
    config = ctx.obj["config"]
    if output is None:
        config.ensure_directories()
        path = config.results_dir / f"{what}_m{m}.{fmt}"
    else:
        path = Path(output)

    if what == "dims":
        result = export_dimensions(dimension_table(m), path, OutputFormat(fmt))
    else:
        reports = [gram_matrix(k, l).to_model() for k in range(0, m + 1) for l in weights(k)]
        result = export_gram(reports, path, OutputFormat(fmt))
    err_console.print(f"[green]✓ Exported to:[/green] {result}")


@cli.command("info")
@click.pass_context
def info(ctx: click.Context) -> None:
    """Show version and configuration."""
    config = ctx.obj["config"]
    console.print(Panel.fit(
        f"[bold cyan]blobalg v{__version__}[/bold cyan]\n\n"
        f"[green]Configuration:[/green]\n"
        f"  Max rank: {config.max_rank}\n"
        f"  Results Dir: {config.results_dir}\n"
        f"  Log level: {config.logging.level}\n"
        f"  Seed: {config.verify.seed}\n"
        f"  Random trials: {config.verify.random_trials}\n"
        f"  Suites file: {config.verify.suites_file or 'built-in defaults'}",
        title="blobalg"
    ))


def main() -> None:
    """Entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
