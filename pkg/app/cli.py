"""
Command-line interface for coxinv.

Usage:
    coxinv class-poly --type A --n 5 --m 2           # involutions on 5 letters with 2 transpositions
    coxinv involution-poly --type D --n 10           # aggregate polynomial and the B\\D companion
    coxinv profile --type B --n 6 --parity even      # parity profile of L_W(B_6)
    coxinv tables --group H3 --source engine --diff  # engine against the embedded table
    coxinv verify --suite classical                  # brute-force equivalence
    coxinv check --scan paper                        # counterexample scan
    coxinv bench --type B --n-range 2..6             # recurrence against enumeration

Exit status: 0 on success, 1 on a verification mismatch, 2 on a usage error.
"""
import functools
import json
import logging
import sys
from typing import Any, List, Optional, Tuple

import click

from .core.config import settings
from .core.exceptions import (
    BudgetExceededError,
    CoxinvError,
    InvalidGroupError,
    MissingDataError,
)
from .core.logging_config import configure_logging
from .models.analysis import ScanReport
from .services import queries
from .services.analysis import scan_counterexamples
from .services.bench import bench as run_bench
from .services.bench import format_bench, parse_range
from .services.errata import list_errata
from .services.exceptional_data import records_to_csv, records_to_json
from .services.polynomial import format_poly
from .services.verification import SUITES, run_suite

logger = logging.getLogger(__name__)

TYPES = click.Choice(["A", "B", "D", "I2", "E", "F", "H"], case_sensitive=False)
FORMATS = click.Choice(["text", "json", "csv"], case_sensitive=False)


def _dump(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _poly_csv(poly_coeffs: List[str]) -> str:
    lines = ["degree,coefficient"]
    lines += [f"{i},{c}" for i, c in enumerate(poly_coeffs) if c != "0"]
    return "\n".join(lines)


def _range_option(ctx: click.Context, param: click.Parameter, value: str) -> Tuple[int, int]:
    try:
        return parse_range(value)
    except ValueError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)


def handle_errors(func):
    """Turn domain errors into exit codes: bad selectors and refusals are usage errors"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (InvalidGroupError, MissingDataError) as e:
            raise click.UsageError(str(e))
        except BudgetExceededError as e:
            hint = "" if e.allow_override else " (no override available)"
            raise click.UsageError(f"{e}{hint}")
        except CoxinvError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            sys.exit(1)
    return wrapper


@click.group(invoke_without_command=True)
@click.version_option(version=settings.APP_VERSION, prog_name="coxinv")
@click.option("--allow-large", is_flag=True, help="Lift the soft desk-scale guards (E7, larger oracles)")
@click.option("--show-errata", is_flag=True, help="Print the corrections applied to published values")
@click.option("--log-level", default=None, help="Override LOG_LEVEL for this run")
@click.pass_context
def cli(ctx: click.Context, allow_large: bool, show_errata: bool, log_level: Optional[str]):
    """
    Involution length polynomials in finite Coxeter groups.

    Type A class polynomials count letters (--n 5 is the symmetric group on
    5 letters); every other --n is the rank, or the dihedral parameter for I2.
    """
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["allow_large"] = allow_large or settings.ALLOW_LARGE
    if show_errata:
        for erratum in list_errata():
            click.echo(f"[{erratum.key}]")
            click.echo(f"  quoted:    {erratum.quoted}")
            click.echo(f"  corrected: {erratum.corrected}")
            click.echo(f"  evidence:  {erratum.evidence}")
    elif ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command("class-poly")
@click.option("--type", "type_", type=TYPES, required=True, help="Group family")
@click.option("--n", type=int, required=True, help="Letters (A), rank (B, D, E, F, H) or I2 parameter")
@click.option("--m", type=int, default=None, help="Number of 2-cycles")
@click.option("--e", type=int, default=0, show_default=True, help="Number of negative 1-cycles")
@click.option("--label", default=None, help="Class label for I2 and exceptional groups")
@click.option("--size", type=int, default=None, help="Class size, when a label is ambiguous")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@handle_errors
def class_poly(type_: str, n: int, m: Optional[int], e: int, label: Optional[str],
               size: Optional[int], fmt: str):
    """
    Length polynomial of one involution class.

    Examples:

        coxinv class-poly --type B --n 6 --m 1 --e 2

        coxinv class-poly --type E --n 6 --label A1^2
    """
    result = queries.class_polynomial(type_, n, m=m, e=e, label=label, size=size)
    if fmt == "json":
        click.echo(_dump(result.model_dump(mode="json")))
    elif fmt == "csv":
        click.echo(_poly_csv(result.polynomial.coeffs))
    else:
        selector = label if label is not None else f"m={result.m} e={result.e}"
        click.echo(f"{result.group} {selector}: {result.text}")
        if result.split and result.per_class is not None:
            per_class = format_poly(result.per_class.to_poly())
            click.echo(f"  splits into two classes, each {per_class}")


@cli.command("involution-poly")
@click.option("--type", "type_", type=TYPES, required=True)
@click.option("--n", type=int, required=True, help="Rank, or the I2 parameter")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@handle_errors
def involution_poly(type_: str, n: int, fmt: str):
    """Length polynomial of every involution, identity included"""
    result = queries.involution_polynomial(type_, n)
    if fmt == "json":
        click.echo(_dump(result.model_dump(mode="json")))
    elif fmt == "csv":
        click.echo(_poly_csv(result.polynomial.coeffs))
    else:
        click.echo(f"{result.group}: {result.text}")
        if result.companion_text is not None:
            click.echo(f"B\\D companion: {result.companion_text}")


@cli.command()
@click.option("--type", "type_", type=TYPES, required=True)
@click.option("--n", type=int, required=True, help="Rank, or the I2 parameter")
@click.option("--parity", type=click.Choice(["odd", "even"]), default="even", show_default=True)
@click.option("--full", is_flag=True, help="Every coefficient, parity zeros included")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@handle_errors
def profile(type_: str, n: int, parity: str, full: bool, fmt: str):
    """
    Parity profile of the involution polynomial.

    Example:

        coxinv profile --type B --n 6 --parity even
    """
    result = queries.involution_profile(type_, n, parity=parity, full=full)
    if fmt == "json":
        click.echo(_dump(result.model_dump(mode="json")))
    else:
        click.echo("[" + ",".join(str(v) for v in result.values) + "]")


@cli.command()
@click.option("--group", required=True, help="E6, E7, E8, F4, H3 or H4")
@click.option("--source", type=click.Choice(queries.SOURCES), default="embedded", show_default=True)
@click.option("--diff", is_flag=True, help="Compare the engine against the embedded table")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.pass_context
@handle_errors
def tables(ctx: click.Context, group: str, source: str, diff: bool, fmt: str):
    """
    Involution class tables of the exceptional groups.

    Examples:

        coxinv tables --group E6 --format csv

        coxinv tables --group H3 --source engine --diff
    """
    allow_large = ctx.obj["allow_large"]
    if diff:
        result = queries.table_diff(group, allow_large=allow_large)
        if fmt == "json":
            click.echo(_dump(result))
        else:
            for row in result["embedded_only"]:
                click.echo(f"- embedded: {row}")
            for row in result["engine_only"]:
                click.echo(f"+ engine:   {row}")
            if not result["embedded_only"] and not result["engine_only"]:
                click.echo(f"{group.upper()}: engine and embedded tables agree")
        if result["embedded_only"] or result["engine_only"]:
            sys.exit(1)
        return

    records = queries.class_table(group, source, allow_large=allow_large)
    if fmt == "json":
        click.echo(records_to_json(group.upper(), records))
    elif fmt == "csv":
        click.echo(records_to_csv(records), nl=False)
    else:
        click.echo(f"{'class':<10}{'size':>8}{'min_length':>12}  profile")
        for rec in records:
            click.echo(f"{rec.label:<10}{rec.size:>8}{rec.min_length:>12}  {rec.profile}")


@cli.command()
@click.option("--suite", type=click.Choice(list(SUITES) + ["all"]), default="all", show_default=True)
@click.pass_context
@handle_errors
def verify(ctx: click.Context, suite: str):
    """Run verification suites and print pass/fail per case"""
    reports = run_suite(suite, allow_large=ctx.obj["allow_large"])
    for report in reports:
        click.echo(f"== {report.suite}")
        for case in report.cases:
            status = "PASS" if case.passed else "FAIL"
            line = f"{status} {case.key}"
            if not case.passed and case.detail:
                line += f": {case.detail}"
            click.echo(line)
        for skipped in report.skipped:
            click.echo(f"SKIP {skipped}")
    failed = sum(len(r.failures) for r in reports)
    total = sum(len(r.cases) for r in reports)
    click.echo(f"{total - failed}/{total} cases passed")
    if failed:
        sys.exit(1)


def _format_scan(report: ScanReport) -> List[str]:
    lines = [f"scanned {report.profiles_scanned} profiles "
             f"({', '.join(f'{k}={v}' for k, v in sorted(report.scope.items()))})"]
    lines.append("non-unimodal:")
    for f in report.failures:
        lines.append(f"  {f.key} [{f.parity}] {f.profile}")
    for key in report.missing:
        reason = report.explained.get(key)
        lines.append(f"  listed but unimodal: {key}" + (f" ({reason})" if reason else ""))
    for key in report.extra:
        lines.append(f"  not listed: {key}")
    lines.append(f"type A aggregates log-concave: {'yes' if report.type_a_aggregates_log_concave else 'no'}")
    lines.append("matches published lists" if report.matches else "DIFFERS from published lists")
    return lines


@cli.command()
@click.option("--scan", type=click.Choice(["paper"]), required=True,
              help="Which list to reproduce")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@handle_errors
def check(scan: str, fmt: str):
    """Scan profiles for failures of unimodality and diff against the published lists"""
    report = scan_counterexamples()
    if fmt == "json":
        click.echo(_dump(report.model_dump(mode="json")))
    else:
        for line in _format_scan(report):
            click.echo(line)
    if not report.matches:
        sys.exit(1)


@cli.command()
@click.option("--type", "type_", type=click.Choice(["A", "B", "D"], case_sensitive=False), required=True)
@click.option("--n-range", default="2..6", show_default=True, callback=_range_option,
              help="Ranks, as low..high")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_context
@handle_errors
def bench(ctx: click.Context, type_: str, n_range: Tuple[int, int], fmt: str):
    """Time the recurrence against brute-force enumeration"""
    low, high = n_range
    rows = run_bench(type_, low, high, allow_large=ctx.obj["allow_large"])
    if fmt == "json":
        click.echo(_dump([r.model_dump(mode="json") for r in rows]))
    else:
        click.echo(format_bench(rows))
    if any(r.agree is False for r in rows):
        sys.exit(1)


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
