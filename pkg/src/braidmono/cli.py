"""Command-line interface for braidmono."""

import asyncio
import logging
import sys
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from braidmono import __version__
from braidmono.cache import SqliteBraidCache
from braidmono.config import settings
from braidmono.curves import FIXTURES, fixture_names
from braidmono.exactpoly import BivariatePoly, discriminant_y
from braidmono.exceptions import BraidMonoError
from braidmono.models import PipelineConfig
from braidmono.newtonpuiseux import classify_fiber_point, local_contributions, puiseux_expansions
from braidmono.numroots import isolate_complex_roots
from braidmono.pathtrack import certify_real_segment
from braidmono.pipeline import run_pipeline
from braidmono.reporting import emit_report

logger = logging.getLogger(__name__)

EXIT_INCONCLUSIVE = 2


@click.group()
@click.version_option(version=__version__)
@click.option(
    "-v",
    "--verbose",
    is_flag=True,
    help="Enable verbose logging",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """braidmono - braid monodromy and fundamental groups of plane curve complements."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose

    log_level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper())
    logging.basicConfig(
        level=log_level,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )


def _curve_options(command: Any) -> Any:
    """Shared --curve/--expr/--fixture options."""
    for option in reversed(
        [
            click.option(
                "--curve",
                "curve_file",
                type=click.Path(exists=True, dir_okay=False, path_type=Path),
                help="File holding the polynomial",
            ),
            click.option("--expr", "curve_text", help="Polynomial given inline, e.g. 'y^2 - x'"),
            click.option(
                "--fixture",
                type=click.Choice(fixture_names()),
                help="Shipped curve",
            ),
        ]
    ):
        command = option(command)
    return command


def _load_curve(
    curve_file: Path | None, curve_text: str | None, fixture: str | None
) -> BivariatePoly:
    try:
        cfg = PipelineConfig(
            curve_file=curve_file, curve_text=curve_text, fixture=fixture, use_cache=False
        )
        return cfg.load_curve()
    except ValidationError as e:
        raise click.ClickException(_validation_message(e)) from e
    except BraidMonoError as e:
        raise click.ClickException(str(e)) from e


def _validation_message(error: ValidationError) -> str:
    return "; ".join(str(item["msg"]).removeprefix("Value error, ") for item in error.errors())


@cli.command()
@_curve_options
@click.option("--epsilon", help="Lasso head radius as an exact rational")
@click.option("--basepoint", help="Real basepoint as an exact rational")
@click.option(
    "--basepoint-side",
    type=click.Choice(["left", "right"]),
    help="Side of the anchoring real singular value for the default basepoint",
)
@click.option("--precision-bits", type=int, help="Starting working precision")
@click.option("--precision-ceiling", type=int, help="Largest working precision")
@click.option("--coset-bound", type=int, help="Coset enumeration bound")
@click.option(
    "--quotients",
    default="d10",
    show_default=True,
    help="Comma separated quotient targets (named groups or table files)",
)
@click.option("--alexander", is_flag=True, help="Compute the Alexander polynomial")
@click.option("--shear", help="Apply x -> x + a*y with this exact rational a first")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "structured"]),
    default="text",
    show_default=True,
)
@click.option(
    "--dump-trajectories",
    type=click.Path(file_okay=False, path_type=Path),
    help="Write tracked fiber roots of each lasso into this directory",
)
@click.option("--certify-segments", is_flag=True, help="Certify real segments for overcrossings")
@click.option("--redundancy", is_flag=True, help="Report lassos implied by the others")
@click.option(
    "--local-braids", is_flag=True, help="Check local half twists at rational singular points"
)
@click.option("--no-cache", is_flag=True, help="Do not read or write the braid cache")
@click.option("--timing", is_flag=True, help="Include stage timings in the report")
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the report to this file instead of stdout",
)
def run(
    curve_file: Path | None,
    curve_text: str | None,
    fixture: str | None,
    epsilon: str | None,
    basepoint: str | None,
    basepoint_side: str | None,
    precision_bits: int | None,
    precision_ceiling: int | None,
    coset_bound: int | None,
    quotients: str,
    alexander: bool,
    shear: str | None,
    output_format: str,
    dump_trajectories: Path | None,
    certify_segments: bool,
    redundancy: bool,
    local_braids: bool,
    no_cache: bool,
    timing: bool,
    output: Path | None,
) -> None:
    """Compute braid monodromy and the fundamental group of a curve complement.

    Exits with status 2 when the result is inconclusive (precision ceiling
    or coset bound reached).

    Example:
        braidmono run --fixture Cprime --alexander --format structured
    """
    options: dict[str, Any] = {
        "curve_file": curve_file,
        "curve_text": curve_text,
        "fixture": fixture,
        "epsilon": epsilon,
        "basepoint": basepoint,
        "shear": shear,
        "quotients": quotients,
        "alexander": alexander,
        "certify_segments": certify_segments,
        "check_redundancy": redundancy,
        "check_local_braids": local_braids,
        "dump_trajectories": dump_trajectories,
        "output_format": output_format,
        "timing": timing,
    }
    if basepoint_side is not None:
        options["basepoint_side"] = 1 if basepoint_side == "right" else -1
    if no_cache:
        options["use_cache"] = False
    for name, value in (
        ("precision_bits", precision_bits),
        ("precision_ceiling", precision_ceiling),
        ("coset_bound", coset_bound),
    ):
        if value is not None:
            options[name] = value
    try:
        cfg = PipelineConfig(**options)
    except ValidationError as e:
        raise click.ClickException(_validation_message(e)) from e

    try:
        report = asyncio.run(run_pipeline(cfg))
    except BraidMonoError as e:
        raise click.ClickException(str(e)) from e

    data = emit_report(report, cfg.output_format, timing=cfg.timing)
    if output is not None:
        output.write_bytes(data)
        logger.info("report written to %s", output)
    else:
        click.echo(data.decode("utf-8"), nl=False)
    if not report.is_conclusive:
        logger.warning("result is inconclusive")
        sys.exit(EXIT_INCONCLUSIVE)


@cli.command()
def fixtures() -> None:
    """List the shipped curves."""
    for name in fixture_names():
        fixture = FIXTURES[name]
        click.echo(f"{name}: {fixture.description}")


@cli.command()
@_curve_options
@click.option("--precision-bits", type=int, default=lambda: settings.precision_bits)
def discriminant(
    curve_file: Path | None, curve_text: str | None, fixture: str | None, precision_bits: int
) -> None:
    """Print the discriminant factorization and its certified roots."""
    curve = _load_curve(curve_file, curve_text, fixture)
    try:
        disc = discriminant_y(curve)
        roots = isolate_complex_roots(disc, precision_bits, settings.precision_ceiling)
    except BraidMonoError as e:
        raise click.ClickException(str(e)) from e
    click.echo(f"degree {disc.degree}")
    for factor, multiplicity in disc.squarefree_factors():
        click.echo(f"({factor.as_expr()})^{multiplicity}")
    for index, (disk, multiplicity) in enumerate(
        zip(roots.disks, roots.multiplicities, strict=True), start=1
    ):
        click.echo(f"eta{index} = {disk.describe(12)}  multiplicity {multiplicity}")


@cli.command()
@_curve_options
@click.option("--x", "x_value", required=True, help="Exact rational x coordinate")
@click.option("--y", "y_value", help="Exact rational y coordinate (all special points if omitted)")
@click.option("--order", type=int, default=6, show_default=True, help="Puiseux truncation order")
def classify(
    curve_file: Path | None,
    curve_text: str | None,
    fixture: str | None,
    x_value: str,
    y_value: str | None,
    order: int,
) -> None:
    """Classify special points on a vertical line and print their Puiseux branches."""
    curve = _load_curve(curve_file, curve_text, fixture)
    try:
        if y_value is None:
            contributions = local_contributions(curve, x_value)
            total = sum(contributions.values())
            for (a, b), value in contributions.items():
                kind = classify_fiber_point(curve, (a, b))
                label = kind.label if kind is not None else "transversal"
                click.echo(f"({a}, {b}): {label}, discriminant contribution {value}")
            click.echo(f"total contribution over x = {x_value}: {total}")
            return
        kind = classify_fiber_point(curve, (x_value, y_value))
        click.echo(f"type: {kind.label if kind is not None else 'transversal'}")
        for branch in puiseux_expansions(curve, (x_value, y_value), order):
            click.echo(branch.describe())
    except (BraidMonoError, ValueError) as e:
        raise click.ClickException(str(e)) from e


@cli.command("certify-segment")
@_curve_options
@click.option("--lower", required=True, help="Left end of the real segment")
@click.option("--upper", required=True, help="Right end of the real segment")
def certify_segment(
    curve_file: Path | None,
    curve_text: str | None,
    fixture: str | None,
    lower: str,
    upper: str,
) -> None:
    """Certify vertical alignments of four or more fiber roots over a real segment."""
    curve = _load_curve(curve_file, curve_text, fixture)
    try:
        certificate = certify_real_segment(curve, lower, upper)
    except (BraidMonoError, ValueError) as e:
        raise click.ClickException(str(e)) from e
    click.echo(f"resultant roots on [{lower}, {upper}]: {certificate.resultant_root_count}")
    for candidate in certificate.candidates:
        marker = "alignment" if candidate.is_event else "no alignment"
        click.echo(
            f"x0 = {candidate.x0:.6f}, u0 = {candidate.u0}: {candidate.aligned} aligned ({marker})"
        )


@cli.command("clear-cache")
def clear_cache() -> None:
    """Delete all cached braid words."""

    async def _clear() -> int:
        cache = SqliteBraidCache(settings.cache_db_path)
        try:
            return await cache.clear()
        finally:
            await cache.close()

    removed = asyncio.run(_clear())
    click.echo(f"removed {removed} cached braids")


def main() -> None:
    """Main entry point for CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
