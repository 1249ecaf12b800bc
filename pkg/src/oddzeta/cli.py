"""Command-line interface for oddzeta."""

import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn

from . import __version__
from .bernoulli import load_cache, precompute, set_default_cache
from .config import Settings, load_settings
from .errors import (
    CacheFormatError,
    CacheIntegrityError,
    ConfigurationError,
    PrecisionShortfallError,
    PreconditionError,
)
from .identities import (
    COMPLEX_IDENTITIES,
    IdentityCase,
    IdentityId,
    validity_entry,
    validity_table,
    verify_batch,
)
from .output import (
    FORMATS,
    Report,
    bench_record,
    coefficient_records,
    eval_record,
    format_report,
    residual_record,
    trace_record,
    validity_record,
)
from .reference import TWIST_MODULI
from .series import (
    SeriesFamily,
    bench,
    convergence_trace,
    family_coefficients,
    terms_ordering_holds,
    zeta_odd,
    zeta_odd_ladder,
)
from .series.bench import DECAY_ORDER

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SHORTFALL = 2
EXIT_USAGE = 64
EXIT_PRECONDITION = 65
EXIT_INTERRUPT = 130

console = Console(stderr=True)
logger = logging.getLogger("oddzeta")

_FAMILIES = [family.value for family in SeriesFamily]
_TWISTED_ONLY = (IdentityId.T4_3, IdentityId.T4_9_A, IdentityId.T4_9_B, IdentityId.T4_9_C)
_S_INDEXED = (*COMPLEX_IDENTITIES, IdentityId.L4_1_A, IdentityId.L4_1_B, IdentityId.L4_1_C)
_R_INDEXED = (IdentityId.T3_5_COS, IdentityId.T3_5_SIN, IdentityId.L4_2, IdentityId.T4_1)


class RationalParam(click.ParamType):
    """Exact rational given as ``p/q``, an integer or a terminating decimal."""

    name = "rational"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Any:
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational like 1/3", param, ctx)


class ComplexParam(click.ParamType):
    """Exponent s: exact when rational, otherwise a complex literal like ``2.5+1.5j``."""

    name = "complex"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Any:
        if not isinstance(value, str):
            return value
        text = value.strip().replace(" ", "")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
        try:
            return complex(text.replace("i", "j"))
        except ValueError:
            self.fail(f"{value!r} is not a real or complex number", param, ctx)


RATIONAL = RationalParam()
COMPLEX = ComplexParam()


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _settings(ctx: click.Context, **overrides: Any) -> Settings:
    settings: Settings = ctx.obj["settings"]
    return settings.with_overrides(**overrides)


def _use_cache(settings: Settings) -> None:
    """Seed the in-memory Bernoulli cache from the cache file when it exists."""
    if settings.cache_path.exists():
        set_default_cache(load_cache(settings.cache_path))
        logger.debug("using bernoulli cache %s", settings.cache_path)


def _command_echo(ctx: click.Context) -> str:
    parts = [ctx.command_path]
    for name, value in ctx.params.items():
        if value is None or value is False or value == ():
            continue
        if isinstance(value, tuple):
            value = ",".join(str(v) for v in value)
        parts.append(f"--{name}={value}")
    return " ".join(parts)


def _emit(report: Report, fmt: str, output: Path | None) -> None:
    text = format_report(report, fmt, output)
    if output is None:
        click.echo(text, nl=False)
    else:
        console.print(f"[green]✓[/green] Wrote {fmt} report to {output}")


def _report_options(func: Any) -> Any:
    """Options shared by every verb that writes a report."""
    func = click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write the report here instead of stdout",
    )(func)
    func = click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default="json",
        show_default=True,
        help="Report format",
    )(func)
    func = click.option(
        "--digits",
        type=click.IntRange(min=1),
        default=None,
        help="Target decimal digits (default from settings, 50)",
    )(func)
    return func


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--config",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="YAML settings file",
)
@click.option(
    "--cache-path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Bernoulli cache file (overrides ODDZETA_CACHE_PATH)",
)
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx: click.Context, config: Path | None, cache_path: Path | None, verbose: bool) -> None:
    """
    oddzeta: rapidly converging series for odd zeta values.

    Example usage:

        oddzeta compute zeta3 --family m6 --digits 50

        oddzeta verify --identity T4.3 --all-m --digits 30

        oddzeta bench --families ewell,ck,m3,m4,m6 --format csv
    """
    _configure_logging(verbose)
    settings = load_settings(config).with_overrides(cache_path=cache_path)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@cli.command()
@click.argument("target", type=click.Choice(["zeta3", "zeta-odd", "ladder"]))
@click.option(
    "--family",
    type=click.Choice(_FAMILIES),
    default=SeriesFamily.M6.value,
    show_default=True,
    help="Series family",
)
@click.option(
    "--r", "r", type=click.IntRange(min=1), default=1, show_default=True, help="Order for zeta-odd"
)
@click.option(
    "--rmax", type=click.IntRange(min=1), default=3, show_default=True, help="Top order for ladder"
)
@click.option(
    "--trace",
    "trace_range",
    type=(click.IntRange(min=1), click.IntRange(min=2)),
    default=None,
    help="Also record term decay over K_START K_STOP",
)
@_report_options
@click.pass_context
def compute(
    ctx: click.Context,
    target: str,
    family: str,
    r: int,
    rmax: int,
    trace_range: tuple[int, int] | None,
    digits: int | None,
    fmt: str,
    output: Path | None,
) -> int:
    """Evaluate ζ(3), ζ(2r+1) or the ladder ζ(3)..ζ(2rmax+1)."""
    settings = _settings(ctx, digits=digits)
    _use_cache(settings)
    precision = settings.context()
    series = SeriesFamily(family)

    if target == "zeta3":
        reports = [zeta_odd(1, series, precision)]
    elif target == "zeta-odd":
        reports = [zeta_odd(r, series, precision)]
    else:
        reports = zeta_odd_ladder(rmax, series, precision)

    report = Report(command=_command_echo(ctx), results=[eval_record(e) for e in reports])
    if trace_range is not None:
        for e in reports:
            trace = convergence_trace(series, e.r, trace_range, precision)
            report.results.append(trace_record(trace))

    _emit(report, fmt, output)
    for e in reports:
        if e.certified_digits >= e.target_digits:
            continue
        console.print(
            f"[yellow]Warning:[/yellow] ζ({e.argument}) certified to {e.certified_digits} "
            f"of {e.target_digits} digits"
        )
    return EXIT_OK


def _cases(
    identities: Sequence[IdentityId],
    xs: Sequence[Fraction],
    ss: Sequence[Any],
    rs: Sequence[int],
    all_m: bool,
    N: int,
    K: int,
) -> list[IdentityCase]:
    """Expand selectors and parameter values into a case grid."""
    cases: list[IdentityCase] = []
    for identity in identities:
        entry = validity_entry(identity)
        if identity in _TWISTED_ONLY:
            chosen = identity is IdentityId.T4_3 and xs and not all_m
            x_values: Sequence[Fraction | None] = list(xs) if chosen else list(entry.fixed)
        else:
            x_values = list(xs) or [None]

        if identity in _S_INDEXED:
            if not ss:
                raise ConfigurationError(f"{identity.value} needs at least one --s")
            if identity in COMPLEX_IDENTITIES and identity not in _TWISTED_ONLY and not xs:
                raise ConfigurationError(f"{identity.value} needs at least one --x")
            if identity not in COMPLEX_IDENTITIES:
                x_values = [None]
            cases.extend(
                IdentityCase(identity=identity, s=s, x=x, N=N, K=K) for s in ss for x in x_values
            )
            continue

        if x_values == [None]:
            raise ConfigurationError(f"{identity.value} needs at least one --x")
        if identity in _R_INDEXED:
            cases.extend(
                IdentityCase(identity=identity, r=r, x=x, N=N, K=K)
                for r in (rs or (1,))
                for x in x_values
            )
        else:
            cases.extend(IdentityCase(identity=identity, x=x, N=N, K=K) for x in x_values)
    return cases


@cli.command()
@click.option(
    "--identity",
    "identity_names",
    multiple=True,
    required=True,
    help="Identity or family (T3.5, L4.1, T4.9, ...); repeatable",
)
@click.option("--x", "xs", type=RATIONAL, multiple=True, help="Rational parameter p/q; repeatable")
@click.option(
    "--s", "ss", type=COMPLEX, multiple=True, help="Exponent, e.g. 4 or 2.5+1.5j; repeatable"
)
@click.option("--r", "rs", type=click.IntRange(min=1), multiple=True, help="Order; repeatable")
@click.option("--all-m", is_flag=True, help="Run T4.3/T4.9 at every m in {3, 4, 6}")
@click.option("--N", "n_terms", type=click.IntRange(min=1), default=None, help="Fourier terms")
@click.option("--K", "k_terms", type=click.IntRange(min=1), default=None, help="Power-series terms")
@_report_options
@click.pass_context
def verify(
    ctx: click.Context,
    identity_names: tuple[str, ...],
    xs: tuple[Fraction, ...],
    ss: tuple[Any, ...],
    rs: tuple[int, ...],
    all_m: bool,
    n_terms: int | None,
    k_terms: int | None,
    digits: int | None,
    fmt: str,
    output: Path | None,
) -> int:
    """Check identities numerically over a grid of parameters."""
    settings = _settings(ctx, digits=digits, fourier_terms=n_terms, power_terms=k_terms)
    _use_cache(settings)
    precision = settings.context()

    identities: list[IdentityId] = []
    for name in identity_names:
        for identity in IdentityId.parse(name):
            if identity not in identities:
                identities.append(identity)
    cases = _cases(identities, xs, ss, rs, all_m, settings.fourier_terms, settings.power_terms)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        progress.add_task(f"[cyan]Verifying {len(cases)} cases...", total=None)
        residuals = verify_batch(cases, precision, settings.max_workers)

    report = Report(
        command=_command_echo(ctx),
        results=[residual_record(res, settings.digits) for res in residuals],
    )
    report.results.extend(validity_record(validity_entry(i)) for i in identities)

    failed = [res for res in residuals if res.failed_gate]
    for res in failed:
        console.print(
            f"[red]✗[/red] {res.case.case_id}: residual "
            f"{precision.mp.nstr(res.abs_residual, 5)} > bound "
            f"{precision.mp.nstr(res.expected_bound, 5)}"
        )
    _emit(report, fmt, output)
    if failed:
        ctx.exit(EXIT_FAILURE)
    console.print(f"[green]✓[/green] {len(residuals)} cases within budget")
    return EXIT_OK


@cli.command("bench")
@click.option(
    "--families",
    default=None,
    help="Comma-separated families (default ewell,ck,m3,m4,m6; ewell dropped for r > 1)",
)
@click.option("--r", "r", type=click.IntRange(min=1), default=1, show_default=True, help="Order")
@_report_options
@click.pass_context
def bench_command(
    ctx: click.Context,
    families: str | None,
    r: int,
    digits: int | None,
    fmt: str,
    output: Path | None,
) -> int:
    """Terms and wall time each family needs for the target digits."""
    settings = _settings(ctx, digits=digits)
    _use_cache(settings)
    if families is None:
        chosen = [f for f in DECAY_ORDER if r == 1 or f is not SeriesFamily.EWELL]
    else:
        names = [name.strip().lower() for name in families.split(",") if name.strip()]
        unknown = [name for name in names if name not in _FAMILIES]
        if unknown:
            raise click.BadParameter(
                f"unknown families {', '.join(unknown)}; valid: {', '.join(_FAMILIES)}",
                param_hint="--families",
            )
        chosen = [SeriesFamily(name) for name in names]

    rows = bench(chosen, settings.digits, r=r, max_workers=settings.max_workers)
    if not terms_ordering_holds(rows):
        logger.warning("terms-to-digits ordering across families does not hold")
    report = Report(command=_command_echo(ctx), results=[bench_record(row) for row in rows])
    _emit(report, fmt, output)
    return EXIT_OK


@cli.command()
@click.option("--rmax", type=click.IntRange(min=2), default=4, show_default=True, help="Top order")
@click.option("--validity", is_flag=True, help="Print the identity validity intervals instead")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default="markdown",
    show_default=True,
    help="Report format",
)
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
def table(ctx: click.Context, rmax: int, validity: bool, fmt: str, output: Path | None) -> int:
    """Exact recurrence coefficients for r in [2, rmax] and m in {3, 4, 6}."""
    report = Report(command=_command_echo(ctx))
    if validity:
        report.results.extend(validity_record(entry) for entry in validity_table())
    else:
        for r in range(2, rmax + 1):
            for m in TWIST_MODULI:
                coeffs = family_coefficients(SeriesFamily.for_modulus(m), r)
                report.results.extend(coefficient_records(coeffs))
    _emit(report, fmt, output)
    return EXIT_OK


@cli.command()
@click.option(
    "--precompute",
    "precompute_n",
    type=click.IntRange(min=0),
    default=None,
    help="Grow the cache file to cover B_0..B_N",
)
@click.pass_context
def cache(ctx: click.Context, precompute_n: int | None) -> int:
    """Precompute or validate the Bernoulli cache file."""
    settings = _settings(ctx)
    path = settings.cache_path
    if precompute_n is not None:
        stored = precompute(precompute_n, path)
        console.print(
            f"[green]✓[/green] {path}: {len(stored.even_entries)} even-index entries "
            f"(high water {stored.high_water})"
        )
        return EXIT_OK
    stored = load_cache(path)
    console.print(f"[green]✓[/green] {path} is valid (high water {stored.high_water})")
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI and translate errors into exit codes.

    Args:
        argv: Arguments after the program name; defaults to sys.argv[1:]

    Returns:
        0 success, 1 verification or cache failure, 2 precision shortfall,
        64 usage or configuration error, 65 precondition violation,
        130 interrupted
    """
    try:
        code = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
        return code if isinstance(code, int) else EXIT_OK
    except click.exceptions.Abort:
        console.print("\n[yellow]Interrupted by user[/yellow]")
        return EXIT_INTERRUPT
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted by user[/yellow]")
        return EXIT_INTERRUPT
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except PrecisionShortfallError as e:
        console.print(f"[red]Precision shortfall:[/red] {e}")
        return EXIT_SHORTFALL
    except PreconditionError as e:
        console.print(f"[red]Precondition violated:[/red] {e}")
        return EXIT_PRECONDITION
    except ConfigurationError as e:
        console.print(f"[red]Error:[/red] {e}")
        return EXIT_USAGE
    except (CacheFormatError, CacheIntegrityError, FileNotFoundError) as e:
        console.print(f"[red]Cache error:[/red] {e}")
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
