"""
Pseudo-Voigt Toolkit - command-line entry point

Subcommands: eval, scan, kernel, fit, maxerr.
Exit codes: 0 success, 2 usage, 3 domain, 4 I/O, 5 convergence.
"""
import functools

import click
import pandas as pd

from config import (
    ABS_TOL,
    COARSE_STEPS,
    FIT_T_MAX,
    GAMMA,
    KERNEL_STEPS,
    KERNEL_T_MAX,
    KERNEL_T_MIN,
    VERBOSE,
    X_MAX,
    X_MIN,
    X_STEPS,
    Y_VALUES,
)
from models.arguments import ComplexArgument, PseudoVoigtParams, QuadratureConfig
from models.expansion import PUBLISHED_COEFFICIENTS, KernelExpansion
from models.report import ScanGrid
from services.discrepancy_service import DiscrepancyService, kernel_profile
from services.fit_service import ExpansionFitter
from services.kernel_service import Objective, expansion_objective
from services.pseudo_voigt_service import faddeeva_approx
from utils.errors import ConvergenceError, VoigtError
from utils.helpers import float_format, format_number, log_status, parse_float_list, set_verbose

IO_EXIT_CODE = 4
BANNER = "=" * 70


def handle_errors(func):
    """Map library errors onto exit codes"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except ConvergenceError as e:
            click.echo(str(e), err=True)
            if e.best is not None:
                click.echo(f"best-so-far: {_describe(e.best)}", err=True)
            if e.achieved is not None:
                click.echo(f"achieved: {format_number(e.achieved)}", err=True)
            ctx.exit(e.exit_code)
        except VoigtError as e:
            click.echo(str(e), err=True)
            ctx.exit(e.exit_code)
        except OSError as e:
            click.echo(f"❌ I/O error: {e}", err=True)
            ctx.exit(IO_EXIT_CODE)

    return wrapper


def _describe(best):
    if isinstance(best, KernelExpansion):
        return "; ".join(
            f"alpha_{n}={format_number(alpha)}, beta_{n}={format_number(beta)}"
            for n, (alpha, beta) in enumerate(best.terms)
        )
    return format_number(best)


def _write_csv(df, out):
    """Write a table as CSV to a path, or to stdout for '-'"""
    if out == "-":
        click.echo(df.to_csv(index=False, float_format=float_format(), lineterminator="\n"), nl=False)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        df.to_csv(handle, index=False, float_format=float_format(), lineterminator="\n")
    log_status(f"💾 Wrote {len(df):,} rows to {out}")


def _console(out):
    # keep stdout clean when it carries the CSV
    return functools.partial(click.echo, err=(out == "-"))


def _oracle_config(abs_tol):
    return QuadratureConfig(abs_tol=abs_tol)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--verbose/--quiet", default=VERBOSE, show_default=True, help="Print progress lines to stderr.")
def cli(verbose):
    """Rational pseudo-Voigt approximation of the complex error function w = K + iL,
    with a quadrature reference for measuring its discrepancies."""
    set_verbose(verbose)
    log_status("🚀 PSEUDO-VOIGT TOOLKIT")


@cli.command("eval")
@click.option("--x", type=float, required=True, help="Real part of z.")
@click.option("--y", type=float, required=True, help="Imaginary part of z (>= 0).")
@click.option("--gamma", type=float, default=GAMMA, show_default=True, help="Approximation constant.")
@click.option("--with-ref", is_flag=True, default=False, show_default=True, help="Also evaluate the quadrature reference.")
@click.option("--abs-tol", type=float, default=ABS_TOL, show_default=True, help="Reference quadrature tolerance.")
@handle_errors
def eval_command(x, y, gamma, with_ref, abs_tol):
    """Evaluate K and L at one point."""
    arg = ComplexArgument(x, y)
    params = PseudoVoigtParams(gamma)
    approx = faddeeva_approx(arg, params)

    lines = [("k_approx", approx.re), ("l_approx", approx.im)]
    if with_ref:
        service = DiscrepancyService(params, _oracle_config(abs_tol))
        row = service.evaluate_point(arg.x, arg.y)
        lines += [(key, row[key]) for key in ("k_ref", "l_ref", "delta_re", "delta_im")]

    for label, value in lines:
        click.echo(f"{label}: {format_number(value)}")


@cli.command("scan")
@click.option("--x-min", type=float, default=X_MIN, show_default=True)
@click.option("--x-max", type=float, default=X_MAX, show_default=True)
@click.option("--steps", type=int, default=X_STEPS, show_default=True, help="Number of x nodes, endpoints included.")
@click.option("--y", "y_list", default=",".join(repr(y) for y in Y_VALUES), show_default=True, help="Comma-separated y levels.")
@click.option("--gamma", type=float, default=GAMMA, show_default=True)
@click.option("--abs-tol", type=float, default=ABS_TOL, show_default=True)
@click.option("--out", default="-", show_default=True, help="CSV path, '-' for stdout.")
@handle_errors
def scan_command(x_min, x_max, steps, y_list, gamma, abs_tol, out):
    """Tabulate approximation, reference and absolute differences over a grid."""
    grid = ScanGrid(x_min=x_min, x_max=x_max, x_steps=steps, y_values=tuple(parse_float_list(y_list)))
    params = PseudoVoigtParams(gamma)
    report = DiscrepancyService(params, _oracle_config(abs_tol)).scan(grid)

    _write_csv(report.rows, out)

    say = _console(out)
    say(BANNER)
    say(f"📊 DISCREPANCY SUMMARY (gamma={format_number(params.gamma)}, {len(report.rows):,} rows)")
    say(BANNER)
    for record in report.per_y_maxima().to_dict("records"):
        say(
            f"y={format_number(record['y'])}: "
            f"max delta_re = {format_number(record['max_delta_re'])} at x = {format_number(record['x_at_max_re'])}, "
            f"max delta_im = {format_number(record['max_delta_im'])} at x = {format_number(record['x_at_max_im'])}"
        )
    for label, found in (("delta_re", report.max_re), ("delta_im", report.max_im)):
        say(f"max {label}: {format_number(found.value)} at x={format_number(found.x)}, y={format_number(found.y)}")


@cli.command("kernel")
@click.option("--t-min", type=float, default=KERNEL_T_MIN, show_default=True)
@click.option("--t-max", type=float, default=KERNEL_T_MAX, show_default=True)
@click.option("--steps", type=int, default=KERNEL_STEPS, show_default=True, help="Number of t nodes, endpoints included.")
@click.option("--out", default="-", show_default=True, help="CSV path, '-' for stdout.")
@handle_errors
def kernel_command(t_min, t_max, steps, out):
    """Tabulate the two-term kernel expansion against exp(-t^2)."""
    table = kernel_profile(t_min, t_max, steps)
    _write_csv(table, out)

    worst = int(table["epsilon"].abs().to_numpy().argmax())
    say = _console(out)
    say(
        f"max |epsilon|: {format_number(abs(table['epsilon'].iloc[worst]))} "
        f"at t={format_number(table['t'].iloc[worst])}"
    )


@cli.command("fit")
@click.option("--n-terms", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--t-max", type=float, default=FIT_T_MAX, show_default=True)
@click.option("--objective", type=click.Choice([o.value for o in Objective]), default=Objective.LINF.value, show_default=True)
@click.option("--out", default="-", show_default=True, help="CSV path, '-' for stdout.")
@handle_errors
def fit_command(n_terms, t_max, objective, out):
    """Fit expansion coefficients (alpha_0 fixed at 1)."""
    result = ExpansionFitter().fit(n_terms, t_max, objective)

    _write_csv(pd.DataFrame.from_records(result.expansion.to_records(), columns=["n", "alpha", "beta"]), out)

    say = _console(out)
    for n, (alpha, beta) in enumerate(result.expansion.terms):
        say(f"alpha_{n} = {format_number(alpha)}, beta_{n} = {format_number(beta)}")
    say(f"objective ({result.objective.value}): {format_number(result.value)}")
    if n_terms == PUBLISHED_COEFFICIENTS.n_terms:
        published = expansion_objective(PUBLISHED_COEFFICIENTS, t_max, result.objective)
        say(f"published objective ({result.objective.value}): {format_number(published)}")
    say(f"converged starts: {result.converged_starts}/{result.total_starts}")


@cli.command("maxerr")
@click.option("--y", type=float, default=0.0, show_default=True)
@click.option("--gamma", type=float, default=GAMMA, show_default=True)
@click.option("--x-max", type=float, default=X_MAX, show_default=True)
@click.option("--coarse-steps", type=click.IntRange(min=2), default=COARSE_STEPS, show_default=True)
@click.option("--abs-tol", type=float, default=ABS_TOL, show_default=True)
@handle_errors
def maxerr_command(y, gamma, x_max, coarse_steps, abs_tol):
    """Locate the largest delta_re and delta_im along x at fixed y."""
    service = DiscrepancyService(PseudoVoigtParams(gamma), _oracle_config(abs_tol))
    for component in ("re", "im"):
        value, x_at = service.find_max_discrepancy(y, x_max, coarse_steps, component)
        click.echo(f"max delta_{component}: {format_number(value)} at x={format_number(x_at)}")
    log_status(f"⚡ Oracle cache: {service.oracle.cache.stats()}")


if __name__ == "__main__":
    cli()
