"""
Command-line front end
Generates Legendre polynomials and coefficient tables and runs the
verification suite. Results go to standard output, diagnostics to standard
error. Exit status: 0 all identities hold, 1 an identity failed, 2 usage error.
"""

import logging
from typing import Optional

import typer

from .. import __version__
from ..coefficients import coeff_table_recurrence, reconcile
from ..config import get_settings
from ..errors import LegendreToolkitError
from ..polynomials import LegendreMethod, higher_order_series, legendre
from ..verification import IdentityVerifier, verify_all
from .renderers import (
    OutputFormat,
    render_coeff_table,
    render_polynomial,
    render_polynomial_rows,
    render_reports,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Exact Legendre polynomials and nonlinear ODE identity verification",
    add_completion=False,
    no_args_is_help=True,
)

FORMAT_OPTION = typer.Option(
    OutputFormat.PLAIN, "--format", case_sensitive=False, help="Output format"
)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING, ERROR or CRITICAL"
    ),
    workers: Optional[int] = typer.Option(
        None, "--workers", help="Threads for the verification suite"
    ),
):
    """Configure settings and logging for the invocation"""
    settings = get_settings()
    try:
        settings.override(log_level=log_level, max_workers=workers)
    except ValueError as e:
        raise typer.BadParameter(str(e))
    settings.configure_logging()


@app.command("legendre")
def cmd_legendre(
    n: int = typer.Option(..., "--n", min=0, help="Degree of p_n(x)"),
    method: LegendreMethod = typer.Option(
        LegendreMethod.RECURRENCE, "--method", case_sensitive=False
    ),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Print p_n(x) coefficients, lowest power first"""
    try:
        poly = legendre(n, method)
    except LegendreToolkitError as e:
        raise typer.BadParameter(str(e))
    typer.echo(
        render_polynomial(poly, f"p_{{{n}}}(x)", fmt, n=n, method=method.value)
    )


@app.command("coeffs")
def cmd_coeffs(
    n_max: int = typer.Option(..., "--n-max", min=1, help="Highest row N"),
    check_closed_form: bool = typer.Option(
        False, "--check-closed-form", help="Append closed-form reconciliation"
    ),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Print the coefficient triangle a_i(N)"""
    table = coeff_table_recurrence(n_max)
    reconciliation = reconcile(n_max, table) if check_closed_form else None
    typer.echo(render_coeff_table(table, fmt, reconciliation))


@app.command("higher")
def cmd_higher(
    alpha: int = typer.Option(
        ..., "--alpha", min=1, help="Power of the generating function"
    ),
    order: Optional[int] = typer.Option(
        None, "--order", min=0, help="Emit rows n = 0 .. order"
    ),
    via_explicit_sum: bool = typer.Option(
        False,
        "--via-explicit-sum",
        help="Build rows from the explicit identity (alpha odd, at least 3)",
    ),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Print higher-order Legendre polynomials p_n^(alpha)(x)"""
    if order is None:
        order = get_settings().compute.default_order

    if via_explicit_sum:
        if alpha < 3 or alpha % 2 == 0:
            raise typer.BadParameter(
                "--via-explicit-sum needs an odd alpha of at least 3"
            )
        verifier = IdentityVerifier()
        big_n = (alpha - 1) // 2
        polys = [verifier.explicit_sum_polynomial(n, big_n) for n in range(order + 1)]
    else:
        polys = list(higher_order_series(alpha, order).coeffs)

    typer.echo(
        render_polynomial_rows(
            polys,
            lambda n: f"p_{{{n}}}^{{({alpha})}}(x)",
            fmt,
            alpha=alpha,
            order=order,
        )
    )


@app.command("verify")
def cmd_verify(
    n_max: Optional[int] = typer.Option(None, "--n-max", min=0, help="Highest n"),
    big_n_max: Optional[int] = typer.Option(None, "--N-max", min=1, help="Highest N"),
    order: Optional[int] = typer.Option(
        None, "--order", min=0, help="Truncation order M, at least N-max"
    ),
    supplementary: bool = typer.Option(
        False,
        "--supplementary",
        help="Also check the induction step, generating function and closed forms",
    ),
    fmt: OutputFormat = FORMAT_OPTION,
):
    """Run the verification suite; exit 1 if any identity fails"""
    compute = get_settings().compute
    n_max = compute.default_n_max if n_max is None else n_max
    big_n_max = compute.default_big_n_max if big_n_max is None else big_n_max
    order = compute.default_order if order is None else order

    if order < big_n_max:
        raise typer.BadParameter(
            f"--order ({order}) must be at least --N-max ({big_n_max})"
        )

    try:
        reports = verify_all(
            n_max, big_n_max, order, include_supplementary=supplementary
        )
    except LegendreToolkitError as e:
        raise typer.BadParameter(str(e))

    typer.echo(render_reports(reports, fmt))

    failed = [r for r in reports if not r.passed]
    if failed:
        logger.error(f"{len(failed)} of {len(reports)} identities failed")
        raise typer.Exit(code=1)


@app.command("version")
def cmd_version():
    """Print the package version"""
    typer.echo(__version__)


if __name__ == "__main__":
    app()
