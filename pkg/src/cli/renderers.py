"""
Output renderers for the command-line front end
Every number is written as an exact "p/q" fraction string; no floats.
"""

import csv
import io
import json
from enum import Enum
from typing import Callable, Iterable, List, Optional, Sequence

from ..algebra import Poly
from ..arithmetic import format_rational
from ..coefficients import CoeffTable, ReconciliationReport
from ..verification import VerifyReport


class OutputFormat(str, Enum):
    """Rendering formats; PLAIN is the default"""

    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"


def _coefficient_strings(poly: Poly) -> List[str]:
    if poly.is_zero():
        return ["0"]
    return [format_rational(c) for c in poly.coeffs]


def _csv_lines(rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def latex_rational(value) -> str:
    text = format_rational(value)
    if "/" not in text:
        return text
    numerator, denominator = text.split("/")
    sign = ""
    if numerator.startswith("-"):
        sign, numerator = "-", numerator[1:]
    return f"{sign}\\frac{{{numerator}}}{{{denominator}}}"


def latex_poly(poly: Poly) -> str:
    """Polynomial in x, highest power first"""
    if poly.is_zero():
        return "0"
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coefficient(k)
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = latex_rational(magnitude)
        else:
            power = "x" if k == 1 else f"x^{{{k}}}"
            body = power if magnitude == 1 else f"{latex_rational(magnitude)} {power}"
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms)


def render_polynomial(poly: Poly, label: str, fmt: OutputFormat, **meta) -> str:
    """
    Render a single polynomial

    Args:
        poly: Polynomial to render
        label: LaTeX left-hand side, e.g. "p_{2}(x)"
        fmt: Output format
        **meta: Extra integer/string fields for JSON output

    Returns:
        Rendered text without trailing newline
    """
    coefficients = _coefficient_strings(poly)
    if fmt is OutputFormat.JSON:
        return _dump_json({**meta, "coefficients": coefficients})
    if fmt is OutputFormat.CSV:
        return _csv_lines([coefficients])
    if fmt is OutputFormat.LATEX:
        return f"\\[ {label} = {latex_poly(poly)} \\]"
    return " ".join(coefficients)


def render_polynomial_rows(
    polys: Sequence[Poly], label: Callable[[int], str], fmt: OutputFormat, **meta
) -> str:
    """
    Render a list of polynomials, one row per index n

    Args:
        polys: Polynomials indexed by n
        label: Maps n to the LaTeX left-hand side
        fmt: Output format
        **meta: Extra fields for JSON output
    """
    rows = [_coefficient_strings(p) for p in polys]
    if fmt is OutputFormat.JSON:
        return _dump_json({**meta, "rows": rows})
    if fmt is OutputFormat.CSV:
        return _csv_lines(rows)
    if fmt is OutputFormat.LATEX:
        lines = [
            f"{label(n)} &= {latex_poly(p)} \\\\"
            for n, p in enumerate(polys)
        ]
        return "\\begin{align*}\n" + "\n".join(lines) + "\n\\end{align*}"
    return "\n".join(f"{n}: {' '.join(row)}" for n, row in enumerate(rows))


def render_coeff_table(
    table: CoeffTable,
    fmt: OutputFormat,
    reconciliation: Optional[ReconciliationReport] = None,
) -> str:
    """Render triangle rows, optionally followed by the reconciliation section"""
    rows = [[str(a) for a in row] for row in table.rows]

    if fmt is OutputFormat.JSON:
        payload = {"n_max": table.n_max, "rows": [list(row) for row in table.rows]}
        if reconciliation is not None:
            payload["reconciliation"] = {
                "consistent": reconciliation.consistent,
                **reconciliation.model_dump(mode="json"),
            }
        return _dump_json(payload)

    if fmt is OutputFormat.CSV:
        body = _csv_lines(rows)
    elif fmt is OutputFormat.LATEX:
        width = table.n_max
        lines = [" & ".join(row + [""] * (width - len(row))) + " \\\\" for row in rows]
        body = (
            f"\\begin{{array}}{{{'r' * width}}}\n"
            + "\n".join(lines)
            + "\n\\end{array}"
        )
    else:
        body = "\n".join(" ".join(row) for row in rows)

    if reconciliation is None:
        return body
    return body + "\n" + render_reconciliation(reconciliation, fmt)


def render_reconciliation(report: ReconciliationReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        header = ["i", "N", "recurrence", "direct_form", "shifted_form"]
        rows = [
            [
                str(value)
                for value in (m.i, m.N, m.recurrence, m.direct_form, m.shifted_form)
            ]
            for m in report.mismatches
        ]
        return _csv_lines([header] + rows)
    prefix = "% " if fmt is OutputFormat.LATEX else ""
    if report.consistent:
        return (
            f"{prefix}reconciliation: consistent "
            f"({report.entries_checked} entries, N <= {report.n_max})"
        )
    lines = [f"{prefix}reconciliation: {len(report.mismatches)} mismatch(es)"]
    for m in report.mismatches:
        lines.append(
            f"{prefix}a_{m.i}({m.N}): recurrence={m.recurrence} "
            f"direct={m.direct_form} shifted={m.shifted_form}"
        )
    return "\n".join(lines)


def _params_text(report: VerifyReport) -> str:
    return " ".join(f"{key}={value}" for key, value in report.params.items())


def render_reports(reports: Sequence[VerifyReport], fmt: OutputFormat) -> str:
    """
    Render verification reports

    JSON output is one canonical object per line with sorted keys, so parsing
    and re-rendering reproduces it byte for byte.
    """
    if fmt is OutputFormat.JSON:
        return "\n".join(_dump_json(r.to_json_dict()) for r in reports)

    if fmt is OutputFormat.CSV:
        header = ["identity_id", "params", "passed", "t_power", "x_power", "lhs", "rhs"]
        rows = []
        for r in reports:
            failure = r.first_failure
            rows.append(
                [
                    r.identity_id.value,
                    ";".join(f"{k}={v}" for k, v in r.params.items()),
                    "true" if r.passed else "false",
                    "" if failure is None else str(failure.t_power),
                    "" if failure is None else str(failure.x_power),
                    "" if failure is None else failure.lhs,
                    "" if failure is None else failure.rhs,
                ]
            )
        return _csv_lines([header] + rows)

    if fmt is OutputFormat.LATEX:
        lines = [
            f"\\texttt{{{r.identity_id.value}}} & {_params_text(r)} & "
            f"{'pass' if r.passed else 'fail'} \\\\"
            for r in reports
        ]
        return "\\begin{tabular}{lll}\n" + "\n".join(lines) + "\n\\end{tabular}"

    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.identity_id.value} {_params_text(r)}"
        if r.first_failure is not None:
            f = r.first_failure
            line += f" at t^{f.t_power} x^{f.x_power}: lhs={f.lhs} rhs={f.rhs}"
        if r.detail:
            line += f" ({r.detail})"
        lines.append(line)
    return "\n".join(lines)


def parse_reports_json(text: str) -> List[VerifyReport]:
    """Parse the JSON Lines output of render_reports"""
    return [
        VerifyReport.model_validate(json.loads(line))
        for line in text.splitlines()
        if line.strip()
    ]
