"""
Closed-form nested sums for a_i(N) and their reconciliation with the recurrence

Unrolling a_i(N+1) = (2N-i) a_i(N) + a_{i-1}(N) down to the diagonal and
then recursing into a_{i-1}, a_{i-2}, ... a_1 gives a nested sum of depth
i-1. Two indexings of that sum are evaluated independently: the N-indexed
form and the (N+1)-indexed form it is obtained from. Both are compared with
the recurrence, which is the ground truth.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from pydantic import BaseModel, Field

from ..arithmetic import angle_bracket, double_factorial
from ..errors import CoefficientIndexError
from .triangle import CoeffTable, coeff_table_recurrence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NestedSumLayout:
    """
    Constants of one indexing of the nested sum for a_i(top + top_shift)

    At depth j (1-based) with running sum sigma = l_1 + ... + l_{j-1}:
      range      l_j = 0 .. top - sigma - i + bound_shift
      factor     2 top - 2 sigma - 2 l_j - i + factor_shift - j
      bracket    <2(top - sigma) - i + factor_shift - j>_{l_j}
      last term  (2(top - sigma - l_{i-1} - i) + final_shift)!!
    """

    top_shift: int
    bound_shift: int
    factor_shift: int
    final_shift: int


# a_i(N) written directly in N
DIRECT_LAYOUT = NestedSumLayout(
    top_shift=0, bound_shift=-1, factor_shift=-1, final_shift=-1
)
# a_i(N+1) written in N, evaluated with N-1 in place of N
SHIFTED_LAYOUT = NestedSumLayout(
    top_shift=1, bound_shift=0, factor_shift=1, final_shift=1
)


def _evaluate_nested(i: int, top: int, layout: NestedSumLayout) -> int:
    def level(j: int, sigma: int, weight: int) -> int:
        upper = top - sigma - i + layout.bound_shift
        offset = -i + layout.factor_shift - j

        product = 1
        for step in range(upper + 1):
            product *= 2 * (top - sigma - step) + offset
        total = weight * product

        for step in range(upper + 1):
            bracket = weight * angle_bracket(top - sigma, offset, step)
            if j < i - 1:
                total += level(j + 1, sigma + step, bracket)
            else:
                tail = double_factorial(
                    2 * (top - sigma - step - i) + layout.final_shift
                )
                total += bracket * int(tail)
        return total

    return level(1, 0, 1)


def _check_range(i: int, N: int) -> None:
    if N < 1 or not 1 <= i <= N:
        raise CoefficientIndexError(f"Need 1 <= i <= N, got i={i}, N={N}")


def coeff_closed_form(i: int, N: int) -> int:
    """
    a_i(N) from the N-indexed closed form

    Args:
        i: Column, 1 <= i <= N
        N: Row

    Returns:
        (2N-3)!! for i = 1, 1 for i = N, otherwise the nested sum

    Raises:
        CoefficientIndexError: If i is outside 1..N
    """
    _check_range(i, N)
    if i == 1:
        return int(double_factorial(2 * N - 3))
    if i == N:
        return 1
    return _evaluate_nested(i, N - DIRECT_LAYOUT.top_shift, DIRECT_LAYOUT)


def coeff_closed_form_shifted(i: int, N: int) -> int:
    """a_i(N) from the (N+1)-indexed unrolled form, i.e. evaluated at N-1"""
    _check_range(i, N)
    if i == 1:
        return int(double_factorial(2 * N - 3))
    if i == N:
        return 1
    return _evaluate_nested(i, N - SHIFTED_LAYOUT.top_shift, SHIFTED_LAYOUT)


class ReconciliationMismatch(BaseModel):
    """One (i, N) where a closed form disagrees with the recurrence"""

    i: int = Field(..., ge=1, description="Column index")
    N: int = Field(..., ge=1, description="Row index")
    recurrence: int = Field(..., description="Value from the recurrence")
    direct_form: int = Field(..., description="Value from the N-indexed closed form")
    shifted_form: int = Field(..., description="Value from the (N+1)-indexed form")


class ReconciliationReport(BaseModel):
    """Outcome of comparing both closed forms against the recurrence"""

    n_max: int = Field(..., ge=1, description="Highest row compared")
    entries_checked: int = Field(default=0, description="Number of (i, N) pairs")
    mismatches: List[ReconciliationMismatch] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def reconcile(n_max: int, table: Optional[CoeffTable] = None) -> ReconciliationReport:
    """
    Compare both closed forms with the recurrence for every 1 <= i <= N <= n_max

    Args:
        n_max: Highest row to compare
        table: Recurrence table to compare against (built if not provided)

    Returns:
        Report listing every disagreement
    """
    if table is None:
        table = coeff_table_recurrence(n_max)

    logger.info(f"Reconciling closed forms with recurrence through N={n_max}")
    report = ReconciliationReport(n_max=n_max)
    for N in range(1, n_max + 1):
        for i in range(1, N + 1):
            expected = table.entry(i, N)
            direct_value = coeff_closed_form(i, N)
            shifted_value = coeff_closed_form_shifted(i, N)
            report.entries_checked += 1
            if direct_value != expected or shifted_value != expected:
                logger.warning(
                    f"Closed form mismatch at a_{i}({N}): recurrence={expected}, "
                    f"direct={direct_value}, shifted={shifted_value}"
                )
                report.mismatches.append(
                    ReconciliationMismatch(
                        i=i,
                        N=N,
                        recurrence=expected,
                        direct_form=direct_value,
                        shifted_form=shifted_value,
                    )
                )

    logger.info(
        f"Reconciliation checked {report.entries_checked} entries, "
        f"{len(report.mismatches)} mismatches"
    )
    return report
