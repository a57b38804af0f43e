"""
Coefficient triangle a_i(N) of the nonlinear ODE family
(2N-1)!! F^(2N+1) = sum_{i=1}^{N} a_i(N) F^(i) / (x - t)^(2N-i)
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..arithmetic import double_factorial
from ..errors import CoefficientIndexError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffTable:
    """
    Triangle of integers; rows[N-1] holds a_1(N) .. a_N(N)
    """

    n_max: int
    rows: Tuple[Tuple[int, ...], ...]

    def row(self, N: int) -> Tuple[int, ...]:
        if not 1 <= N <= self.n_max:
            raise CoefficientIndexError(f"Row N={N} outside 1..{self.n_max}")
        return self.rows[N - 1]

    def entry(self, i: int, N: int) -> int:
        row = self.row(N)
        if not 1 <= i <= N:
            raise CoefficientIndexError(f"Index i={i} outside 1..{N}")
        return row[i - 1]

    def row_sum(self, N: int) -> int:
        return sum(self.row(N))

    def perturbed(self, i: int, N: int, delta: int = 1) -> "CoeffTable":
        """Copy with a_i(N) shifted by delta"""
        current = self.entry(i, N)
        rows = [list(r) for r in self.rows]
        rows[N - 1][i - 1] = current + delta
        return CoeffTable(self.n_max, tuple(tuple(r) for r in rows))


def coeff_table_recurrence(n_max: int) -> CoeffTable:
    """
    Fill rows 1..n_max from a_1(1) = 1 and

        a_1(N+1) = (2N-1) a_1(N)
        a_{N+1}(N+1) = a_N(N)
        a_i(N+1) = (2N-i) a_i(N) + a_{i-1}(N),  2 <= i <= N

    Args:
        n_max: Highest row, at least 1

    Returns:
        Completed CoeffTable
    """
    if n_max < 1:
        raise CoefficientIndexError(f"n_max must be at least 1, got {n_max}")

    rows: List[List[int]] = [[1]]
    for N in range(1, n_max):
        prev = rows[-1]
        nxt = [(2 * N - 1) * prev[0]]
        for i in range(2, N + 1):
            nxt.append((2 * N - i) * prev[i - 1] + prev[i - 2])
        nxt.append(prev[N - 1])
        rows.append(nxt)

    logger.info(f"Built coefficient triangle with {n_max} rows")
    return CoeffTable(n_max, tuple(tuple(r) for r in rows))


def first_column_law_holds(table: CoeffTable) -> bool:
    """a_1(N) = (2N-3)!! for every row (the N = 1 row uses (-1)!! = 1)"""
    return all(
        table.entry(1, N) == double_factorial(2 * N - 3)
        for N in range(1, table.n_max + 1)
    )


def diagonal_law_holds(table: CoeffTable) -> bool:
    """a_N(N) = 1 for every row"""
    return all(table.entry(N, N) == 1 for N in range(1, table.n_max + 1))


def second_column_law_holds(table: CoeffTable) -> bool:
    """a_2(N+1) = (2N-2) a_2(N) + (2N-3)!! for 2 <= N < n_max"""
    return all(
        table.entry(2, N + 1)
        == (2 * N - 2) * table.entry(2, N) + double_factorial(2 * N - 3)
        for N in range(2, table.n_max)
    )
