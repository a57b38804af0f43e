"""
Exact identity verifier
Checks the nonlinear ODE family, the explicit higher-order Legendre identity,
the Legendre differential equation and generator agreement. Denominators are
cleared first, so every comparison is structural equality of polynomials or
truncated series.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..algebra import Poly, TSeries
from ..arithmetic import (
    binomial,
    double_factorial,
    falling_factorial,
    format_rational,
)
from ..coefficients import CoeffTable, coeff_table_recurrence, reconcile
from ..errors import CoefficientIndexError, VerificationPreconditionError
from ..polynomials import (
    LegendreMethod,
    generating_function,
    higher_order_legendre,
    legendre,
    legendre_de_residual,
    legendre_quadratic,
    legendre_sequence,
)
from .reports import FirstFailure, IdentityId, VerifyReport

logger = logging.getLogger(__name__)


def _polynomial_difference(
    lhs: Poly, rhs: Poly, t_power: int
) -> Optional[FirstFailure]:
    for k in range(max(len(lhs.coeffs), len(rhs.coeffs))):
        if lhs.coefficient(k) != rhs.coefficient(k):
            return FirstFailure(
                t_power=t_power,
                x_power=k,
                lhs=format_rational(lhs.coefficient(k)),
                rhs=format_rational(rhs.coefficient(k)),
            )
    return None


def _series_difference(lhs: TSeries, rhs: TSeries) -> Optional[FirstFailure]:
    difference = lhs.first_difference(rhs)
    if difference is None:
        return None
    t_power, x_power, left, right = difference
    return FirstFailure(
        t_power=t_power,
        x_power=x_power,
        lhs=format_rational(left),
        rhs=format_rational(right),
    )


def _report(
    identity_id: IdentityId,
    params: Dict[str, int],
    failure: Optional[FirstFailure],
    detail: Optional[str] = None,
) -> VerifyReport:
    report = VerifyReport(
        identity_id=identity_id,
        params=params,
        passed=failure is None,
        first_failure=failure,
        detail=detail,
    )
    if report.passed:
        logger.debug(f"{identity_id.value} {params} passed")
    else:
        logger.warning(f"{identity_id.value} {params} failed at {failure}")
    return report


class IdentityVerifier:
    """
    Verifies identities against a coefficient triangle

    The triangle defaults to the recurrence; pass a modified table to check
    that verification detects wrong coefficients.
    """

    def __init__(self, table: Optional[CoeffTable] = None):
        """
        Initialize verifier

        Args:
            table: Coefficient triangle to verify with (recurrence if not provided)
        """
        self.table = table
        self._default_table: Optional[CoeffTable] = None

    def coefficients(self, N: int) -> Tuple[int, ...]:
        """Row a_1(N) .. a_N(N) of the triangle in use"""
        if N < 1:
            raise CoefficientIndexError(f"Row N must be at least 1, got {N}")
        if self.table is not None:
            return self.table.row(N)
        if self._default_table is None or self._default_table.n_max < N:
            self._default_table = coeff_table_recurrence(N)
        return self._default_table.row(N)

    # Nonlinear ODE family

    def ode_family_sides(self, N: int, order: int) -> Tuple[TSeries, TSeries]:
        """
        Both sides of (2N-1)!! F^(2N+1) (x-t)^(2N-1) = sum_i a_i(N) F^(i) (x-t)^(i-1)

        Args:
            N: Family index, at least 1
            order: Truncation order M of F, at least N

        Returns:
            (lhs, rhs) truncated at t^(M-N)
        """
        if N < 1:
            raise VerificationPreconditionError(f"N must be at least 1, got {N}")
        if order < N:
            raise VerificationPreconditionError(
                f"Truncation order {order} must be at least N={N}"
            )

        check_order = order - N
        F = generating_function(order)
        lhs = (
            F.truncate(check_order)
            .pow(2 * N + 1)
            .scale(double_factorial(2 * N - 1))
            .mul_x_minus_t_pow(2 * N - 1)
        )

        rhs = TSeries(check_order)
        derivative = F
        for i, a_i in enumerate(self.coefficients(N), start=1):
            derivative = derivative.derivative_t()
            term = derivative.truncate(check_order).mul_x_minus_t_pow(i - 1)
            rhs = rhs + term.scale(a_i)
        return lhs, rhs

    def verify_ode_family(self, N: int, order: int) -> VerifyReport:
        """Check the denominator-cleared ODE family through t^(M-N)"""
        lhs, rhs = self.ode_family_sides(N, order)
        return _report(
            IdentityId.ODE_FAMILY, {"N": N, "M": order}, _series_difference(lhs, rhs)
        )

    def verify_ode_step(self, N: int, order: int) -> VerifyReport:
        """
        Check the differentiated family that carries N to N+1

        (2N+1)!! F^(2N+3) (x-t)^(2N+1)
            = sum_i a_i(N) [(2N-i) F^(i) (x-t)^(i-1) + F^(i+1) (x-t)^i]

        compared through t^(M-N-1).
        """
        if N < 1:
            raise VerificationPreconditionError(f"N must be at least 1, got {N}")
        if order < N + 1:
            raise VerificationPreconditionError(
                f"Truncation order {order} must be at least N+1={N + 1}"
            )

        check_order = order - N - 1
        F = generating_function(order)
        lhs = (
            F.truncate(check_order)
            .pow(2 * N + 3)
            .scale(double_factorial(2 * N + 1))
            .mul_x_minus_t_pow(2 * N + 1)
        )

        rhs = TSeries(check_order)
        derivative = F
        for i, a_i in enumerate(self.coefficients(N), start=1):
            derivative = derivative.derivative_t()
            same = derivative.truncate(check_order).mul_x_minus_t_pow(i - 1)
            raised = derivative.derivative_t().truncate(check_order)
            rhs = rhs + same.scale(a_i * (2 * N - i))
            rhs = rhs + raised.mul_x_minus_t_pow(i).scale(a_i)

        return _report(
            IdentityId.ODE_FAMILY,
            {"N": N, "M": order, "step": 1},
            _series_difference(lhs, rhs),
        )

    # Explicit higher-order identity

    def explicit_sum_cleared(self, n: int, N: int) -> Poly:
        """
        Right side of the higher-order identity multiplied by x^(2N+n-1) (2N-1)!!

        sum_{i=1}^{N} sum_{m=0}^{n} a_i(N) C(2N+m-i-1, m)
            x^(n-1-m+i) p_{n-m+i}(x) (n-m+i)_i
        """
        if n < 0:
            raise VerificationPreconditionError(f"n must be nonnegative, got {n}")
        if N < 1:
            raise VerificationPreconditionError(f"N must be at least 1, got {N}")

        polys = legendre_sequence(n + N)
        total = Poly.zero()
        for i, a_i in enumerate(self.coefficients(N), start=1):
            for m in range(n + 1):
                weight = (
                    a_i
                    * binomial(2 * N + m - i - 1, m)
                    * falling_factorial(n - m + i, i)
                )
                term = polys[n - m + i].multiply_by_x_power(n - 1 - m + i)
                total = total + term.scale(weight)
        return total

    def explicit_sum_polynomial(self, n: int, N: int) -> Poly:
        """p_n^(2N+1)(x) computed only from the right side of the identity"""
        cleared = self.explicit_sum_cleared(n, N)
        quotient = cleared.divide_by_x_power(2 * N + n - 1)
        return quotient.scale(Fraction(1) / double_factorial(2 * N - 1))

    def verify_theorem2(self, n: int, N: int) -> VerifyReport:
        """
        Compare p_n^(2N+1) x^(2N+n-1) (2N-1)!! from series powering with the
        cleared right side
        """
        rhs = self.explicit_sum_cleared(n, N)
        lhs = (
            higher_order_legendre(n, 2 * N + 1)
            .multiply_by_x_power(2 * N + n - 1)
            .scale(double_factorial(2 * N - 1))
        )
        return _report(
            IdentityId.THEOREM_2,
            {"n": n, "N": N},
            _polynomial_difference(lhs, rhs, t_power=n),
        )

    # Legendre polynomial checks

    def verify_legendre_de(self, n: int) -> VerifyReport:
        """Residual of the Legendre differential equation must vanish"""
        residual = legendre_de_residual(n)
        return _report(
            IdentityId.LEGENDRE_DE,
            {"n": n},
            _polynomial_difference(residual, Poly.zero(), t_power=n),
        )

    def verify_generator_agreement(self, n: int) -> VerifyReport:
        """Rodrigues and explicit sums must reproduce the recurrence"""
        reference = legendre(n, LegendreMethod.RECURRENCE)
        for method in LegendreMethod:
            if method is LegendreMethod.RECURRENCE:
                continue
            failure = _polynomial_difference(legendre(n, method), reference, t_power=n)
            if failure is not None:
                return _report(
                    IdentityId.GENERATOR_AGREEMENT,
                    {"n": n},
                    failure,
                    detail=f"{method.value} disagrees with recurrence",
                )
        return _report(IdentityId.GENERATOR_AGREEMENT, {"n": n}, None)

    def verify_generating_function(self, order: int) -> VerifyReport:
        """
        F^2 (1-2tx+t^2) = 1 through t^M, then F' (1-2tx+t^2) = (x-t) F
        through t^(M-1)
        """
        if order < 1:
            raise VerificationPreconditionError(
                f"Truncation order must be at least 1, got {order}"
            )
        F = generating_function(order)
        quadratic = legendre_quadratic()
        detail = None

        failure = _series_difference(
            F.mul(F).mul_poly_in_t(quadratic), TSeries.one(order)
        )
        if failure is not None:
            detail = "F^2 (1 - 2tx + t^2) != 1"
        else:
            failure = _series_difference(
                F.derivative_t().mul_poly_in_t(quadratic),
                F.truncate(order - 1).mul_x_minus_t_pow(1),
            )
            if failure is not None:
                detail = "F' (1 - 2tx + t^2) != (x - t) F"
        return _report(IdentityId.GENERATING_FUNCTION, {"M": order}, failure, detail)

    def verify_closed_form(self, n_max: int) -> VerifyReport:
        """
        Reconcile both closed forms with the recurrence as a single report

        Raises:
            CoefficientIndexError: If the verifier's table has fewer than n_max rows
        """
        if self.table is not None and self.table.n_max < n_max:
            raise CoefficientIndexError(
                f"Table has {self.table.n_max} rows, reconciliation needs {n_max}"
            )
        reconciliation = reconcile(n_max, self.table)
        failure = None
        detail = None
        if not reconciliation.consistent:
            first = reconciliation.mismatches[0]
            if first.direct_form != first.recurrence:
                form, value = "direct", first.direct_form
            else:
                form, value = "shifted", first.shifted_form
            failure = FirstFailure(
                t_power=0,
                x_power=0,
                lhs=str(first.recurrence),
                rhs=str(value),
            )
            detail = f"a_{first.i}({first.N}) {form} form disagrees"
        return _report(IdentityId.CLOSED_FORM, {"N": n_max}, failure, detail)
