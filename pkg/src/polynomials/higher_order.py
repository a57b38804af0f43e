"""
Generating function of the Legendre polynomials and its integer powers
"""

import logging
from typing import List

from ..algebra import Poly, TSeries
from ..errors import ArithmeticDomainError, TruncationOrderError
from .legendre import legendre_sequence

logger = logging.getLogger(__name__)


def generating_function(order: int) -> TSeries:
    """
    F(t, x) = (1 - 2tx + t^2)^(-1/2) truncated at t^order

    Coefficients come from the recurrence rather than a series square root;
    check_generating_function confirms the result.
    """
    if order < 0:
        raise TruncationOrderError(f"Truncation order must be nonnegative: {order}")
    return TSeries.from_polys(legendre_sequence(order), order)


def legendre_quadratic() -> List[Poly]:
    """1 - 2tx + t^2 as Poly-in-x coefficients of t^0, t^1, t^2"""
    return [Poly.constant(1), Poly([0, -2]), Poly.constant(1)]


def higher_order_series(alpha: int, order: int) -> TSeries:
    """
    F^alpha truncated at t^order; the t^n coefficient is p_n^(alpha)(x)

    Args:
        alpha: Positive integer power
        order: Truncation order M

    Returns:
        Truncated series of higher-order Legendre polynomials
    """
    if alpha < 1:
        raise ArithmeticDomainError(f"Order alpha must be a positive integer: {alpha}")
    logger.debug(f"Powering generating function: alpha={alpha}, order={order}")
    return generating_function(order).pow(alpha)


def higher_order_legendre(n: int, alpha: int) -> Poly:
    """p_n^(alpha)(x), the t^n coefficient of F^alpha"""
    if n < 0:
        raise ArithmeticDomainError(f"Legendre index must be nonnegative, got {n}")
    return higher_order_series(alpha, n).coefficient(n)


def check_generating_function(order: int) -> bool:
    """F^2 (1 - 2tx + t^2) = 1 through t^order"""
    F = generating_function(order)
    return F.mul(F).mul_poly_in_t(legendre_quadratic()) == TSeries.one(order)


def check_first_order_relation(order: int) -> bool:
    """F' (1 - 2tx + t^2) = (x - t) F through t^(order - 1)"""
    if order < 1:
        raise TruncationOrderError("First-order relation needs truncation order >= 1")
    F = generating_function(order)
    lhs = F.derivative_t().mul_poly_in_t(legendre_quadratic())
    rhs = F.truncate(order - 1).mul_x_minus_t_pow(1)
    return lhs == rhs
