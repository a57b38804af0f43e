"""
Legendre polynomial generators
Four independent constructions of p_n(x): the three-term recurrence,
Rodrigues' formula and three explicit binomial sums. The recurrence is the
canonical producer; the others serve as structurally unrelated cross-checks.
"""

import logging
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from ..algebra import Poly
from ..arithmetic import binomial
from ..errors import ArithmeticDomainError, LegendreMethodError

logger = logging.getLogger(__name__)


class LegendreMethod(str, Enum):
    """Construction routes for p_n(x)"""

    RECURRENCE = "recurrence"
    RODRIGUES = "rodrigues"
    EXPLICIT1 = "explicit1"
    EXPLICIT2 = "explicit2"
    EXPLICIT3 = "explicit3"


def _require_index(n: int) -> None:
    if n < 0:
        raise ArithmeticDomainError(f"Legendre index must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def _recurrence_sequence(n: int) -> Tuple[Poly, ...]:
    # (k+1) p_{k+1} = (2k+1) x p_k - k p_{k-1}
    polys = [Poly.constant(1), Poly.x()]
    x = Poly.x()
    for k in range(1, n):
        nxt = (x * polys[k]).scale(2 * k + 1) - polys[k - 1].scale(k)
        polys.append(nxt.scale(Fraction(1, k + 1)))
    return tuple(polys[: n + 1])


def legendre_recurrence(n: int) -> Poly:
    """
    p_n(x) from the three-term recurrence seeded by p_0 = 1, p_1 = x

    Args:
        n: Nonnegative degree

    Returns:
        p_n(x), of degree exactly n
    """
    _require_index(n)
    return _recurrence_sequence(n)[n]


def legendre_sequence(n_max: int) -> Tuple[Poly, ...]:
    """p_0 .. p_{n_max} from the recurrence"""
    _require_index(n_max)
    return _recurrence_sequence(n_max)


def legendre_rodrigues(n: int) -> Poly:
    """p_n(x) = 1/(2^n n!) d^n/dx^n (x^2 - 1)^n, differentiated exactly"""
    _require_index(n)
    result = Poly([-1, 0, 1]).pow(n)
    for _ in range(n):
        result = result.derivative_x()
    return result.scale(Fraction(1, 2**n * math.factorial(n)))


def legendre_explicit(n: int, variant: int) -> Poly:
    """
    p_n(x) from one of three explicit binomial sums

    Args:
        n: Nonnegative degree
        variant: 1 for 2^-n sum C(n,k)^2 (x-1)^(n-k) (x+1)^k,
                 2 for sum C(n,k) C(-n-1,k) ((1-x)/2)^k,
                 3 for 2^n sum C(n,k) C((n+k-1)/2, n) x^k

    Returns:
        p_n(x)

    Raises:
        LegendreMethodError: If variant is not 1, 2 or 3
    """
    _require_index(n)
    total = Poly.zero()
    if variant == 1:
        for k in range(n + 1):
            term = Poly.linear_power(-1, n - k).mul(Poly.linear_power(1, k))
            total = total + term.scale(binomial(n, k) ** 2)
        return total.scale(Fraction(1, 2**n))
    if variant == 2:
        half_one_minus_x = Poly([Fraction(1, 2), Fraction(-1, 2)])
        for k in range(n + 1):
            weight = binomial(n, k) * binomial(-n - 1, k)
            total = total + half_one_minus_x.pow(k).scale(weight)
        return total
    if variant == 3:
        # The x^k factor is absent from some printed versions of this sum
        for k in range(n + 1):
            weight = binomial(n, k) * binomial(Fraction(n + k - 1, 2), n)
            total = total + Poly.monomial(weight, k)
        return total.scale(2**n)
    raise LegendreMethodError(f"Unknown explicit-formula variant: {variant}")


def legendre(n: int, method: LegendreMethod = LegendreMethod.RECURRENCE) -> Poly:
    """
    Build p_n(x) by the requested construction

    Raises:
        LegendreMethodError: If method is not a known construction
    """
    try:
        method = LegendreMethod(method)
    except ValueError as e:
        raise LegendreMethodError(f"Unknown Legendre method: {method}") from e

    if method is LegendreMethod.RECURRENCE:
        return legendre_recurrence(n)
    if method is LegendreMethod.RODRIGUES:
        return legendre_rodrigues(n)
    return legendre_explicit(n, int(method.value[-1]))


def legendre_de_residual(n: int) -> Poly:
    """(1 - x^2) p_n'' - 2x p_n' + n(n+1) p_n, computed exactly"""
    p = legendre_recurrence(n)
    first = p.derivative_x()
    second = first.derivative_x()
    return (
        Poly([1, 0, -1]) * second
        - (Poly.x() * first).scale(2)
        + p.scale(n * (n + 1))
    )


def check_legendre_de(n: int) -> bool:
    """True iff p_n satisfies the Legendre differential equation exactly"""
    residual = legendre_de_residual(n)
    if not residual.is_zero():
        logger.warning(f"p_{n} leaves a nonzero Legendre equation residual: {residual}")
    return residual.is_zero()


def check_normalization(n: int) -> bool:
    """p_n(1) = 1"""
    return legendre_recurrence(n).eval(1) == 1


def check_parity(n: int) -> bool:
    """p_n(-x) = (-1)^n p_n(x)"""
    p = legendre_recurrence(n)
    return p.compose_neg_x() == p.scale((-1) ** n)
