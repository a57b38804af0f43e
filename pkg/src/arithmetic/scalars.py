"""
Exact scalar functions over the rationals
Double factorials (including the negative odd extension), falling factorials,
step-2 angle-bracket products, generalized binomials and the rational part
of the gamma function at half integers
"""

import math
from fractions import Fraction
from typing import Union

from ..errors import ArithmeticDomainError

# Canonical exact scalar; Fraction normalizes sign and gcd on construction
Rational = Fraction

RationalLike = Union[int, Fraction]


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise ArithmeticDomainError(f"{name} must be nonnegative, got {value}")


def double_factorial(n: int) -> Fraction:
    """
    Double factorial n!!, extended to negative odd integers

    Args:
        n: Integer >= -1, or a negative odd integer

    Returns:
        n(n-2)...(2 or 1) for n > 0, 1 for n in {-1, 0},
        and (-1)^k / (2k-1)!! for n = -2k-1

    Raises:
        ArithmeticDomainError: If n is negative and even
    """
    if n >= -1:
        result = 1
        for factor in range(n, 1, -2):
            result *= factor
        return Fraction(result)
    if n % 2 == 0:
        raise ArithmeticDomainError(
            f"Double factorial is undefined for even negative argument {n}"
        )
    k = (-n - 1) // 2
    return Fraction((-1) ** k) / double_factorial(2 * k - 1)


def factorial_ratio_form(n: int) -> Fraction:
    """(-1)^n 2^n n! / (2n)!, the factorial form of (-2n-1)!!"""
    _require_nonnegative("n", n)
    return Fraction((-1) ** n * 2**n * math.factorial(n), math.factorial(2 * n))


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """
    Falling factorial (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1

    Args:
        x: Rational base
        n: Number of factors

    Returns:
        Exact product
    """
    _require_nonnegative("n", n)
    x = Fraction(x)
    result = Fraction(1)
    for j in range(n):
        result *= x - j
    return result


def angle_bracket(N: int, alpha: int, k: int) -> int:
    """
    Step-2 descending product <2N+alpha>_k

    (2N+alpha)(2(N-1)+alpha)...(2(N-k+1)+alpha); the empty product (k = 0) is 1.
    """
    _require_nonnegative("k", k)
    result = 1
    for j in range(k):
        result *= 2 * (N - j) + alpha
    return result


def binomial(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient (x)_k / k! for any rational x"""
    _require_nonnegative("k", k)
    return falling_factorial(x, k) / math.factorial(k)


def gamma_half_integer(n: int) -> Fraction:
    """
    Rational coefficient r with Gamma(n + 1/2) = r * sqrt(pi)

    Args:
        n: Nonnegative integer

    Returns:
        (2n-1)!! / 2^n
    """
    _require_nonnegative("n", n)
    return double_factorial(2 * n - 1) / 2**n


def format_rational(value: RationalLike) -> str:
    """Render as "p/q", or "p" when the denominator is 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the "p/q" or "p" form produced by format_rational

    Raises:
        ArithmeticDomainError: If the text is not an exact fraction
    """
    stripped = text.strip()
    numerator, _, denominator = stripped.partition("/")
    try:
        if denominator:
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(numerator))
    except (ValueError, ZeroDivisionError) as e:
        raise ArithmeticDomainError(f"Not an exact fraction: {text!r}") from e
