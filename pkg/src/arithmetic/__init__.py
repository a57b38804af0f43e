"""
Exact scalar arithmetic
"""

from .scalars import (
    Rational,
    angle_bracket,
    binomial,
    double_factorial,
    factorial_ratio_form,
    falling_factorial,
    format_rational,
    gamma_half_integer,
    parse_rational,
)

__all__ = [
    "Rational",
    "angle_bracket",
    "binomial",
    "double_factorial",
    "factorial_ratio_form",
    "falling_factorial",
    "format_rational",
    "gamma_half_integer",
    "parse_rational",
]
