"""
Polynomial and truncated power series algebra
"""

from .polynomial import Poly, add, derivative_x, eval_at, mul, scale
from .series import (
    TSeries,
    series_derivative_t,
    series_mul,
    series_mul_x_minus_t_pow,
    series_pow,
)

__all__ = [
    "Poly",
    "TSeries",
    "add",
    "derivative_x",
    "eval_at",
    "mul",
    "scale",
    "series_derivative_t",
    "series_mul",
    "series_mul_x_minus_t_pow",
    "series_pow",
]
