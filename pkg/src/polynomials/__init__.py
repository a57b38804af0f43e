"""
Legendre and higher-order Legendre polynomials
"""

from .higher_order import (
    check_first_order_relation,
    check_generating_function,
    generating_function,
    higher_order_legendre,
    higher_order_series,
    legendre_quadratic,
)
from .legendre import (
    LegendreMethod,
    check_legendre_de,
    check_normalization,
    check_parity,
    legendre,
    legendre_de_residual,
    legendre_explicit,
    legendre_recurrence,
    legendre_rodrigues,
    legendre_sequence,
)

__all__ = [
    "LegendreMethod",
    "check_first_order_relation",
    "check_generating_function",
    "check_legendre_de",
    "check_normalization",
    "check_parity",
    "generating_function",
    "higher_order_legendre",
    "higher_order_series",
    "legendre",
    "legendre_de_residual",
    "legendre_explicit",
    "legendre_quadratic",
    "legendre_recurrence",
    "legendre_rodrigues",
    "legendre_sequence",
]
