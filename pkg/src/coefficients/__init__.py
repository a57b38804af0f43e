"""
Coefficient triangle of the nonlinear ODE family
"""

from .closed_form import (
    ReconciliationMismatch,
    ReconciliationReport,
    coeff_closed_form,
    coeff_closed_form_shifted,
    reconcile,
)
from .triangle import (
    CoeffTable,
    coeff_table_recurrence,
    diagonal_law_holds,
    first_column_law_holds,
    second_column_law_holds,
)

__all__ = [
    "CoeffTable",
    "ReconciliationMismatch",
    "ReconciliationReport",
    "coeff_closed_form",
    "coeff_closed_form_shifted",
    "coeff_table_recurrence",
    "diagonal_law_holds",
    "first_column_law_holds",
    "reconcile",
    "second_column_law_holds",
]
