"""
Verification suite runner
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, List, Optional

from ..coefficients import CoeffTable
from ..config import get_settings
from ..errors import VerificationPreconditionError
from .reports import VerifyReport
from .verifier import IdentityVerifier

logger = logging.getLogger(__name__)


def verify_ode_family(
    N: int, order: int, table: Optional[CoeffTable] = None
) -> VerifyReport:
    """Check the N-th member of the ODE family at truncation order M"""
    return IdentityVerifier(table).verify_ode_family(N, order)


def verify_theorem2(n: int, N: int, table: Optional[CoeffTable] = None) -> VerifyReport:
    """Check the explicit identity for p_n^(2N+1)"""
    return IdentityVerifier(table).verify_theorem2(n, N)


def verify_all(
    n_max: int,
    big_n_max: int,
    order: int,
    max_workers: Optional[int] = None,
    include_supplementary: bool = False,
    table: Optional[CoeffTable] = None,
    reconcile_n_max: Optional[int] = None,
) -> List[VerifyReport]:
    """
    Run every identity check within the given bounds

    Args:
        n_max: Highest Legendre index n (>= 0)
        big_n_max: Highest ODE family index N (>= 1)
        order: Truncation order M for the ODE family (>= big_n_max)
        max_workers: Threads to use (settings default if not provided)
        include_supplementary: Also run induction-step, generating-function
            and closed-form checks
        table: Coefficient triangle to verify with
        reconcile_n_max: Highest row of the closed-form reconciliation
            (settings default if not provided; capped at the rows of table)

    Returns:
        Reports in a fixed order: Legendre equation, generator agreement,
        ODE family, higher-order identity, then any supplementary checks

    Raises:
        VerificationPreconditionError: If the bounds are out of range
    """
    if n_max < 0:
        raise VerificationPreconditionError(f"n_max must be nonnegative, got {n_max}")
    if big_n_max < 1:
        raise VerificationPreconditionError(
            f"N_max must be at least 1, got {big_n_max}"
        )
    if order < big_n_max:
        raise VerificationPreconditionError(
            f"Truncation order {order} must be at least N_max={big_n_max}"
        )

    compute = get_settings().compute
    if max_workers is None:
        max_workers = compute.max_workers
    if reconcile_n_max is None:
        reconcile_n_max = compute.reconcile_n_max
    if table is not None:
        reconcile_n_max = min(reconcile_n_max, table.n_max)

    verifier = IdentityVerifier(table)
    # Warm the default triangle before any threads share the verifier
    verifier.coefficients(big_n_max)

    tasks: List[Callable[[], VerifyReport]] = []
    tasks.extend(partial(verifier.verify_legendre_de, n) for n in range(n_max + 1))
    tasks.extend(
        partial(verifier.verify_generator_agreement, n) for n in range(n_max + 1)
    )
    tasks.extend(
        partial(verifier.verify_ode_family, N, order)
        for N in range(1, big_n_max + 1)
    )
    tasks.extend(
        partial(verifier.verify_theorem2, n, N)
        for n in range(n_max + 1)
        for N in range(1, big_n_max + 1)
    )
    if include_supplementary:
        tasks.extend(
            partial(verifier.verify_ode_step, N, order)
            for N in range(1, big_n_max + 1)
            if order >= N + 1
        )
        if order >= 1:
            tasks.append(partial(verifier.verify_generating_function, order))
        tasks.append(partial(verifier.verify_closed_form, reconcile_n_max))

    logger.info(f"Running {len(tasks)} verification tasks with {max_workers} worker(s)")
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            reports = list(executor.map(lambda task: task(), tasks))
    else:
        reports = [task() for task in tasks]

    failed = sum(1 for report in reports if not report.passed)
    passed = len(reports) - failed
    logger.info(f"Verification finished: {passed} passed, {failed} failed")
    return reports
