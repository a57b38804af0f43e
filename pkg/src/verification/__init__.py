"""
Exact verification of the ODE family and the higher-order Legendre identity
"""

from .reports import FirstFailure, IdentityId, VerifyReport
from .suite import verify_all, verify_ode_family, verify_theorem2
from .verifier import IdentityVerifier

__all__ = [
    "FirstFailure",
    "IdentityId",
    "IdentityVerifier",
    "VerifyReport",
    "verify_all",
    "verify_ode_family",
    "verify_theorem2",
]
