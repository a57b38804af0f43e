"""
Verification report models
"""

from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, Field, model_validator


class IdentityId(str, Enum):
    """Identities the verifier can check"""

    ODE_FAMILY = "ODE_FAMILY"
    THEOREM_2 = "THEOREM_2"
    LEGENDRE_DE = "LEGENDRE_DE"
    GENERATOR_AGREEMENT = "GENERATOR_AGREEMENT"
    GENERATING_FUNCTION = "GENERATING_FUNCTION"
    CLOSED_FORM = "CLOSED_FORM"


class FirstFailure(BaseModel):
    """
    Lowest differing coefficient between the two sides of an identity

    Coefficients are exact fractions rendered as "p/q" strings.
    """

    t_power: int = Field(..., ge=0, description="Power of t of the differing term")
    x_power: int = Field(..., ge=0, description="Power of x of the differing term")
    lhs: str = Field(..., description="Left side coefficient")
    rhs: str = Field(..., description="Right side coefficient")


class VerifyReport(BaseModel):
    """Outcome of a single identity check"""

    identity_id: IdentityId = Field(..., description="Which identity was checked")
    params: Dict[str, int] = Field(default_factory=dict, description="N, n, M, ...")
    passed: bool = Field(..., description="True iff both sides agreed exactly")
    first_failure: Optional[FirstFailure] = Field(
        default=None, description="First differing coefficient, if any"
    )
    detail: Optional[str] = Field(default=None, description="Free-text context")

    @model_validator(mode="after")
    def validate_failure_consistency(self) -> "VerifyReport":
        if self.passed != (self.first_failure is None):
            raise ValueError("passed must be True exactly when first_failure is absent")
        return self

    def to_json_dict(self) -> Dict:
        """JSON-ready dict with the four contract fields and any detail"""
        payload = self.model_dump(mode="json")
        if payload.get("detail") is None:
            payload.pop("detail", None)
        return payload
