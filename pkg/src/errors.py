"""
Exception hierarchy for the toolkit
"""


class LegendreToolkitError(Exception):
    """Base exception for all toolkit errors"""

    pass


class ArithmeticDomainError(LegendreToolkitError, ValueError):
    """Scalar function called outside the set it is defined on"""

    pass


class TruncationOrderError(LegendreToolkitError, ValueError):
    """Truncated series combined at different orders, or differentiated past order 0"""

    pass


class PolynomialDivisionError(LegendreToolkitError, ValueError):
    """Division by a power of x that does not leave a polynomial"""

    pass


class LegendreMethodError(LegendreToolkitError, ValueError):
    """Unknown Legendre generation method or explicit-formula variant"""

    pass


class CoefficientIndexError(LegendreToolkitError, IndexError):
    """Coefficient triangle index outside 1 <= i <= N <= n_max"""

    pass


class VerificationPreconditionError(LegendreToolkitError, ValueError):
    """Verification bounds that cannot produce a meaningful check"""

    pass
