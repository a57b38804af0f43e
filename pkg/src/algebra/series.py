"""
Truncated power series in t whose coefficients are polynomials in x
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from ..arithmetic import binomial
from ..arithmetic.scalars import RationalLike
from ..errors import ArithmeticDomainError, TruncationOrderError
from .polynomial import Poly


@dataclass(frozen=True, init=False)
class TSeries:
    """
    Series sum_{n=0}^{order} coeffs[n](x) t^n, truncated at a fixed order

    Always holds exactly order + 1 coefficient slots. Binary operations
    require equal orders and truncate their result back to that order.
    """

    order: int
    coeffs: Tuple[Poly, ...]

    def __init__(self, order: int, coeffs: Iterable[Poly] = ()):
        if order < 0:
            raise TruncationOrderError(f"Truncation order must be nonnegative: {order}")
        slots = list(coeffs)[: order + 1]
        slots.extend(Poly() for _ in range(order + 1 - len(slots)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(slots))

    # Constructors

    @classmethod
    def constant(cls, value: Poly, order: int) -> "TSeries":
        return cls(order, [value])

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls.constant(Poly.constant(1), order)

    @classmethod
    def from_polys(cls, coeffs: Sequence[Poly], order: int) -> "TSeries":
        return cls(order, coeffs)

    # Access

    def coefficient(self, n: int) -> Poly:
        """Coefficient of t^n; zero past the truncation order"""
        if 0 <= n <= self.order:
            return self.coeffs[n]
        return Poly()

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise TruncationOrderError(
                f"Cannot raise truncation order from {self.order} to {order}"
            )
        return TSeries(order, self.coeffs[: order + 1])

    def _require_same_order(self, other: "TSeries") -> None:
        if self.order != other.order:
            raise TruncationOrderError(
                f"Truncation order mismatch: {self.order} vs {other.order}"
            )

    # Arithmetic

    def add(self, other: "TSeries") -> "TSeries":
        self._require_same_order(other)
        return TSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def sub(self, other: "TSeries") -> "TSeries":
        self._require_same_order(other)
        return TSeries(self.order, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: RationalLike) -> "TSeries":
        factor = Fraction(factor)
        return TSeries(self.order, (c.scale(factor) for c in self.coeffs))

    def mul(self, other: "TSeries") -> "TSeries":
        """Cauchy product, truncated at the shared order"""
        self._require_same_order(other)
        product = []
        for n in range(self.order + 1):
            total = Poly()
            for k in range(n + 1):
                a = self.coeffs[k]
                b = other.coeffs[n - k]
                if a.is_zero() or b.is_zero():
                    continue
                total = total + a * b
            product.append(total)
        return TSeries(self.order, product)

    def pow(self, k: int) -> "TSeries":
        """k-th power by binary powering, k >= 1"""
        if k < 1:
            raise ArithmeticDomainError(f"Series power must be positive: {k}")
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result.mul(base)
            k >>= 1
            if k:
                base = base.mul(base)
        return result

    def derivative_t(self) -> "TSeries":
        """d/dt; the result has order one less than the input"""
        if self.order < 1:
            raise TruncationOrderError("Cannot differentiate an order-0 series in t")
        return TSeries(
            self.order - 1,
            (self.coeffs[n + 1].scale(n + 1) for n in range(self.order)),
        )

    def derivative_t_times(self, i: int) -> "TSeries":
        """i-fold d/dt"""
        if i < 0:
            raise ArithmeticDomainError(f"Derivative count must be nonnegative: {i}")
        result = self
        for _ in range(i):
            result = result.derivative_t()
        return result

    def mul_poly_in_t(self, factor: Sequence[Poly]) -> "TSeries":
        """
        Multiply by the polynomial sum_j factor[j](x) t^j, truncating in t

        Args:
            factor: Poly-in-x coefficients of a polynomial in t, lowest power first
        """
        product = []
        for n in range(self.order + 1):
            total = Poly()
            for j, f in enumerate(factor[: n + 1]):
                if f.is_zero():
                    continue
                total = total + f * self.coeffs[n - j]
            product.append(total)
        return TSeries(self.order, product)

    def mul_x_minus_t_pow(self, k: int) -> "TSeries":
        """Multiply by (x - t)^k = sum_j C(k, j) (-1)^j x^(k-j) t^j"""
        if k < 0:
            raise ArithmeticDomainError(f"Power must be nonnegative: {k}")
        factor = [
            Poly.monomial(binomial(k, j) * (-1) ** j, k - j)
            for j in range(min(k, self.order) + 1)
        ]
        return self.mul_poly_in_t(factor)

    def first_difference(self, other: "TSeries"):
        """
        Locate the lowest (t-power, x-power) where two series differ

        Returns:
            Tuple (t_power, x_power, self_coefficient, other_coefficient), or None
        """
        self._require_same_order(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a == b:
                continue
            for k in range(max(len(a.coeffs), len(b.coeffs))):
                if a.coefficient(k) != b.coefficient(k):
                    return n, k, a.coefficient(k), b.coefficient(k)
        return None

    # Operators

    def __add__(self, other: "TSeries") -> "TSeries":
        return self.add(other)

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self.sub(other)

    def __mul__(self, other):
        if isinstance(other, TSeries):
            return self.mul(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    return a.mul(b)


def series_pow(a: TSeries, k: int) -> TSeries:
    return a.pow(k)


def series_derivative_t(a: TSeries) -> TSeries:
    return a.derivative_t()


def series_mul_x_minus_t_pow(a: TSeries, k: int) -> TSeries:
    return a.mul_x_minus_t_pow(k)
