"""
Dense univariate polynomials in x over the rationals
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from ..arithmetic import binomial, format_rational
from ..arithmetic.scalars import RationalLike
from ..errors import ArithmeticDomainError, PolynomialDivisionError


def _canonical(coeffs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True, init=False)
class Poly:
    """
    Immutable polynomial; coeffs[k] is the coefficient of x^k

    Trailing zeros are stripped on construction, so the zero polynomial has
    no coefficients and structural equality is polynomial equality.
    """

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _canonical(coeffs))

    # Constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls([value])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, coefficient: RationalLike, power: int) -> "Poly":
        if power < 0:
            raise ArithmeticDomainError(f"Monomial power must be nonnegative: {power}")
        return cls([0] * power + [coefficient])

    @classmethod
    def linear_power(cls, shift: RationalLike, k: int) -> "Poly":
        """(x + shift)^k expanded by the binomial theorem"""
        if k < 0:
            raise ArithmeticDomainError(f"Power must be nonnegative: {k}")
        shift = Fraction(shift)
        return cls(binomial(k, j) * shift ** (k - j) for j in range(k + 1))

    # Properties

    @property
    def degree(self) -> int:
        """Highest power with nonzero coefficient; -1 stands in for -inf on zero"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # Ring operations

    def add(self, other: "Poly") -> "Poly":
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def neg(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def scale(self, factor: RationalLike) -> "Poly":
        factor = Fraction(factor)
        return Poly(c * factor for c in self.coeffs)

    def mul(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Poly(product)

    def pow(self, k: int) -> "Poly":
        if k < 0:
            raise ArithmeticDomainError(f"Power must be nonnegative: {k}")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result

    def derivative_x(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def eval(self, point: RationalLike) -> Fraction:
        point = Fraction(point)
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def compose_neg_x(self) -> "Poly":
        """p(-x)"""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def multiply_by_x_power(self, k: int) -> "Poly":
        if k < 0:
            raise ArithmeticDomainError(f"Power must be nonnegative: {k}")
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs))

    def divide_by_x_power(self, k: int) -> "Poly":
        """
        Exact quotient by x^k

        Raises:
            PolynomialDivisionError: If any of the k lowest coefficients is nonzero
        """
        if k < 0:
            raise ArithmeticDomainError(f"Power must be nonnegative: {k}")
        remainder = [c for c in self.coeffs[:k] if c != 0]
        if remainder:
            raise PolynomialDivisionError(
                f"Polynomial of degree {self.degree} is not divisible by x^{k}"
            )
        return Poly(self.coeffs[k:])

    # Operators

    def __add__(self, other: "Poly") -> "Poly":
        return self.add(other)

    def __sub__(self, other: "Poly") -> "Poly":
        return self.sub(other)

    def __neg__(self) -> "Poly":
        return self.neg()

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self.mul(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(format_rational(c))
            elif k == 1:
                terms.append(f"{format_rational(c)}*x")
            else:
                terms.append(f"{format_rational(c)}*x^{k}")
        return " + ".join(terms).replace("+ -", "- ")


def add(a: Poly, b: Poly) -> Poly:
    return a.add(b)


def mul(a: Poly, b: Poly) -> Poly:
    return a.mul(b)


def scale(a: Poly, factor: RationalLike) -> Poly:
    return a.scale(factor)


def derivative_x(a: Poly) -> Poly:
    return a.derivative_x()


def eval_at(a: Poly, point: RationalLike) -> Fraction:
    return a.eval(point)
