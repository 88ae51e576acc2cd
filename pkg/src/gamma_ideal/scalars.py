"""Exact Gaussian-rational scalars.

The coefficient field of the whole package is Q(i): complex numbers with
rational real and imaginary parts, stored as ``fractions.Fraction`` pairs.
This keeps every arithmetic question decidable, in particular whether the
difference of two shifts is an integer.  Floating-point complex numbers are
accepted only by the numeric oracle, never by the symbolic core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]
ScalarLike = Union["GaussianRational", int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """A complex number a + b*i with exact rational parts.

    ``Fraction`` keeps both parts in lowest terms with a positive
    denominator, so equality and hashing are structural.
    """

    real: Fraction
    imag: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    def is_zero(self) -> bool:
        return not self.real and not self.imag

    def is_one(self) -> bool:
        return self.real == 1 and not self.imag

    def is_integer(self) -> bool:
        return not self.imag and self.real.denominator == 1

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.real, -self.imag)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.real, -self.imag)

    def __add__(self, other: ScalarLike) -> GaussianRational:
        if not _scalar_operand(other):
            return NotImplemented
        other = to_scalar(other)
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> GaussianRational:
        if not _scalar_operand(other):
            return NotImplemented
        return self + (-to_scalar(other))

    def __rsub__(self, other: ScalarLike) -> GaussianRational:
        return to_scalar(other) - self

    def __mul__(self, other: ScalarLike) -> GaussianRational:
        if not _scalar_operand(other):
            return NotImplemented
        other = to_scalar(other)
        return GaussianRational(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> GaussianRational:
        if not _scalar_operand(other):
            return NotImplemented
        other = to_scalar(other)
        norm = other.real * other.real + other.imag * other.imag
        if not norm:
            raise ZeroDivisionError("division of Gaussian rational by zero")
        num = self * other.conjugate()
        return GaussianRational(num.real / norm, num.imag / norm)

    def __rtruediv__(self, other: ScalarLike) -> GaussianRational:
        return to_scalar(other) / self

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __str__(self) -> str:
        return scalar_text(self)

    def __repr__(self) -> str:
        return f"GaussianRational({self.real!r}, {self.imag!r})"


def _scalar_operand(value: object) -> bool:
    return isinstance(value, (GaussianRational, int, Fraction))


def to_scalar(value: ScalarLike) -> GaussianRational:
    """Coerce an int or Fraction into the scalar field."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


ZERO = GaussianRational(Fraction(0))
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def display_negative(value: GaussianRational) -> bool:
    """Sign used when hoisting '-' out of a printed term: negative real part
    wins, a purely imaginary value takes the sign of its imaginary part."""
    if value.real:
        return value.real < 0
    return value.imag < 0


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _imag_magnitude_text(magnitude: Fraction) -> str:
    if magnitude == 1:
        return "i"
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}i"
    return f"({_fraction_text(magnitude)})i"


def scalar_text(value: GaussianRational) -> str:
    """Canonical decimal-free rendering: "p/q", "(p/q)i", or a sum of both."""
    re, im = value.real, value.imag
    if not re and not im:
        return "0"
    if not im:
        return _fraction_text(re)
    imag = _imag_magnitude_text(abs(im))
    if not re:
        return imag if im > 0 else f"-{imag}"
    joiner = "+" if im > 0 else "-"
    return f"{_fraction_text(re)}{joiner}{imag}"


def scalar_factor_text(value: GaussianRational) -> str:
    """Rendering safe to splice into a product: mixed values get parentheses."""
    if value.real and value.imag:
        return f"({scalar_text(value)})"
    return scalar_text(value)
