"""Polynomial calculus over the Gaussian rationals.

Two layers:

* ``UniPoly`` -- dense univariate polynomials in the argument variable
  (printed as ``s``), used for the coefficients of the multivariate layer
  and for the shift multipliers.

* ``GammaPoly`` -- sparse multivariate polynomials in placeholders
  ``G(0), ..., G(n-1)`` standing for Gamma values at shifted arguments.
  Terms live in a map from exponent tuples to ``UniPoly`` coefficients:

      P = sum over exponent vectors e of  coeff_e(s) * G(0)^e[0] * ... * G(n-1)^e[n-1]

  Zero coefficients are never stored, so structural equality of the maps is
  polynomial equality.

Monomials are plain exponent tuples.  They are ordered lexicographically,
scanning from index 0: the first differing exponent decides, larger wins.
``highest_term`` and ``height`` refer to this order.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Tuple, Union

from .scalars import (
    ONE,
    ZERO,
    GaussianRational,
    ScalarLike,
    display_negative,
    scalar_factor_text,
    scalar_text,
    to_scalar,
)

Monomial = Tuple[int, ...]

#: Degree of the zero polynomial.  A true minus infinity keeps degree
#: comparisons valid without special-casing (-inf < d and -inf + d = -inf).
MINUS_INFINITY = float("-inf")


# ---------------------------------------------------------------------------
# monomials


def lex_compare(m1: Monomial, m2: Monomial) -> int:
    """Compare exponent tuples lexicographically from index 0.

    Returns -1, 0 or 1.  Raises ``ValueError`` when the arities differ.
    """
    if len(m1) != len(m2):
        raise ValueError(f"monomial arity mismatch: {len(m1)} vs {len(m2)}")
    for a, b in zip(m1, m2):
        if a != b:
            return -1 if a < b else 1
    return 0


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if len(m1) != len(m2):
        raise ValueError(f"monomial arity mismatch: {len(m1)} vs {len(m2)}")
    return tuple(a + b for a, b in zip(m1, m2))


# ---------------------------------------------------------------------------
# univariate layer

UniPolyLike = Union["UniPoly", GaussianRational, int]


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial; ``coeffs[d]`` is the coefficient of the d-th power.

    Trailing zeros are stripped on construction, so the zero polynomial is the
    empty tuple and the leading coefficient of anything else is nonzero.
    """

    coeffs: Tuple[GaussianRational, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(to_scalar(c) for c in self.coeffs)
        while cleaned and cleaned[-1].is_zero():
            cleaned = cleaned[:-1]
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors

    @classmethod
    def zero(cls) -> UniPoly:
        return cls(())

    @classmethod
    def one(cls) -> UniPoly:
        return cls((ONE,))

    @classmethod
    def constant(cls, value: ScalarLike) -> UniPoly:
        return cls((to_scalar(value),))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((ZERO, ONE))

    @classmethod
    def linear(cls, shift: ScalarLike) -> UniPoly:
        """The monic linear polynomial  s + shift."""
        return cls((to_scalar(shift), ONE))

    # -- structure

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def leading_coefficient(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> GaussianRational:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring operations

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: UniPolyLike) -> UniPoly:
        if not _unipoly_operand(other):
            return NotImplemented
        other = _to_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __sub__(self, other: UniPolyLike) -> UniPoly:
        if not _unipoly_operand(other):
            return NotImplemented
        return self + (-_to_unipoly(other))

    def __rsub__(self, other: UniPolyLike) -> UniPoly:
        return _to_unipoly(other) - self

    def __mul__(self, other: UniPolyLike) -> UniPoly:
        if not _unipoly_operand(other):
            return NotImplemented
        other = _to_unipoly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = UniPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: UniPoly) -> Tuple[UniPoly, UniPoly]:
        return euclid_divide(self, other)

    # -- evaluation and substitution

    def __call__(self, point):
        """Horner evaluation; exact for scalar-field points, float for complex."""
        if isinstance(point, (complex, float)):
            return self.eval_complex(point)
        acc = ZERO
        point = to_scalar(point)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_complex(self, point: complex) -> complex:
        acc = 0j
        point = complex(point)
        for c in reversed(self.coeffs):
            acc = acc * point + complex(c)
        return acc

    def compose_shift(self, offset: ScalarLike) -> UniPoly:
        """The polynomial evaluated at (s + offset)."""
        shifted_x = UniPoly.linear(offset)
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * shifted_x + UniPoly.constant(c)
        return acc

    def __str__(self) -> str:
        return unipoly_text(self)


def _unipoly_operand(value: object) -> bool:
    return isinstance(value, (UniPoly, GaussianRational, int, Fraction))


def _to_unipoly(value: UniPolyLike) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(to_scalar(value))


def euclid_divide(num: UniPoly, den: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Exact long division: num = quotient*den + remainder with
    remainder zero or of degree strictly below den's."""
    if not den:
        raise ValueError("division by the zero polynomial")
    quotient = UniPoly.zero()
    remainder = num
    dd = den.degree
    lead = den.leading_coefficient
    while remainder and remainder.degree >= dd:
        shift = int(remainder.degree - dd)
        factor = remainder.leading_coefficient / lead
        step = UniPoly(tuple([ZERO] * shift + [factor]))
        quotient = quotient + step
        remainder = remainder - step * den
    return quotient, remainder


# ---------------------------------------------------------------------------
# multivariate layer

GammaPolyLike = Union["GammaPoly", UniPoly, GaussianRational, int]


class GammaPoly:
    """Sparse polynomial in ``s`` and the Gamma placeholders of one arity."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Monomial, UniPolyLike] = ()):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        canonical: dict[Monomial, UniPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != arity:
                raise ValueError(
                    f"exponent tuple {mono} does not match arity {arity}"
                )
            if any(not isinstance(e, int) or e < 0 for e in mono):
                raise ValueError(f"exponents must be non-negative integers: {mono}")
            poly = _to_unipoly(coeff)
            if not poly:
                continue
            if mono in canonical:
                poly = canonical[mono] + poly
                if not poly:
                    del canonical[mono]
                    continue
            canonical[mono] = poly
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("GammaPoly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, arity: int) -> GammaPoly:
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: UniPolyLike) -> GammaPoly:
        return cls(arity, {(0,) * arity: _to_unipoly(value)})

    @classmethod
    def variable(cls, arity: int, index: int) -> GammaPoly:
        """The single placeholder G(index)."""
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        mono = tuple(1 if k == index else 0 for k in range(arity))
        return cls(arity, {mono: UniPoly.one()})

    @classmethod
    def s_var(cls, arity: int) -> GammaPoly:
        """The argument variable s embedded as a polynomial."""
        return cls.constant(arity, UniPoly.x())

    # -- structure

    @property
    def terms(self) -> Mapping[Monomial, UniPoly]:
        return MappingProxyType(self._terms)

    def coefficient(self, mono: Monomial) -> UniPoly:
        return self._terms.get(tuple(mono), UniPoly.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaPoly):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def sorted_terms(self, reverse: bool = True) -> list[Tuple[Monomial, UniPoly]]:
        """Terms ordered by monomial, highest first by default."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=reverse)

    def highest_term(self) -> Tuple[Monomial, UniPoly]:
        """The lex-maximal monomial and its coefficient polynomial."""
        if not self._terms:
            raise ValueError("the zero polynomial has no highest term")
        mono = max(self._terms)
        return mono, self._terms[mono]

    def height(self) -> int:
        """Total degree of the lex-highest monomial."""
        mono, _ = self.highest_term()
        return monomial_degree(mono)

    def total_degree(self) -> Union[int, float]:
        """Largest total degree over all stored monomials (not order-dependent)."""
        if not self._terms:
            return MINUS_INFINITY
        return max(monomial_degree(m) for m in self._terms)

    # -- ring operations

    def _check_arity(self, other: GammaPoly) -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _coerce(self, other: GammaPolyLike) -> GammaPoly:
        if isinstance(other, GammaPoly):
            self._check_arity(other)
            return other
        return GammaPoly.constant(self.arity, other)

    def __neg__(self) -> GammaPoly:
        return GammaPoly(self.arity, {m: -c for m, c in self._terms.items()})

    def __add__(self, other: GammaPolyLike) -> GammaPoly:
        other = self._coerce(other)
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = merged.get(mono, UniPoly.zero()) + coeff
            if total:
                merged[mono] = total
            else:
                merged.pop(mono, None)
        return GammaPoly(self.arity, merged)

    __radd__ = __add__

    def __sub__(self, other: GammaPolyLike) -> GammaPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: GammaPolyLike) -> GammaPoly:
        return self._coerce(other) - self

    def __mul__(self, other: GammaPolyLike) -> GammaPoly:
        if not isinstance(other, GammaPoly):
            return GammaPoly(
                self.arity,
                {m: c * _to_unipoly(other) for m, c in self._terms.items()},
            )
        self._check_arity(other)
        out: dict[Monomial, UniPoly] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = monomial_mul(m1, m2)
                total = out.get(mono, UniPoly.zero()) + c1 * c2
                if total:
                    out[mono] = total
                else:
                    out.pop(mono, None)
        return GammaPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GammaPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GammaPoly.constant(self.arity, ONE)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return gamma_poly_text(self)

    def __repr__(self) -> str:
        return f"GammaPoly({self.arity}, {gamma_poly_text(self)!r})"


def highest_term(p: GammaPoly) -> Tuple[Monomial, UniPoly]:
    return p.highest_term()


def height(p: GammaPoly) -> int:
    return p.height()


# ---------------------------------------------------------------------------
# canonical text form
#
# The grammar is the CLI's expression grammar, so any printed polynomial
# parses back to an equal value.  Terms appear highest monomial first;
# a leading '-' is hoisted out of each rendered term.


def unipoly_text(p: UniPoly, var: str = "s") -> str:
    if not p:
        return "0"
    pieces: list[str] = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        coeff = p.coeffs[power]
        if coeff.is_zero():
            continue
        negative = display_negative(coeff)
        magnitude = -coeff if negative else coeff
        factors: list[str] = []
        if power == 0 or not magnitude.is_one():
            factors.append(scalar_factor_text(magnitude))
        if power == 1:
            factors.append(var)
        elif power > 1:
            factors.append(f"{var}^{power}")
        text = "*".join(factors)
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"-{text}" if negative else f"+{text}")
    return "".join(pieces)


def _single_term(p: UniPoly) -> Union[Tuple[int, GaussianRational], None]:
    nonzero = [(d, c) for d, c in enumerate(p.coeffs) if not c.is_zero()]
    if len(nonzero) == 1:
        return nonzero[0]
    return None


def _term_text(mono: Monomial, coeff: UniPoly) -> Tuple[bool, str]:
    """Render one multivariate term as (hoisted-negative, factor text)."""
    gamma_factors = [
        f"G({k})" if e == 1 else f"G({k})^{e}"
        for k, e in enumerate(mono)
        if e
    ]
    single = _single_term(coeff)
    if single is None:
        lead = coeff.leading_coefficient
        negative = display_negative(lead)
        body = unipoly_text(-coeff if negative else coeff)
        factors = [f"({body})"] + gamma_factors
        return negative, "*".join(factors)
    power, scalar = single
    negative = display_negative(scalar)
    magnitude = -scalar if negative else scalar
    factors = []
    if not magnitude.is_one():
        factors.append(scalar_factor_text(magnitude))
    if power == 1:
        factors.append("s")
    elif power > 1:
        factors.append(f"s^{power}")
    factors.extend(gamma_factors)
    if not factors:
        factors.append("1")
    return negative, "*".join(factors)


def gamma_poly_text(p: GammaPoly) -> str:
    if not p:
        return "0"
    pieces: list[str] = []
    for mono, coeff in p.sorted_terms():
        negative, text = _term_text(mono, coeff)
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"-{text}" if negative else f"+{text}")
    return "".join(pieces)
