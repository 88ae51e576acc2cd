"""The multivariate layer: term order, highest term, height, arithmetic.

Exponent tuples compare lexicographically scanning from index 0, the first
differing exponent deciding — so among the placeholders themselves G(0) is
the largest.  The worked identity G(0)G(2) - G(1)^2 - G(0)G(1) threads
through as a golden value.
"""

import pytest
from hypothesis import given

from gamma_ideal.poly import (
    GammaPoly,
    UniPoly,
    gamma_poly_text,
    height,
    highest_term,
    lex_compare,
    monomial_degree,
    monomial_mul,
)
from strategies import gamma_polys, monomials, nonzero_gamma_polys, unipolys


def G(index, arity=3):
    return GammaPoly.variable(arity, index)


def example_identity():
    """G(0)*G(2) - G(1)^2 - G(0)*G(1), the member identity at shifts 0,1,2."""
    y, z, w = G(0), G(1), G(2)
    return y * w - z * z - y * z


# -- order


@pytest.mark.parametrize(
    "m1, m2, expected",
    [
        ((1, 5), (2, 1), -1),
        ((3, 2, 7), (3, 2, 7), 0),
        ((2, 1, 0), (2, 0, 9), 1),
    ],
)
def test_lex_compare_cases(m1, m2, expected):
    assert lex_compare(m1, m2) == expected


def test_lex_compare_rejects_mixed_arity():
    with pytest.raises(ValueError):
        lex_compare((1, 0), (1, 0, 0))


@given(monomials(3), monomials(3))
def test_lex_compare_is_antisymmetric(m1, m2):
    assert lex_compare(m1, m2) == -lex_compare(m2, m1)
    assert (lex_compare(m1, m2) == 0) == (m1 == m2)


@given(monomials(3), monomials(3), monomials(3))
def test_lex_compare_is_transitive(m1, m2, m3):
    ordered = sorted([m1, m2, m3])
    assert lex_compare(ordered[0], ordered[1]) <= 0
    assert lex_compare(ordered[1], ordered[2]) <= 0
    assert lex_compare(ordered[0], ordered[2]) <= 0


def test_monomial_degree():
    assert monomial_degree(()) == 0
    assert monomial_degree((0, 0, 0)) == 0
    assert monomial_degree((1, 2)) == 3
    assert monomial_degree((1, 0, 1)) == 2


# -- construction and canonical form


def test_zero_coefficients_are_dropped():
    p = GammaPoly(2, {(1, 0): UniPoly.zero(), (0, 1): UniPoly.one()})
    assert list(p.terms) == [(0, 1)]


def test_duplicate_monomials_merge():
    p = GammaPoly(1, [((1,), UniPoly.one()), ((1,), UniPoly.one())])
    assert p.coefficient((1,)) == UniPoly.constant(2)


def test_arity_validation():
    with pytest.raises(ValueError):
        GammaPoly(2, {(1,): UniPoly.one()})
    with pytest.raises(ValueError):
        GammaPoly(2, {(1, -1): UniPoly.one()})


def test_immutability():
    p = G(0)
    with pytest.raises(AttributeError):
        p.arity = 5


@given(gamma_polys(2), gamma_polys(2))
def test_structural_equality_and_hash(p, q):
    if p == q:
        assert hash(p) == hash(q)


# -- highest term and height


def test_highest_term_of_the_worked_identity():
    mono, coeff = highest_term(example_identity())
    assert mono == (1, 1, 0)
    assert coeff == UniPoly.constant(-1)


def test_highest_term_single_term():
    p = GammaPoly.constant(2, UniPoly.x() ** 2) * G(0, 2)
    assert highest_term(p) == ((1, 0), UniPoly.x() ** 2)


def test_highest_term_prefers_the_earlier_index():
    # G(0) beats G(1): the first exponent slot decides.
    p = G(0, 2) + G(1, 2)
    assert highest_term(p) == ((1, 0), UniPoly.one())


def test_highest_term_of_zero_raises():
    with pytest.raises(ValueError):
        highest_term(GammaPoly.zero(3))
    with pytest.raises(ValueError):
        height(GammaPoly.zero(3))


@given(nonzero_gamma_polys(3), nonzero_gamma_polys(3))
def test_order_is_multiplicative(p, q):
    assert highest_term(p * q)[0] == monomial_mul(
        highest_term(p)[0], highest_term(q)[0]
    )
    assert height(p * q) == height(p) + height(q)


def test_height_worked_values():
    assert height(example_identity()) == 2
    assert height(GammaPoly.constant(3, 5)) == 0
    assert height(GammaPoly.constant(3, UniPoly.x() ** 3) * G(0) ** 2 * G(1)) == 3


# -- ring arithmetic


@given(gamma_polys(3))
def test_additive_inverse(p):
    assert (p + (-p)).is_zero()


def test_variable_products():
    assert G(0) * G(1) == GammaPoly(3, {(1, 1, 0): UniPoly.one()})


def test_pairwise_cofactors_rebuild_the_identity():
    y, z, w = G(0), G(1), G(2)
    s = GammaPoly.s_var(3)
    rebuilt = y * (w - (s + 1) * z) + z * (s * y - z)
    assert rebuilt == example_identity()


@given(gamma_polys(2), gamma_polys(2), gamma_polys(2))
def test_multiplication_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(gamma_polys(2), unipolys)
def test_unipoly_coefficients_scale_in(p, c):
    assert p * c == GammaPoly.constant(2, c) * p


def test_mixed_arity_is_rejected():
    with pytest.raises(ValueError):
        G(0, 2) + G(0, 3)


@given(gamma_polys(2))
def test_pow_matches_repeated_product(p):
    assert p**2 == p * p


# -- text


@pytest.mark.parametrize(
    "build, text",
    [
        (lambda: GammaPoly.zero(3), "0"),
        (lambda: example_identity(), "-G(0)*G(1)+G(0)*G(2)-G(1)^2"),
        (
            lambda: GammaPoly.constant(1, UniPoly.x()) * G(0, 1) ** 2,
            "s*G(0)^2",
        ),
        (
            lambda: G(1, 2) - GammaPoly.constant(2, UniPoly.x()) * G(0, 2),
            "-s*G(0)+G(1)",
        ),
        (
            lambda: GammaPoly.constant(1, UniPoly.x() ** 2 + UniPoly.x()) * G(0, 1),
            "(s^2+s)*G(0)",
        ),
    ],
)
def test_gamma_poly_text(build, text):
    assert gamma_poly_text(build()) == text


def test_terms_are_printed_highest_first():
    p = example_identity()
    rendered = gamma_poly_text(p)
    assert rendered.startswith("-G(0)*G(1)")
