import random
from fractions import Fraction

import pytest

from src.algebra.bipoly import (
    BiDegree,
    BiPoly,
    QuadraticKind,
    binary_form_gcd,
    divide_exact,
    factor_binary_quadratic,
    monomial_basis,
    mul,
    multiplication_matrix,
    rational_roots,
    substitute,
)
from src.algebra.exactla import QMatrix, det
from src.cli.parser import parse_poly
from src.config.exception import DimensionError, NotDivisibleError


def _random_form(rng: random.Random, bidegree: BiDegree) -> BiPoly:
    while True:
        f = BiPoly.from_vector(bidegree, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(bidegree.dimension)])
        if not f.is_zero:
            return f


def _random_bidegree(rng: random.Random) -> BiDegree:
    return BiDegree(rng.randint(0, 2), rng.randint(0, 2))


def _resultant(a: BiPoly, b: BiPoly) -> Fraction:
    """Sylvester determinant of two binary forms in s, t."""
    m, n = a.bidegree.m, b.bidegree.m
    rows = []
    for shift in range(n):
        rows.append([0] * shift + list(a.coefficient_vector()) + [0] * (n - 1 - shift))
    for shift in range(m):
        rows.append([0] * shift + list(b.coefficient_vector()) + [0] * (m - 1 - shift))
    return det(QMatrix.from_rows(rows))


def test_canonical_basis_order():
    """Descending lex with s > t > u > v"""
    assert monomial_basis(BiDegree(1, 1)) == ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))
    assert len(monomial_basis(BiDegree(2, 1))) == BiDegree(2, 1).dimension == 6
    assert BiDegree(-1, 2).dimension == 0


def test_bidegree_partial_order():
    """Componentwise order; (1,2) and (2,1) are incomparable"""
    assert BiDegree(1, 1) <= BiDegree(2, 1)
    assert BiDegree(1, 0) < BiDegree(1, 1)
    assert not BiDegree(1, 2) <= BiDegree(2, 1)
    assert not BiDegree(2, 1) <= BiDegree(1, 2)
    assert BiDegree(3, 2).as_shift() == "(-3,-2)"


def test_string_form_is_stable():
    """Terms print in canonical order with exact rational coefficients"""
    assert str(parse_poly("s*t*v + s^2*u")) == "s^2*u + s*t*v"
    assert str(parse_poly("3/2 s t v - t^2*v")) == "3/2*s*t*v - t^2*v"
    f = parse_poly("2*s^2*u - 4*t^2*v")
    assert str(f.normalized()) == "s^2*u - 2*t^2*v"


def test_mixed_bidegree_terms_are_rejected():
    """A form cannot hold monomials of two bidegrees"""
    with pytest.raises(DimensionError):
        BiPoly(BiDegree(2, 1), {(2, 0, 1, 0): 1, (1, 0, 1, 0): 1})
    with pytest.raises(DimensionError):
        parse_poly("s*u") + parse_poly("s^2*u")


def test_product_and_multiplication_matrix():
    """mul agrees with the matrix of multiplication by f"""
    f = parse_poly("s + t")
    g = parse_poly("s*u - t*v")
    product = mul(f, g)
    assert str(product) == "s^2*u + s*t*u - s*t*v - t^2*v"
    matrix = multiplication_matrix(f, BiDegree(1, 1))
    assert matrix.shape == (BiDegree(2, 1).dimension, BiDegree(1, 1).dimension)
    assert matrix.apply(g.coefficient_vector()) == product.coefficient_vector()


def test_exact_division():
    """divide_exact recovers the cofactor or refuses"""
    assert divide_exact(parse_poly("s*t*u"), parse_poly("s")) == parse_poly("t*u")
    assert divide_exact(parse_poly("s^2*u - t^2*u"), parse_poly("s + t")) == parse_poly("s*u - t*u")
    with pytest.raises(NotDivisibleError):
        divide_exact(parse_poly("s^2*u + t^2*v"), parse_poly("s"))


def test_substitute_linear_change():
    """s -> s + t fixes degrees and expands"""
    f = parse_poly("s^2*u")
    images = [parse_poly("s + t"), parse_poly("t"), parse_poly("u"), parse_poly("v")]
    assert substitute(f, images) == parse_poly("s^2*u + 2*s*t*u + t^2*u")


def test_evaluate():
    """Evaluation at a rational point"""
    f = parse_poly("s^2*u + 1/2*t^2*v")
    assert f.evaluate([1, 2, 3, 4]) == Fraction(3) + Fraction(8)


def test_binary_gcd():
    """gcd of binary forms, including shared powers of the variables"""
    assert str(binary_form_gcd(parse_poly("s^2 - t^2"), parse_poly("s^2 + 2*s*t + t^2"))) == "s + t"
    assert str(binary_form_gcd(parse_poly("s^2*t"), parse_poly("s*t^2"))) == "s*t"
    assert str(binary_form_gcd(parse_poly("u^2"), parse_poly("v^2"))) == "1"
    assert str(binary_form_gcd(parse_poly("2*u*v"), parse_poly("u*v + v^2"))) == "v"


def test_rational_roots():
    """Roots are normalized points (first nonzero coordinate 1)"""
    roots = rational_roots(parse_poly("s^2 - 4*t^2"))
    assert set(roots) == {(1, Fraction(1, 2)), (1, Fraction(-1, 2))}
    assert rational_roots(parse_poly("s*t")) == [(1, 0), (0, 1)]
    assert rational_roots(parse_poly("s^2 + t^2")) == []


def test_factor_split_quadratic():
    """u*v splits into its two coordinate factors"""
    result = factor_binary_quadratic(parse_poly("u*v"))
    assert result.kind is QuadraticKind.SPLIT_RATIONAL
    assert result.discriminant == 1
    assert [str(f) for f in result.factors] == ["u", "v"]

    result = factor_binary_quadratic(parse_poly("u^2 - v^2"))
    assert {str(f) for f in result.factors} == {"u + v", "u - v"}


def test_factor_double_and_irrational():
    """Zero discriminant gives a double root, non-square discriminant no rational factor"""
    double = factor_binary_quadratic(parse_poly("u^2"))
    assert double.kind is QuadraticKind.DOUBLE_ROOT
    assert [str(f) for f in double.factors] == ["u"]

    irrational = factor_binary_quadratic(parse_poly("u^2 - 2*v^2"))
    assert irrational.kind is QuadraticKind.IRRATIONAL_PAIR
    assert irrational.discriminant == 8
    assert irrational.factors == ()
    assert factor_binary_quadratic(parse_poly("u^2 + v^2")).kind is QuadraticKind.IRRATIONAL_PAIR


def test_product_is_commutative_and_associative():
    """f*g = g*f and (f*g)*h = f*(g*h) on random forms"""
    rng = random.Random(11)
    for _ in range(20):
        f, g, h = (_random_form(rng, _random_bidegree(rng)) for _ in range(3))
        assert mul(f, g) == mul(g, f)
        assert mul(mul(f, g), h) == mul(f, mul(g, h))
        assert mul(f, g).bidegree == f.bidegree + g.bidegree


def test_product_distributes_over_sums():
    """f*(g + h) = f*g + f*h for g, h of the same bidegree"""
    rng = random.Random(12)
    for _ in range(20):
        f = _random_form(rng, _random_bidegree(rng))
        d = _random_bidegree(rng)
        g, h = _random_form(rng, d), _random_form(rng, d)
        assert mul(f, g + h) == mul(f, g) + mul(f, h)


def test_division_undoes_products():
    """(g*h) / g = h for random nonzero g"""
    rng = random.Random(13)
    for _ in range(20):
        g, h = _random_form(rng, _random_bidegree(rng)), _random_form(rng, _random_bidegree(rng))
        assert divide_exact(mul(g, h), g) == h


def test_gcd_divides_both_forms():
    """The gcd divides each input, with and without a planted common factor"""
    rng = random.Random(14)
    for k in range(20):
        common = _random_form(rng, BiDegree(k % 3, 0))
        f = mul(_random_form(rng, BiDegree(rng.randint(0, 3), 0)), common)
        g = mul(_random_form(rng, BiDegree(rng.randint(0, 3), 0)), common)
        if f.bidegree == BiDegree(0, 0) or g.bidegree == BiDegree(0, 0):
            continue
        d = binary_form_gcd(f, g)
        divide_exact(f, d)
        divide_exact(g, d)
        divide_exact(d, common)


def test_gcd_recovers_the_shared_factor_of_coprime_cofactors():
    """gcd(a*c, b*c) = c up to scale when a and b have nonzero resultant"""
    rng = random.Random(15)
    checked = 0
    while checked < 20:
        a = _random_form(rng, BiDegree(rng.randint(1, 3), 0))
        b = _random_form(rng, BiDegree(rng.randint(1, 3), 0))
        if _resultant(a, b) == 0:
            continue
        c = _random_form(rng, BiDegree(rng.randint(1, 2), 0))
        d = binary_form_gcd(mul(a, c), mul(b, c))
        divide_exact(d, c)
        assert d == c.normalized()
        checked += 1


def test_gcd_of_difference_of_squares_and_linear_factor():
    """gcd(s^2 - t^2, s + t) = s + t"""
    assert binary_form_gcd(parse_poly("s^2 - t^2"), parse_poly("s + t")) == parse_poly("s + t")
