import random
from fractions import Fraction

import pytest

from src.algebra.bipoly import BiDegree, BiPoly, monomial_basis
from src.cli.parser import parse_generators, parse_poly, tokenize
from src.config.exception import ParseError


def test_tokens_carry_positions():
    """Every token remembers where it started"""
    tokens = tokenize("3/2 s^2*u")
    assert [t.kind for t in tokens] == ["number", "op", "number", "var", "op", "number", "op", "var"]
    assert tokens[3].position == 4


def test_explicit_and_implicit_products():
    """'*' between factors is optional"""
    assert parse_poly("s*t*u") == parse_poly("s t u") == parse_poly("s*t u")
    assert parse_poly("2*s^2*u") == parse_poly("2 s^2 u")


def test_signs_and_rational_coefficients():
    """Leading sign, subtraction and p/q coefficients"""
    f = parse_poly("-s^2*u + 3/2*s*t*v - t^2*v")
    assert f.bidegree == BiDegree(2, 1)
    assert str(f) == "-s^2*u + 3/2*s*t*v - t^2*v"


def test_like_terms_are_collected():
    """Repeated monomials add up, cancelling ones disappear"""
    assert str(parse_poly("s^2*u + s^2*u")) == "2*s^2*u"
    assert parse_poly("s^2*u - s^2*u").is_zero


def test_constant():
    """A bare number is a form of bidegree (0,0)"""
    assert parse_poly("5").bidegree == BiDegree(0, 0)


def test_string_form_parses_back():
    """str(f) is valid input for the parser"""
    rng = random.Random(4)
    basis = monomial_basis(BiDegree(2, 1))
    for _ in range(20):
        f = BiPoly(BiDegree(2, 1), {m: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for m in basis})
        if f.is_zero:
            continue
        assert parse_poly(str(f)) == f


def test_not_bihomogeneous():
    """Mixed bidegrees are reported with both monomials and the offending position"""
    with pytest.raises(ParseError) as info:
        parse_poly("s^2*u + s*u^2")
    assert info.value.reason == (
        "not bihomogeneous: s^2*u has bidegree (2,1) but s*u^2 has bidegree (1,2) at position 8"
    )
    assert info.value.position == 8
    assert info.value.exit_code == 2


@pytest.mark.parametrize("text,message,position", [
    ("s^2*x", "unexpected character 'x'", 4),
    ("s^2*u + * t", "expected a term, found '*'", 8),
    ("1/0*s", "zero denominator", 1),
    ("s^", "expected an exponent, found end of input", 2),
    ("", "empty polynomial", 0),
    ("s*u +", "expected a term, found end of input", 5),
    ("s*u v)", "unexpected character ')'", 5),
])
def test_syntax_errors(text, message, position):
    """Syntax errors name what went wrong and where"""
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == position
    assert info.value.reason.startswith(message)


def test_parse_generators_keeps_order():
    """Generators come back in input order"""
    gens = parse_generators(["t^2*v", "s^2*u"])
    assert [str(g) for g in gens] == ["t^2*v", "s^2*u"]
