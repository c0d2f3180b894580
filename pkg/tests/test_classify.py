import random

import pytest

from src.algebra.exactla import EchelonBasis
from src.algebra.xpoly import XPoly, substitute
from src.cli.parser import parse_generators, parse_poly
from src.config.exception import BasepointError
from src.models.analysis import NumericalType, PrimeKind
from src.surface.classify import (
    adapted_basis,
    classify,
    coordinate_line,
    extract_common_factor,
    is_decomposable,
    linear_syzygies,
    q_invariant,
    singular_line_candidates,
    verify_singular_component,
)
from src.surface.ideal import validate
from src.surface.implicitize import implicit_equation
from tests.conftest import TYPE_EXAMPLES, WITH_BASEPOINTS

X0, X1, X2, X3 = (XPoly.variable(i) for i in range(4))


@pytest.fixture(scope="module")
def reports(ideals):
    return {label: classify(ideal) for label, ideal in ideals.items()}


@pytest.mark.parametrize("label", sorted(TYPE_EXAMPLES))
def test_classification_of_examples(reports, label):
    """Each example lands in its own numerical type"""
    assert reports[label].numerical_type.value == label


@pytest.mark.parametrize("label", sorted(TYPE_EXAMPLES))
def test_linear_syzygy_pattern(reports, label):
    """At most one kind of linear syzygy, and never two (1,0) syzygies"""
    report = reports[label]
    assert not (report.n01 and report.n10)
    assert report.n10 <= 1
    assert report.n01 <= 2


def test_quadratic_syzygy_separates_types(reports):
    """A (0,2) syzygy appears for Types 2 and 4 and not for Types 1 and 3"""
    assert reports["2"].has02 and reports["4"].has02
    assert not reports["1"].has02 and not reports["3"].has02


def test_type_5a_invariants(reports):
    """Type 5a example: p = s^2, q = uv, primes <s,t,u> and <s,t,v>"""
    report = reports["5a"]
    assert str(report.p) == "s^2"
    assert str(report.q) == "u*v"
    assert report.q_discriminant != 0
    assert [prime.describe() for prime in report.embedded_primes] == ["<s,t,u>", "<s,t,v>"]


def test_type_5b_invariants(reports):
    """q = u^2 has a double root and a single embedded prime"""
    report = reports["5b"]
    assert str(report.q) == "u^2"
    assert report.q_discriminant == 0
    assert [prime.describe() for prime in report.embedded_primes] == ["<s,t,u>"]


def test_type_4_factor_is_decomposable(ideals, reports):
    """The (1,0) syzygy (t, -s, 0, 0) of Type 4 gives p = tv"""
    report = reports["4"]
    assert str(report.p) == "t*v"
    assert is_decomposable(report.p)
    assert not is_decomposable(parse_poly("s*u + t*v"))
    _, (syzygy,) = linear_syzygies(ideals["4"])
    assert extract_common_factor(syzygy, ideals["4"]) == report.p


def test_embedded_prime_kinds(reports):
    """Maximal ideal for Types 1-4, an existence-only prime for Types 2 and 4, none for Type 6"""
    assert [p.kind for p in reports["1"].embedded_primes] == [PrimeKind.MAXIMAL]
    assert [p.kind for p in reports["3"].embedded_primes] == [PrimeKind.MAXIMAL]
    assert [p.kind for p in reports["2"].embedded_primes] == [PrimeKind.MAXIMAL, PrimeKind.EXISTENCE_ONLY]
    assert [p.kind for p in reports["4"].embedded_primes] == [PrimeKind.MAXIMAL, PrimeKind.EXISTENCE_ONLY]
    assert reports["6"].embedded_primes == []
    assert reports["6"].p is None


@pytest.mark.parametrize("label", ["5a", "5b"])
def test_q_does_not_depend_on_the_complement(ideals, reports, label):
    """Any completion of {pu, pv} gives the same normalized q"""
    ideal = ideals[label]
    p = reports[label].p
    rng = random.Random(f"complement-{label}")
    checked = 0
    while checked < 10:
        complement = []
        for _ in range(2):
            weights = [rng.randint(-3, 3) for _ in range(4)]
            form = ideal[0].scale(weights[0])
            for g, w in zip(ideal.generators[1:], weights[1:]):
                form = form + g.scale(w)
            complement.append(form)
        basis = EchelonBasis(6)
        for f in [p * parse_poly("u"), p * parse_poly("v")] + complement:
            basis.add(f.coefficient_vector())
        if len(basis) < 4:
            continue
        assert q_invariant(ideal, p, complement) == reports[label].q
        checked += 1


def test_irrational_q():
    """q = u^2 - 1/2*v^2 has no rational roots: a conjugate pair of embedded primes"""
    expected_q = "u^2 - 1/2*v^2"
    ideal = validate(parse_generators(["s^2*u", "s^2*v", "t^2*u + s*t*v", "t^2*v + 2*s*t*u"]))
    report = classify(ideal)
    assert report.numerical_type is NumericalType.TYPE_5A
    assert str(report.q) == expected_q
    assert [p.kind for p in report.embedded_primes] == [PrimeKind.ST_PLUS_LINEAR] * 2
    assert {p.conjugate for p in report.embedded_primes} == {"+", "-"}


@pytest.mark.parametrize("key", sorted(WITH_BASEPOINTS))
def test_classification_requires_basepoint_free(key):
    """Ideals with basepoints are refused with exit code 4"""
    ideal = validate(parse_generators(WITH_BASEPOINTS[key]))
    with pytest.raises(BasepointError) as info:
        classify(ideal)
    assert info.value.exit_code == 4
    assert info.value.witness == key


def test_adapted_basis_starts_with_linear_syzygy_pair(ideals, reports):
    """The first two adapted forms are p*u and p*v for Type 5"""
    forms, transform = adapted_basis(ideals["5a"], reports["5a"])
    assert forms[0] == parse_poly("s^2*u") and forms[1] == parse_poly("s^2*v")
    assert transform.shape == (4, 4)


def test_singular_lines_of_type_5a(ideals, reports):
    """The 5a example is singular along V(x0,x1), V(x0,x2) and V(x1,x3)"""
    F = implicit_equation(ideals["5a"], reports["5a"]).reduced
    lines = singular_line_candidates(ideals["5a"], reports["5a"], F)
    assert {line.indices for line in lines} == {(0, 1), (0, 2), (1, 3)}
    assert [line.describe() for line in lines] == ["V(x0, x1)", "V(x0, x2)", "V(x1, x3)"]


def test_singular_lines_of_type_5b(ideals, reports):
    """The double-root case keeps only V(x0,x1) and V(x0,x2)"""
    F = implicit_equation(ideals["5b"], reports["5b"]).reduced
    lines = singular_line_candidates(ideals["5b"], reports["5b"], F)
    assert {line.indices for line in lines} == {(0, 1), (0, 2)}


@pytest.mark.parametrize("label", ["3", "4"])
def test_singular_line_through_linear_syzygy(ideals, reports, label):
    """Types 3 and 4 are singular along the line of the (1,0) syzygy"""
    F = implicit_equation(ideals[label], reports[label]).reduced
    lines = singular_line_candidates(ideals[label], reports[label], F)
    assert (0, 1) in {line.indices for line in lines}


def test_type_6_quadric_has_no_singular_lines(ideals, reports):
    """A smooth quadric is singular nowhere"""
    F = implicit_equation(ideals["6"], reports["6"]).reduced
    assert singular_line_candidates(ideals["6"], reports["6"], F) == []


def test_verify_singular_component():
    """Q^2 is singular along the conic it contains, Q is not"""
    Q = X0 * X3 - X1 * X2
    curve = [parse_poly("s^2"), parse_poly("s*t"), parse_poly("s*t"), parse_poly("t^2")]
    assert not verify_singular_component(Q, curve)
    assert verify_singular_component(Q * Q, curve)


def test_coordinate_line_parameterization(ideals, reports):
    """The parameterized line lies in both of its defining hyperplanes"""
    _, transform = adapted_basis(ideals["5a"], reports["5a"])
    line, curve = coordinate_line(transform, 1, 3)
    assert [str(f) for f in line.forms] == ["x1", "x3"]
    assert all(substitute(form, curve).is_zero for form in line.forms)
