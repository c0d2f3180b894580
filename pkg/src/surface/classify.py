"""
Numerical type of a basepoint-free ideal of four (2,1)-forms.

The decision tree only needs linear algebra in a few bidegrees:

    n01 = #syzygies of bidegree (0,1)   (absolute bidegree (2,2))
    n10 = #syzygies of bidegree (1,0)   (absolute bidegree (3,1))
    has02 = minimal syzygy of bidegree (0,2) present

    n01 = 2            -> Type 6
    n01 = 1            -> Type 5, split into 5a/5b by disc(q)
    n10 = 1            -> Type 4 if p is decomposable, else Type 3
    n01 = n10 = 0      -> Type 2 if has02, else Type 1
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.algebra.bipoly import (
    BiDegree,
    BiPoly,
    QuadraticKind,
    divide_exact,
    factor_binary_quadratic,
)
from src.algebra.exactla import EchelonBasis, QMatrix, kernel_basis, solve
from src.algebra.xpoly import XPoly, substitute
from src.config.exception import BasepointError, ClassificationError
from src.config.logger import setup_logger
from src.models.analysis import NumericalType, PrimeDescriptor, PrimeKind, SingularLine, TypeReport
from src.surface.ideal import GENERATOR_BIDEGREE, SurfaceIdeal, _split_uv, is_basepoint_free
from src.surface.resolution import SyzygyVector, minimal_first_syzygies, syzygies_in_bidegree

logger = setup_logger("SurfaceClassifier", "classify.log")

SYZYGY_01 = GENERATOR_BIDEGREE + BiDegree(0, 1)
SYZYGY_10 = GENERATOR_BIDEGREE + BiDegree(1, 0)
SYZYGY_02 = GENERATOR_BIDEGREE + BiDegree(0, 2)

ALLOWED_PATTERNS = {(0, 0), (1, 0), (2, 0), (0, 1)}

U, V = BiPoly.variable("u"), BiPoly.variable("v")
S, T = BiPoly.variable("s"), BiPoly.variable("t")


def _with_shifts(ideal: SurfaceIdeal):
    return [(g, g.bidegree) for g in ideal.generators]


def linear_syzygies(ideal: SurfaceIdeal) -> Tuple[List[SyzygyVector], List[SyzygyVector]]:
    """Bases of the (0,1) and (1,0) syzygies."""
    gens = _with_shifts(ideal)
    return syzygies_in_bidegree(gens, SYZYGY_01), syzygies_in_bidegree(gens, SYZYGY_10)


def has_quadratic_syzygy(ideal: SurfaceIdeal) -> bool:
    """Whether a minimal first syzygy of bidegree (0,2) exists."""
    first = minimal_first_syzygies(ideal, window=SYZYGY_02)
    return first.by_shift.get(SYZYGY_02, 0) > 0


def extract_common_factor(syzygy: SyzygyVector, ideal: SurfaceIdeal) -> BiPoly:
    """
    p from a linear syzygy sum (a_i x + b_i y) p_i = 0:

    for a (0,1) syzygy (x, y = u, v) sum b_i p_i = u*p with p of bidegree (2,0);
    for a (1,0) syzygy (x, y = s, t) sum b_i p_i = s*p with p of bidegree (1,1).
    """
    if syzygy.bidegree == SYZYGY_01:
        second, first = (0, 0, 0, 1), U
    elif syzygy.bidegree == SYZYGY_10:
        second, first = (0, 1, 0, 0), S
    else:
        raise ClassificationError(f"not a linear syzygy: bidegree {syzygy.bidegree}")
    combined = BiPoly.zero(GENERATOR_BIDEGREE)
    for h, g in zip(syzygy.coordinates, ideal.generators):
        combined = combined + g.scale(h.coefficient(second))
    return divide_exact(combined, first).normalized()


def is_decomposable(p: BiPoly) -> bool:
    """A (1,1)-form a0 su + a1 sv + a2 tu + a3 tv factors iff a0 a3 - a1 a2 = 0."""
    a0, a1, a2, a3 = p.coefficient_vector()
    return a0 * a3 - a1 * a2 == 0


def _complement(ideal: SurfaceIdeal, forms: Sequence[BiPoly]) -> List[BiPoly]:
    """Generators completing ``forms`` to a basis of span(generators), chosen greedily."""
    basis = EchelonBasis(GENERATOR_BIDEGREE.dimension)
    for f in forms:
        if not basis.add(f.coefficient_vector()):
            raise ClassificationError(f"{f} is dependent on the other adapted forms")
    chosen = []
    for g in ideal.generators:
        if basis.add(g.coefficient_vector()):
            chosen.append(g)
    return chosen


def _quotient_coordinates(w: BiPoly, p: BiPoly) -> Tuple[BiPoly, BiPoly]:
    """Image of w in (R_{2,0}/<p>) x R_{0,1}, as two (0,1)-forms."""
    pv = p.coefficient_vector()
    pivot = next(k for k, x in enumerate(pv) if x)
    rest = [k for k in range(3) if k != pivot]
    coords = [BiPoly.zero(BiDegree(0, 1)), BiPoly.zero(BiDegree(0, 1))]
    for part, var in zip(_split_uv(w), (U, V)):
        c = part.coefficient_vector()
        factor = c[pivot] / pv[pivot]
        reduced = [c[k] - factor * pv[k] for k in range(3)]
        for slot, k in enumerate(rest):
            coords[slot] = coords[slot] + var.scale(reduced[k])
    return coords[0], coords[1]


def q_invariant(ideal: SurfaceIdeal, p: BiPoly, complement: Optional[Sequence[BiPoly]] = None) -> BiPoly:
    """
    Binary quadratic q(u,v) of a Type 5 ideal, normalized.

    Any two forms completing {pu, pv} to a basis of U are mapped to
    (R_{2,0}/<p>) x R_{0,1}; q is the determinant of the resulting 2x2 matrix of
    (0,1)-forms and does not depend on the completion up to scalar.
    """
    adapted = [p * U, p * V]
    if complement is None:
        complement = _complement(ideal, adapted)
    complement = list(complement)
    if len(complement) != 2:
        raise ClassificationError(f"complement of span{{pu, pv}} must have 2 forms, got {len(complement)}")
    basis = EchelonBasis(GENERATOR_BIDEGREE.dimension)
    for f in adapted + complement:
        basis.add(f.coefficient_vector())
    if len(basis) != 4:
        raise ClassificationError("pu, pv and the complement do not span four dimensions")

    (a, c), (b, d) = (_quotient_coordinates(w, p) for w in complement)
    q = a * d - b * c
    if q.is_zero:
        raise ClassificationError("q vanishes")
    return q.normalized()


def embedded_primes(report: TypeReport) -> List[PrimeDescriptor]:
    kind = report.numerical_type
    if kind in (NumericalType.TYPE_1, NumericalType.TYPE_3):
        return [PrimeDescriptor(kind=PrimeKind.MAXIMAL)]
    if kind in (NumericalType.TYPE_2, NumericalType.TYPE_4):
        return [PrimeDescriptor(kind=PrimeKind.MAXIMAL), PrimeDescriptor(kind=PrimeKind.EXISTENCE_ONLY)]
    if kind is NumericalType.TYPE_6:
        return []

    factorization = factor_binary_quadratic(report.q)
    if factorization.kind is QuadraticKind.IRRATIONAL_PAIR:
        return [
            PrimeDescriptor(
                kind=PrimeKind.ST_PLUS_LINEAR,
                discriminant=factorization.discriminant,
                quadratic=factorization.coefficients,
                conjugate=sign,
            )
            for sign in ("+", "-")
        ]
    return [
        PrimeDescriptor(kind=PrimeKind.ST_PLUS_LINEAR, linear_form=factor)
        for factor in factorization.factors
    ]


def classify(ideal: SurfaceIdeal) -> TypeReport:
    basepoints = is_basepoint_free(ideal)
    if not basepoints.free:
        raise BasepointError("not basepoint free", witness=basepoints.witness_text())

    syz01, syz10 = linear_syzygies(ideal)
    n01, n10 = len(syz01), len(syz10)
    if (n01, n10) not in ALLOWED_PATTERNS:
        raise ClassificationError(f"impossible syzygy pattern: n01={n01}, n10={n10}")
    has02 = has_quadratic_syzygy(ideal)
    logger.info(f"Linear syzygies n01={n01}, n10={n10}, (0,2) syzygy: {has02}")

    p = q = discriminant = None
    if n01 == 2:
        numerical_type = NumericalType.TYPE_6
    elif n01 == 1:
        p = extract_common_factor(syz01[0], ideal)
        q = q_invariant(ideal, p)
        discriminant = factor_binary_quadratic(q).discriminant
        numerical_type = NumericalType.TYPE_5A if discriminant != 0 else NumericalType.TYPE_5B
    elif n10 == 1:
        p = extract_common_factor(syz10[0], ideal)
        numerical_type = NumericalType.TYPE_4 if is_decomposable(p) else NumericalType.TYPE_3
        if has02 != (numerical_type is NumericalType.TYPE_4):
            raise ClassificationError(
                f"Type {numerical_type.value} ideal with (0,2) syzygy present = {has02}"
            )
    else:
        numerical_type = NumericalType.TYPE_2 if has02 else NumericalType.TYPE_1

    report = TypeReport(
        numerical_type=numerical_type,
        n01=n01,
        n10=n10,
        has02=has02,
        p=p,
        q=q,
        q_discriminant=discriminant,
    )
    report.embedded_primes = embedded_primes(report)
    logger.info(f"Classified {ideal} as Type {numerical_type.value}")
    return report


# ---------------------------------------------------------------------------
# Singular lines
# ---------------------------------------------------------------------------

def adapted_basis(ideal: SurfaceIdeal, report: TypeReport) -> Tuple[Tuple[BiPoly, ...], QMatrix]:
    """
    Generators re-combined so that a linear syzygy involves exactly the first
    two, together with the matrix T (row i = coefficients of the i-th adapted
    form in the input generators).
    """
    p, first = None, None
    if report.n01:
        p = report.p if report.p is not None else extract_common_factor(linear_syzygies(ideal)[0][0], ideal)
        first = [p * U, p * V]
    elif report.n10:
        p = report.p
        first = [p * S, p * T]

    if first is None:
        return tuple(ideal.generators), QMatrix.identity(4)

    forms = first + _complement(ideal, first)
    system = ideal.coefficient_matrix().transpose()
    rows = []
    for f in forms:
        x = solve(system, f.coefficient_vector())
        if x is None:
            raise ClassificationError(f"adapted form {f} is not in the span of the generators")
        rows.append(x)
    return tuple(forms), QMatrix.from_rows(rows)


def coordinate_line(transform: QMatrix, i: int, j: int) -> Tuple[SingularLine, Tuple[BiPoly, ...]]:
    """
    The line y_i = y_j = 0 in adapted coordinates y = T x, as a pair of linear
    forms in x and a parameterization (a:b) -> x by (1,0)-forms in s, t.
    """
    line = SingularLine(
        indices=(i, j),
        forms=(XPoly.linear_form(transform.row(i)), XPoly.linear_form(transform.row(j))),
    )
    k1, k2 = kernel_basis(QMatrix.from_rows([transform.row(i), transform.row(j)]))
    curve = tuple(S.scale(k1[m]) + T.scale(k2[m]) for m in range(4))
    return line, curve


def verify_singular_component(F: XPoly, curve: Sequence[BiPoly]) -> bool:
    """True iff every partial derivative of F vanishes identically along the curve."""
    return all(substitute(partial, curve).is_zero for partial in F.partials())


def singular_line_candidates(ideal: SurfaceIdeal, report: TypeReport, F: XPoly) -> List[SingularLine]:
    _, transform = adapted_basis(ideal, report)
    lines = []
    for i, j in combinations(range(4), 2):
        line, curve = coordinate_line(transform, i, j)
        if verify_singular_component(F, curve):
            lines.append(line)
    logger.info(f"{len(lines)} singular coordinate line(s) in the adapted basis")
    return lines
