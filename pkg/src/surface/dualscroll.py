"""
Dual-scroll cross-check.

U-perp is the 2-dimensional annihilator of the generator span inside the dual
of R_{2,1}. Its two forms are pulled back to bihomogeneous forms in the dual
variables S, T, U, V; the bidegree of their common factor g predicts the
numerical type independently of the syzygy computation.

Dual coordinates are listed as X0..X5 dual to [s^2u, stu, t^2u, s^2v, stv, t^2v].
"""

from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from src.algebra.bipoly import (
    DUAL_VARIABLES,
    BiDegree,
    BiPoly,
    QuadraticKind,
    divide_exact,
    factor_binary_quadratic,
    format_terms,
    monomial_basis,
    multiplication_matrix,
    rational_roots,
)
from src.algebra.exactla import ONE, QMatrix, Vector, kernel_basis
from src.config.logger import setup_logger
from src.models.analysis import CrossCheck, DualPairing, DualReport, NumericalType, ResidualKind, TypeReport
from src.surface.classify import is_decomposable
from src.surface.ideal import GENERATOR_BIDEGREE, SurfaceIdeal, _split_uv

logger = setup_logger("DualScroll", "dualscroll.log")

LISTING_ORDER = ((2, 0, 1, 0), (1, 1, 1, 0), (0, 2, 1, 0), (2, 0, 0, 1), (1, 1, 0, 1), (0, 2, 0, 1))

FACTOR_CANDIDATES = (BiDegree(0, 1), BiDegree(1, 0), BiDegree(1, 1), BiDegree(2, 0))

ALL_BUT_SIX = [t for t in NumericalType if t is not NumericalType.TYPE_6]

Root = Tuple[Tuple, Tuple]


def _listing_positions() -> List[int]:
    canonical = monomial_basis(GENERATOR_BIDEGREE)
    return [LISTING_ORDER.index(mono) for mono in canonical]


def u_perp(ideal: SurfaceIdeal) -> List[Vector]:
    """
    Kernel basis of the 4x6 coefficient matrix, in canonical coordinates,
    each scaled so its first nonzero X-coordinate is 1.
    """
    positions = _listing_positions()
    forms = []
    for v in kernel_basis(ideal.coefficient_matrix()):
        listed = sorted(zip(positions, v))
        lead = next(x for _, x in listed if x)
        forms.append(tuple(x / lead for x in v))
    return forms


def format_dual_form(L: Sequence) -> str:
    """'X1', 'X4 - X5', ... in listing order."""
    positions = _listing_positions()
    terms = sorted((positions[k], c) for k, c in enumerate(L) if c)
    return format_terms([(f"X{k}", c) for k, c in terms])


def pairing_weight(mono, pairing: DualPairing) -> Fraction:
    if pairing is DualPairing.EVALUATION:
        return Fraction(comb(2, mono[0]), 2)
    return ONE


def pullback_dual(L: Sequence, pairing: DualPairing = DualPairing.EVALUATION) -> BiPoly:
    """Replace each coordinate by its dual monomial in S, T, U, V, weighted by the pairing."""
    basis = monomial_basis(GENERATOR_BIDEGREE)
    return BiPoly(GENERATOR_BIDEGREE, {mono: c * pairing_weight(mono, pairing) for mono, c in zip(basis, L) if c})


def common_factor(f1: BiPoly, f2: BiPoly) -> Optional[Tuple[BiPoly, Tuple[BiPoly, BiPoly]]]:
    """
    Common factor g of two forms of the same bidegree and the residuals
    (f1/g, f2/g); None when the forms are coprime.

    A factor of bidegree c exists iff f1*h2 = f2*h1 has a nonzero solution with
    h1, h2 of the complementary bidegree.
    """
    top = f1.bidegree
    found = []
    for candidate in FACTOR_CANDIDATES:
        if not candidate <= top or candidate == top:
            continue
        cofactor = top - candidate
        left = multiplication_matrix(-f2, cofactor)
        right = multiplication_matrix(f1, cofactor)
        stacked = QMatrix.from_rows([left.row(i) + right.row(i) for i in range(left.rows)])
        kernel = kernel_basis(stacked)
        if kernel:
            found.append((candidate, kernel[0][: cofactor.dimension]))
    maximal = [(c, h) for c, h in found if not any(c < other for other, _ in found)]
    if not maximal:
        return None
    candidate, h1 = maximal[0]
    g = divide_exact(f1, BiPoly.from_vector(top - candidate, h1)).normalized()
    residuals = (divide_exact(f1, g), divide_exact(f2, g))
    logger.debug(f"Common factor {g.to_string(DUAL_VARIABLES)} of bidegree {g.bidegree}")
    return g, residuals


def _normalize_point(point: Sequence) -> Tuple:
    lead = next(x for x in point if x)
    return tuple(x / lead for x in point)


def residual_root_structure(h1: BiPoly, h2: BiPoly) -> Tuple[ResidualKind, List[Root]]:
    """
    Common zeros of two (1,1)-forms h_i = A_i U + B_i V.

    The (S:T) coordinates are the roots of A1 B2 - A2 B1; an identically
    vanishing resultant, or a root over which both forms vanish for every
    (U:V), means infinitely many common zeros.
    """
    (a1, b1), (a2, b2) = _split_uv(h1), _split_uv(h2)
    resultant = a1 * b2 - a2 * b1
    if resultant.is_zero:
        return ResidualKind.INFINITE, []

    roots: List[Root] = []
    for point in rational_roots(resultant):
        at = (point[0], point[1], 0, 0)
        fiber = kernel_basis(QMatrix.from_rows([
            (a1.evaluate(at), b1.evaluate(at)),
            (a2.evaluate(at), b2.evaluate(at)),
        ]))
        if len(fiber) == 2:
            return ResidualKind.INFINITE, []
        roots.append((tuple(point), _normalize_point(fiber[0])))

    kind = factor_binary_quadratic(resultant).kind
    if kind is QuadraticKind.DOUBLE_ROOT:
        return ResidualKind.DOUBLE, sorted(roots)
    return ResidualKind.DISTINCT, sorted(roots)


def is_pairing_square(p: BiPoly, pairing: DualPairing) -> bool:
    """Whether p = c0 s^2 + c1 st + c2 t^2 is a square for the given pairing."""
    c0, c1, c2 = p.coefficient_vector()
    if pairing is DualPairing.EVALUATION:
        return c1 * c1 == 4 * c0 * c2
    return c1 * c1 == c0 * c2


def _predicted(g: Optional[BiPoly], residual_kind: ResidualKind, pairing: DualPairing) -> Tuple[bool, List[NumericalType]]:
    if g is None:
        return False, list(ALL_BUT_SIX)
    degree = g.bidegree
    if degree == BiDegree(0, 1):
        return True, []
    if degree == BiDegree(1, 1):
        if is_decomposable(g):
            return True, []
        if pairing is DualPairing.COEFFICIENT:
            return False, [NumericalType.TYPE_3]
        return False, list(ALL_BUT_SIX)
    if degree == BiDegree(2, 0):
        return False, [NumericalType.TYPE_6]
    if pairing is DualPairing.EVALUATION and residual_kind is ResidualKind.DISTINCT:
        return False, [NumericalType.TYPE_5A]
    if pairing is DualPairing.EVALUATION and residual_kind is ResidualKind.DOUBLE:
        return False, [NumericalType.TYPE_5B]
    return False, [NumericalType.TYPE_5A, NumericalType.TYPE_5B]


def dual_report(ideal: SurfaceIdeal, pairing: DualPairing = DualPairing.EVALUATION) -> DualReport:
    uperp = u_perp(ideal)
    pullbacks = [pullback_dual(L, pairing) for L in uperp]
    factor = common_factor(*pullbacks)

    g = residuals = None
    residual_kind = ResidualKind.NOT_APPLICABLE
    roots: List[Root] = []
    if factor is not None:
        g, residuals = factor
        if g.bidegree == BiDegree(1, 0):
            residual_kind, roots = residual_root_structure(*residuals)

    predicts_basepoints, predicted = _predicted(g, residual_kind, pairing)
    logger.info(
        f"Dual scroll ({pairing.value}): g = {g.to_string(DUAL_VARIABLES) if g is not None else None}, "
        f"predicted {['not basepoint free'] if predicts_basepoints else [t.value for t in predicted]}"
    )
    return DualReport(
        pairing=pairing,
        uperp=uperp,
        pullbacks=pullbacks,
        g=g,
        g_degree=g.bidegree if g is not None else None,
        residuals=residuals,
        residual_kind=residual_kind,
        residual_roots=roots,
        predicts_basepoints=predicts_basepoints,
        predicted_types=predicted,
    )


def cross_check(dual: DualReport, report: Optional[TypeReport], basepoint_free: bool = True) -> CrossCheck:
    """
    Compare the dual-scroll prediction with the syzygy classification.

    For Type 5 ideals a (1,0) factor must appear exactly when p is a square
    for the pairing in use.
    """
    predicted = dual.predicted_label()
    if not basepoint_free:
        return CrossCheck(
            consistent=True,
            predicted=predicted,
            detail="not applicable: the ideal has basepoints",
        )
    if dual.predicts_basepoints:
        return CrossCheck(
            consistent=False,
            predicted=predicted,
            detail=f"common factor of bidegree {dual.g_degree} predicts basepoints on a basepoint-free ideal",
        )

    numerical_type = report.numerical_type
    if numerical_type not in dual.predicted_types:
        return CrossCheck(
            consistent=False,
            predicted=predicted,
            detail=f"Type {numerical_type.value} is not among the predicted types",
        )
    if numerical_type in (NumericalType.TYPE_5A, NumericalType.TYPE_5B):
        square = is_pairing_square(report.p, dual.pairing)
        linear_factor = dual.g_degree == BiDegree(1, 0)
        if square != linear_factor:
            return CrossCheck(
                consistent=False,
                predicted=predicted,
                detail=f"p = {report.p} is{'' if square else ' not'} a square but the (1,0) factor is "
                       f"{'present' if linear_factor else 'absent'}",
            )
    return CrossCheck(consistent=True, predicted=predicted, detail=f"Type {numerical_type.value} as predicted")
