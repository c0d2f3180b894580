"""
Implicit equation of the surface from the (1,1) strand of the approximation
complex, checked against a brute-force evaluation kernel.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.algebra.bipoly import BiDegree, BiPoly, Monomial, monomial_basis, mul
from src.algebra.exactla import QMatrix, kernel_basis, rank
from src.algebra.xpoly import XMonomial, XPoly, XPolyMatrix, pullback, quadric_matrix, xdet, xmonomials
from src.config.exception import DimensionError, ImplicitizationError
from src.config.logger import setup_logger
from src.models.analysis import ImplicitResult, NumericalType, TypeReport
from src.surface.ideal import GENERATOR_BIDEGREE, SurfaceIdeal
from src.surface.resolution import SyzygyVector, syzygies_in_bidegree

logger = setup_logger("Implicitizer", "implicitize.log")

MU = BiDegree(1, 1)
Z1_DIMENSION = 4


def z1_basis_11(ideal: SurfaceIdeal) -> List[SyzygyVector]:
    """Syzygies whose four coordinates all lie in R_{1,1}."""
    gens = [(g, g.bidegree) for g in ideal.generators]
    basis = syzygies_in_bidegree(gens, GENERATOR_BIDEGREE + MU)
    if len(basis) != Z1_DIMENSION:
        raise DimensionError(f"unexpected Z1 dimension: {len(basis)} (expected {Z1_DIMENSION})")
    return basis


@dataclass(frozen=True)
class D1Matrix:
    """Rows indexed by [su, sv, tu, tv], one column per (1,1) syzygy."""

    matrix: XPolyMatrix
    syzygies: Tuple[SyzygyVector, ...]

    @property
    def row_labels(self) -> Tuple[Monomial, ...]:
        return monomial_basis(MU)

    def determinant(self) -> XPoly:
        return xdet(self.matrix)


def assemble_d1(ideal: SurfaceIdeal, syzygies: Optional[List[SyzygyVector]] = None) -> D1Matrix:
    syzygies = syzygies if syzygies is not None else z1_basis_11(ideal)
    rows = []
    for mono in monomial_basis(MU):
        rows.append([
            XPoly.linear_form([h.coefficient(mono) for h in syzygy.coordinates])
            for syzygy in syzygies
        ])
    return D1Matrix(XPolyMatrix(rows), tuple(syzygies))


def kernel_oracle(ideal, d: int) -> List[XPoly]:
    """Basis of the degree-d forms F with F(p0, ..., p3) = 0."""
    if d < 1:
        raise DimensionError(f"oracle degree must be positive, got {d}")
    generators = tuple(getattr(ideal, "generators", ideal))
    products: Dict[XMonomial, BiPoly] = {(0, 0, 0, 0): BiPoly.one()}

    def product(mono: XMonomial) -> BiPoly:
        if mono not in products:
            i = next(k for k, e in enumerate(mono) if e)
            lowered = tuple(e - 1 if k == i else e for k, e in enumerate(mono))
            products[mono] = mul(product(lowered), generators[i])
        return products[mono]

    monomials = xmonomials(d)
    columns = [product(mono).coefficient_vector() for mono in monomials]
    target = generators[0].bidegree * d
    matrix = QMatrix.from_columns(columns, target.dimension)
    basis = [XPoly.from_vector(d, v).normalized() for v in kernel_basis(matrix)]
    logger.info(f"Kernel oracle in degree {d}: {matrix.rows}x{matrix.cols} matrix, kernel dimension {len(basis)}")
    return basis


def quadric_rank(Q: XPoly) -> int:
    return rank(quadric_matrix(Q))


def _proportionality(F: XPoly, G: XPoly):
    """The scalar c with F = c*G, or None."""
    if G.is_zero or F.degree != G.degree:
        return None
    c = F.leading_coefficient() / G.leading_coefficient()
    return c if F == G.scale(c) else None


def implicit_equation(ideal: SurfaceIdeal, report: Optional[TypeReport] = None, oracle: bool = False) -> ImplicitResult:
    if report is None:
        from src.surface.classify import classify

        report = classify(ideal)

    det = assemble_d1(ideal).determinant()
    if det.is_zero:
        raise ImplicitizationError("determinant of d1 vanishes")

    if report.numerical_type is NumericalType.TYPE_6:
        quadrics = kernel_oracle(ideal, 2)
        if len(quadrics) != 1:
            raise ImplicitizationError(f"expected one quadric through the image, found {len(quadrics)}")
        reduced = quadrics[0]
        if _proportionality(det, reduced * reduced) is None:
            raise ImplicitizationError(f"det(d1) is not a multiple of the square of {reduced}")
        multiplicity, birational, checked = 2, False, True
    else:
        reduced = det.normalized()
        multiplicity, birational, checked = 1, True, False
        if oracle:
            quartics = kernel_oracle(ideal, 4)
            if len(quartics) != 1 or _proportionality(reduced, quartics[0]) is None:
                raise ImplicitizationError(
                    f"oracle disagrees: {len(quartics)} quartic(s) through the image, det(d1) = {reduced}"
                )
            checked = True

    if not pullback(reduced, ideal).is_zero:
        raise ImplicitizationError(f"{reduced} does not vanish on the parameterization")
    logger.info(f"Implicit equation {reduced} (multiplicity {multiplicity})")
    return ImplicitResult(
        det=det,
        reduced=reduced,
        multiplicity=multiplicity,
        birational=birational,
        oracle_checked=checked,
    )
