"""
The ideal of a tensor product surface: validation, basepoints, Hilbert functions.
"""

import random
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from src.algebra.bipoly import (
    BiDegree,
    BiPoly,
    binary_form_gcd,
    monomial_basis,
    monomial_index,
    monomial_product,
    rational_roots,
    substitute,
)
from src.algebra.exactla import EchelonBasis, QMatrix, kernel_basis, rank
from src.config.exception import InvalidIdealError
from src.config.logger import setup_logger
from src.models.analysis import Basepoint, BasepointReport, HilbertTable

logger = setup_logger("SurfaceIdeal", "ideal.log")

GENERATOR_BIDEGREE = BiDegree(2, 1)
GENERATOR_COUNT = 4


@dataclass(frozen=True)
class SurfaceIdeal:
    """Ordered generators of I_U; the surface pipeline expects four (2,1)-forms."""

    generators: Tuple[BiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i: int) -> BiPoly:
        return self.generators[i]

    @property
    def shifts(self) -> Tuple[BiDegree, ...]:
        return tuple(g.bidegree for g in self.generators)

    @property
    def is_surface(self) -> bool:
        return len(self.generators) == GENERATOR_COUNT and all(
            g.bidegree == GENERATOR_BIDEGREE for g in self.generators
        )

    def coefficient_matrix(self) -> QMatrix:
        """Rows are generators, columns the canonical basis of their common bidegree."""
        return QMatrix.from_rows([g.coefficient_vector() for g in self.generators])

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def validate(generators: Iterable[BiPoly]) -> SurfaceIdeal:
    gens = tuple(generators)
    if len(gens) != GENERATOR_COUNT:
        raise InvalidIdealError(f"expected {GENERATOR_COUNT} generators, got {len(gens)}")
    for i, g in enumerate(gens):
        if g.bidegree != GENERATOR_BIDEGREE or g.is_zero:
            raise InvalidIdealError(
                f"wrong bidegree: generator {i} ({g}) has bidegree {g.bidegree}, expected {GENERATOR_BIDEGREE}"
            )
    ideal = SurfaceIdeal(gens)
    if rank(ideal.coefficient_matrix()) < GENERATOR_COUNT:
        raise InvalidIdealError("dependent generators")
    logger.debug(f"Validated ideal {ideal}")
    return ideal


def _split_uv(p: BiPoly) -> Tuple[BiPoly, BiPoly]:
    """p = q*u + r*v with q, r binary forms in s,t."""
    m = p.bidegree.m
    q = BiPoly(BiDegree(m, 0), {(a, b, 0, 0): x for (a, b, c, d), x in p.terms.items() if c == 1})
    r = BiPoly(BiDegree(m, 0), {(a, b, 0, 0): x for (a, b, c, d), x in p.terms.items() if d == 1})
    return q, r


def is_basepoint_free(ideal: SurfaceIdeal) -> BasepointReport:
    """
    Basepoints are the (s:t) where the 4x2 matrix [q_i | r_i] drops rank, i.e.
    the common roots of its six 2x2 minors. Where the matrix vanishes the
    whole fiber (s:t) x P^1 is reported as a single line of basepoints.
    """
    rows = [_split_uv(p) for p in ideal.generators]
    minors = [qi * rj - qj * ri for (qi, ri), (qj, rj) in combinations(rows, 2)]
    nonzero = [f for f in minors if not f.is_zero]
    if not nonzero:
        logger.info("All minors vanish: generator matrix has rank <= 1 everywhere")
        return BasepointReport(free=False, rank_deficient_everywhere=True)

    witness = reduce(binary_form_gcd, nonzero)
    if witness.bidegree == BiDegree(0, 0):
        return BasepointReport(free=True)

    basepoints: List[Basepoint] = []
    for a, b in rational_roots(witness):
        evaluated = QMatrix.from_rows([
            (q.evaluate((a, b, 0, 0)), r.evaluate((a, b, 0, 0))) for q, r in rows
        ])
        kernel = kernel_basis(evaluated)
        if len(kernel) == 2:
            basepoints.append(Basepoint(st=(a, b)))
            continue
        for c, d in kernel:
            lead = c if c != 0 else d
            basepoints.append(Basepoint(st=(a, b), uv=(c / lead, d / lead)))
    logger.info(f"Ideal has basepoints, witness {witness}, {len(basepoints)} rational")
    return BasepointReport(free=False, witness=witness, basepoints=basepoints)


def hilbert_function(ideal, d: BiDegree) -> int:
    """dim (R/I)_d = dim R_d - dim I_d."""
    generators = getattr(ideal, "generators", ideal)
    if not d.is_effective:
        return 0
    index = monomial_index(d)
    image = EchelonBasis(len(index))
    for g in generators:
        source = d - g.bidegree
        for mono in monomial_basis(source):
            vector = [0] * len(index)
            for m, x in g.terms.items():
                vector[index[monomial_product(m, mono)]] = x
            image.add(vector)
            if image.is_full:
                return 0
    return len(index) - len(image)


def hilbert_table(ideal, imax: int, jmax: int) -> HilbertTable:
    values = [[hilbert_function(ideal, BiDegree(i, j)) for j in range(jmax + 1)] for i in range(imax + 1)]
    return HilbertTable(imax=imax, jmax=jmax, values=values)


# ---------------------------------------------------------------------------
# Coordinate changes
# ---------------------------------------------------------------------------

def _linear_images(matrix: QMatrix, names: Tuple[str, str]) -> List[BiPoly]:
    x, y = (BiPoly.variable(n) for n in names)
    return [x.scale(matrix[i, 0]) + y.scale(matrix[i, 1]) for i in range(2)]


def change_coordinates(ideal: SurfaceIdeal, st: QMatrix, uv: QMatrix, generators: QMatrix) -> SurfaceIdeal:
    """
    Apply s,t -> st*(s,t), u,v -> uv*(u,v) and recombine the generators by
    ``generators`` (row i gives the coefficients of the new i-th generator).
    """
    images = _linear_images(st, ("s", "t")) + _linear_images(uv, ("u", "v"))
    moved = [substitute(p, images) for p in ideal.generators]
    combined = []
    for i in range(generators.rows):
        total = BiPoly.zero(moved[0].bidegree)
        for k, p in enumerate(moved):
            total = total + p.scale(generators[i, k])
        combined.append(total)
    return SurfaceIdeal(tuple(combined))


def random_unimodular(size: int, rng: random.Random, steps: int = 6) -> QMatrix:
    """Integral matrix of determinant +-1 built from random elementary operations."""
    rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        k = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    if rng.random() < 0.5:
        i, j = rng.sample(range(size), 2)
        rows[i], rows[j] = rows[j], rows[i]
    return QMatrix.from_rows(rows)


def random_transform(ideal: SurfaceIdeal, rng: random.Random) -> SurfaceIdeal:
    return change_coordinates(
        ideal, random_unimodular(2, rng), random_unimodular(2, rng), random_unimodular(4, rng)
    )


def span_contains(ideal: SurfaceIdeal, forms: Sequence[BiPoly]) -> bool:
    """True when every form lies in the linear span of the generators."""
    basis = EchelonBasis(GENERATOR_BIDEGREE.dimension)
    for g in ideal.generators:
        basis.add(g.coefficient_vector())
    return all(basis.contains(f.coefficient_vector()) for f in forms)
