"""
Minimal bigraded free resolutions by linear algebra, one bidegree at a time.

Shifts are kept as positive bidegrees internally: a generator of bidegree
(a,b) sits in the free module R(-a,-b), and ``BiDegree.as_shift`` renders it
as "(-a,-b)". A syzygy's ``bidegree`` is therefore absolute (the bidegree in
which the relation holds), e.g. the linear (0,1) syzygy v*p0 - u*p1 of
(2,1)-forms lives in bidegree (2,2).
"""

import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.bipoly import BiDegree, BiPoly, monomial_basis, monomial_index, monomial_product, mul
from src.algebra.exactla import ZERO, EchelonBasis, QMatrix, Vector, kernel_basis
from src.config.exception import AppException, DimensionError, WindowExhaustedError
from src.config.logger import setup_logger
from src.config.settings import get_settings
from src.models.analysis import BettiTable

logger = setup_logger("ResolutionEngine", "resolution.log")

# R has four variables, so a resolution of an ideal has at most four modules
MAX_LEVELS = 4


def default_window() -> BiDegree:
    a, b = get_settings().window
    return BiDegree(a, b)


def window_bidegrees(window: BiDegree) -> List[BiDegree]:
    """All bidegrees in the window, by total degree, ties by larger first component."""
    degrees = [BiDegree(a, b) for a in range(window.m + 1) for b in range(window.n + 1)]
    return sorted(degrees, key=lambda d: (d.m + d.n, -d.m))


@dataclass(frozen=True)
class SyzygyVector:
    """Coordinates h_k with sum h_k * g_k = 0, each h_k of bidegree ``bidegree`` - shift_k."""

    bidegree: BiDegree
    coordinates: Tuple[BiPoly, ...]

    def combine(self, generators: Sequence[BiPoly]) -> BiPoly:
        total = BiPoly.zero(self.bidegree)
        for h, g in zip(self.coordinates, generators):
            if not h.is_zero:
                total = total + mul(h, g)
        return total

    def relative_bidegree(self, base: BiDegree) -> BiDegree:
        return self.bidegree - base

    def __str__(self) -> str:
        return "(" + ", ".join(str(h) for h in self.coordinates) + ")"


@dataclass(frozen=True)
class GradedMap:
    """
    Homogeneous map of free modules F_source -> F_target given column-wise:
    column k holds the image of the k-th source basis element.
    """

    target: Tuple[BiDegree, ...]
    source: Tuple[BiDegree, ...]
    columns: Tuple[Tuple[BiPoly, ...], ...]

    @classmethod
    def from_generators(cls, generators: Sequence[BiPoly]) -> "GradedMap":
        return cls(
            target=(BiDegree(0, 0),),
            source=tuple(g.bidegree for g in generators),
            columns=tuple((g,) for g in generators),
        )

    def entry(self, row: int, col: int) -> BiPoly:
        return self.columns[col][row]

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self o inner, for inner: F_inner.source -> F_self.source."""
        if inner.target != self.source:
            raise DimensionError("composed maps do not share the middle module")
        columns = []
        for k, column in enumerate(inner.columns):
            images = []
            for j, row_shift in enumerate(self.target):
                total = BiPoly.zero(inner.source[k] - row_shift)
                for l, coefficient in enumerate(column):
                    entry = self.columns[l][j]
                    if not coefficient.is_zero and not entry.is_zero:
                        total = total + mul(entry, coefficient)
                images.append(total)
            columns.append(tuple(images))
        return GradedMap(self.target, inner.source, tuple(columns))

    @property
    def is_zero(self) -> bool:
        return all(h.is_zero for column in self.columns for h in column)

    @property
    def has_unit_entries(self) -> bool:
        return any(
            not h.is_zero and h.bidegree == BiDegree(0, 0)
            for column in self.columns for h in column
        )

    def is_homogeneous(self) -> bool:
        return all(
            h.is_zero or h.bidegree == self.source[k] - self.target[j]
            for k, column in enumerate(self.columns) for j, h in enumerate(column)
        )

    def format_rows(self) -> List[str]:
        header = "        " + " | ".join(d.as_shift() for d in self.source)
        lines = [header]
        for j, shift in enumerate(self.target):
            lines.append(f"{shift.as_shift():>8} [" + ", ".join(str(self.columns[k][j]) for k in range(len(self.source))) + "]")
        return lines


class _Slice:
    """Coordinates of a free module and its target in one bidegree."""

    def __init__(self, phi: GradedMap, delta: BiDegree):
        self.delta = delta
        self.layout: List[Tuple[int, Tuple[int, int, int, int]]] = [
            (k, mono) for k, shift in enumerate(phi.source) for mono in monomial_basis(delta - shift)
        ]
        self.position = {key: i for i, key in enumerate(self.layout)}
        self.offsets: List[int] = []
        total = 0
        for shift in phi.target:
            self.offsets.append(total)
            total += (delta - shift).dimension
        self.codimension = total
        self.phi = phi

    def image_columns(self) -> List[List]:
        columns = []
        for k, mono in self.layout:
            column = [ZERO] * self.codimension
            for j, shift in enumerate(self.phi.target):
                entry = self.phi.columns[k][j]
                if entry.is_zero:
                    continue
                index = monomial_index(self.delta - shift)
                offset = self.offsets[j]
                for m, x in entry.terms.items():
                    column[offset + index[monomial_product(m, mono)]] += x
            columns.append(column)
        return columns

    def vector_of(self, syzygy: SyzygyVector, mono) -> List:
        """Coordinates of mono * syzygy in this slice."""
        vector = [ZERO] * len(self.layout)
        for k, h in enumerate(syzygy.coordinates):
            for m, x in h.terms.items():
                vector[self.position[(k, monomial_product(m, mono))]] = x
        return vector

    def as_syzygy(self, vector: Vector) -> SyzygyVector:
        coefficients: List[Dict] = [{} for _ in self.phi.source]
        for (k, mono), x in zip(self.layout, vector):
            if x:
                coefficients[k][mono] = x
        coordinates = tuple(
            BiPoly(self.delta - shift, coefficients[k]) for k, shift in enumerate(self.phi.source)
        )
        return SyzygyVector(self.delta, coordinates)


def kernel_in_bidegree(phi: GradedMap, delta: BiDegree) -> List[SyzygyVector]:
    """Basis of the degree-delta part of ker(phi), in kernel_basis order."""
    piece = _Slice(phi, delta)
    if not piece.layout:
        return []
    matrix = QMatrix.from_columns(piece.image_columns(), piece.codimension)
    return [piece.as_syzygy(v) for v in kernel_basis(matrix)]


def syzygies_in_bidegree(gens: Sequence[Tuple[BiPoly, BiDegree]], delta: BiDegree) -> List[SyzygyVector]:
    """
    Basis of the relations sum h_k g_k = 0 with every h_k * g_k of bidegree
    ``delta`` (an absolute bidegree: Example-style relative degrees add the
    generator bidegree).
    """
    for g, shift in gens:
        if not g.is_zero and g.bidegree != shift:
            raise DimensionError(f"generator {g} of bidegree {g.bidegree} given with shift {shift}")
    phi = GradedMap(
        target=(BiDegree(0, 0),),
        source=tuple(shift for _, shift in gens),
        columns=tuple((g,) for g, _ in gens),
    )
    return kernel_in_bidegree(phi, delta)


def minimal_kernel_generators(phi: GradedMap, window: BiDegree) -> List[SyzygyVector]:
    """
    Minimal generators of ker(phi) with bidegree inside the window.

    At each bidegree the kernel dimension comes from a rank count; only when
    the multiples of earlier generators fall short is a kernel basis computed,
    and its vectors are added greedily until the span is complete.
    """
    found: List[SyzygyVector] = []
    for delta in window_bidegrees(window):
        piece = _Slice(phi, delta)
        if not piece.layout:
            continue
        columns = piece.image_columns()
        image = EchelonBasis(piece.codimension)
        for column in columns:
            image.add(column)
            if image.is_full:
                break
        kernel_dim = len(piece.layout) - len(image)
        if kernel_dim == 0:
            continue

        span = EchelonBasis(len(piece.layout))
        for earlier in found:
            if not earlier.bidegree < delta:
                continue
            for mono in monomial_basis(delta - earlier.bidegree):
                span.add(piece.vector_of(earlier, mono))
                if len(span) == kernel_dim:
                    break
            if len(span) == kernel_dim:
                break
        if len(span) == kernel_dim:
            continue

        matrix = QMatrix.from_columns(columns, piece.codimension)
        new = 0
        for vector in kernel_basis(matrix):
            if span.add(vector):
                found.append(piece.as_syzygy(vector))
                new += 1
                if len(span) == kernel_dim:
                    break
        logger.debug(f"{new} minimal generator(s) in bidegree {delta} (kernel dimension {kernel_dim})")
    return found


@dataclass(frozen=True)
class FirstSyzygies:
    generator_shifts: Tuple[BiDegree, ...]
    representatives: Tuple[SyzygyVector, ...]

    @property
    def by_shift(self) -> Dict[BiDegree, int]:
        counts: Dict[BiDegree, int] = {}
        for rep in self.representatives:
            counts[rep.bidegree] = counts.get(rep.bidegree, 0) + 1
        return counts

    @property
    def by_bidegree(self) -> Dict[BiDegree, int]:
        """Counts keyed by syzygy bidegree (shift minus the common generator bidegree)."""
        if len(set(self.generator_shifts)) != 1:
            raise DimensionError("syzygy bidegrees need generators of a single bidegree")
        base = self.generator_shifts[0]
        return {d - base: r for d, r in self.by_shift.items()}

    def count(self, syzygy_bidegree: BiDegree) -> int:
        return self.by_bidegree.get(syzygy_bidegree, 0)


def minimal_first_syzygies(ideal, window: Optional[BiDegree] = None) -> FirstSyzygies:
    generators = tuple(getattr(ideal, "generators", ideal))
    window = window or default_window()
    phi = GradedMap.from_generators(generators)
    representatives = minimal_kernel_generators(phi, window)
    return FirstSyzygies(phi.source, tuple(representatives))


@dataclass(frozen=True)
class Resolution:
    """
    modules[0] are the generator shifts; differentials[0] maps them onto the
    ideal, differentials[h] maps modules[h] to modules[h-1].
    """

    modules: Tuple[Tuple[BiDegree, ...], ...]
    differentials: Tuple[GradedMap, ...]
    window: BiDegree

    @property
    def length(self) -> int:
        return len(self.modules)

    def compositions_vanish(self) -> bool:
        return all(
            outer.compose(inner).is_zero
            for outer, inner in zip(self.differentials, self.differentials[1:])
        )

    def is_minimal(self) -> bool:
        return not any(d.has_unit_entries for d in self.differentials[1:])

    def euler_characteristic(self, delta: BiDegree) -> int:
        """dim R_delta - sum_h (-1)^h sum_shifts dim R_(delta - shift)."""
        total = delta.dimension
        for h, module in enumerate(self.modules):
            sign = -1 if h % 2 == 0 else 1
            total += sign * sum((delta - shift).dimension for shift in module)
        return total


def _check_window(representatives: Sequence[SyzygyVector], window: BiDegree, level: int) -> None:
    for rep in representatives:
        if rep.bidegree.m >= window.m or rep.bidegree.n >= window.n:
            raise WindowExhaustedError(
                f"window exhausted: level {level} generator at {rep.bidegree.as_shift()} "
                f"touches the window boundary {window}"
            )


def minimal_free_resolution(ideal, window: Optional[BiDegree] = None) -> Resolution:
    generators = tuple(getattr(ideal, "generators", ideal))
    window = window or default_window()
    logger.info(f"Resolving ideal with {len(generators)} generators in window {window}")

    phi = GradedMap.from_generators(generators)
    modules = [phi.source]
    differentials = [phi]
    for level in range(1, MAX_LEVELS + 1):
        representatives = minimal_kernel_generators(phi, window)
        if not representatives:
            break
        if level == MAX_LEVELS:
            raise AppException(f"resolution longer than {MAX_LEVELS} modules", sys)
        _check_window(representatives, window, level)
        phi = GradedMap(
            target=phi.source,
            source=tuple(r.bidegree for r in representatives),
            columns=tuple(r.coordinates for r in representatives),
        )
        modules.append(phi.source)
        differentials.append(phi)
        logger.info(f"Level {level}: {len(representatives)} generators")

    resolution = Resolution(tuple(modules), tuple(differentials), window)
    if not resolution.compositions_vanish():
        raise AppException("consecutive differentials do not compose to zero", sys)
    if not resolution.is_minimal():
        raise AppException("computed resolution is not minimal", sys)
    return resolution


def betti_table(resolution: Resolution) -> BettiTable:
    levels = []
    for module in resolution.modules:
        counts: Dict[BiDegree, int] = {}
        for shift in module:
            counts[shift] = counts.get(shift, 0) + 1
        levels.append(counts)
    return BettiTable(levels=levels)


def euler_mismatches(resolution: Resolution, ideal) -> List[BiDegree]:
    """Bidegrees of the window where the alternating sum disagrees with HF(R/I)."""
    from src.surface.ideal import hilbert_function

    return [
        delta for delta in window_bidegrees(resolution.window)
        if resolution.euler_characteristic(delta) != hilbert_function(ideal, delta)
    ]
