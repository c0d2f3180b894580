"""
Homogeneous polynomials in the implicit-space variables x0..x3.

Implicit equations, the Type 6 quadric and the linear forms cutting out
lines in P^3 all live here, together with pullback along the
parameterization (x_i -> p_i) and small determinants of XPoly matrices.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.bipoly import BiPoly, format_monomial, format_terms, mul
from src.algebra.exactla import ZERO, QMatrix, to_scalar
from src.config.exception import DimensionError

XMonomial = Tuple[int, int, int, int]
X_VARIABLES = ("x0", "x1", "x2", "x3")


@lru_cache(maxsize=None)
def xmonomials(degree: int) -> Tuple[XMonomial, ...]:
    """Monomials of the given degree, descending lexicographic (x0 > x1 > x2 > x3)."""
    result = []
    for combo in combinations_with_replacement(range(4), degree):
        exponents = [0, 0, 0, 0]
        for i in combo:
            exponents[i] += 1
        result.append(tuple(exponents))
    return tuple(sorted(result, reverse=True))


class XPoly:
    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Optional[Dict[XMonomial, object]] = None):
        clean: Dict[XMonomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = to_scalar(c)
            if c == 0:
                continue
            if sum(mono) != degree:
                raise DimensionError(f"monomial {format_monomial(mono, X_VARIABLES)} is not of degree {degree}")
            clean[tuple(mono)] = c
        self.degree = degree
        self._terms = clean

    @classmethod
    def _build(cls, degree: int, terms: Dict[XMonomial, Fraction]) -> "XPoly":
        poly = object.__new__(cls)
        poly.degree = degree
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, degree: int) -> "XPoly":
        return cls._build(degree, {})

    @classmethod
    def constant(cls, c=1) -> "XPoly":
        return cls(0, {(0, 0, 0, 0): c})

    @classmethod
    def variable(cls, i: int) -> "XPoly":
        exponents = [0, 0, 0, 0]
        exponents[i] = 1
        return cls(1, {tuple(exponents): 1})

    @classmethod
    def linear_form(cls, coefficients: Sequence) -> "XPoly":
        if len(coefficients) != 4:
            raise DimensionError("a linear form needs four coefficients")
        return cls(1, {tuple(1 if j == i else 0 for j in range(4)): c for i, c in enumerate(coefficients)})

    @classmethod
    def from_vector(cls, degree: int, vector: Sequence) -> "XPoly":
        return cls(degree, dict(zip(xmonomials(degree), vector)))

    @property
    def terms(self) -> Dict[XMonomial, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: XMonomial) -> Fraction:
        return self._terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> List[Tuple[XMonomial, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return ZERO
        return self._terms[max(self._terms)]

    def normalized(self) -> "XPoly":
        """Scale so the first coefficient in descending lex order is +1."""
        lead = self.leading_coefficient()
        if lead == 0 or lead == 1:
            return self
        return self.scale(1 / lead)

    def is_proportional(self, other: "XPoly") -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.degree == other.degree and self.normalized() == other.normalized()

    def scale(self, c) -> "XPoly":
        c = to_scalar(c)
        if c == 0:
            return XPoly.zero(self.degree)
        return XPoly._build(self.degree, {m: x * c for m, x in self._terms.items()})

    def __add__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        if other.degree != self.degree and not (self.is_zero or other.is_zero):
            raise DimensionError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        degree = self.degree if not self.is_zero else other.degree
        terms = dict(self._terms)
        for m, x in other._terms.items():
            y = terms.get(m, ZERO) + x
            if y:
                terms[m] = y
            else:
                terms.pop(m, None)
        return XPoly._build(degree, terms)

    def __neg__(self) -> "XPoly":
        return XPoly._build(self.degree, {m: -x for m, x in self._terms.items()})

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            terms: Dict[XMonomial, Fraction] = {}
            for m1, x in self._terms.items():
                for m2, y in other._terms.items():
                    key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                    terms[key] = terms.get(key, ZERO) + x * y
            return XPoly._build(self.degree + other.degree, {m: c for m, c in terms.items() if c})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "XPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def partial(self, i: int) -> "XPoly":
        terms: Dict[XMonomial, Fraction] = {}
        for mono, x in self._terms.items():
            if mono[i]:
                lowered = list(mono)
                lowered[i] -= 1
                terms[tuple(lowered)] = x * mono[i]
        return XPoly._build(max(self.degree - 1, 0), terms)

    def partials(self) -> Tuple["XPoly", "XPoly", "XPoly", "XPoly"]:
        return tuple(self.partial(i) for i in range(4))

    def evaluate(self, point: Sequence) -> Fraction:
        total = ZERO
        for mono, x in self._terms.items():
            term = x
            for value, e in zip(point, mono):
                if e:
                    term *= to_scalar(value) ** e
            total += term
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_terms([(format_monomial(m, X_VARIABLES), c) for m, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"XPoly({self})"


class XPolyMatrix:
    """Rectangular grid of XPolys, row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: Sequence[Sequence[XPoly]]):
        cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise DimensionError("XPoly matrix rows of unequal length")
        self.rows = len(rows)
        self.cols = cols
        self._entries = tuple(tuple(row) for row in rows)

    def __getitem__(self, index: Tuple[int, int]) -> XPoly:
        i, j = index
        return self._entries[i][j]

    def to_rows(self) -> List[Tuple[XPoly, ...]]:
        return list(self._entries)

    def minor(self, skip_row: int, skip_col: int) -> "XPolyMatrix":
        return XPolyMatrix([
            [x for j, x in enumerate(row) if j != skip_col]
            for i, row in enumerate(self._entries) if i != skip_row
        ])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._entries)


def xdet(m: XPolyMatrix) -> XPoly:
    """Determinant by cofactor expansion along the first row."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} XPoly matrix")
    if m.rows > 4:
        raise DimensionError("cofactor expansion is limited to matrices of size at most 4")
    if m.rows == 0:
        return XPoly.constant(1)
    if m.rows == 1:
        return m[0, 0]
    total: Optional[XPoly] = None
    for j in range(m.cols):
        entry = m[0, j]
        if entry.is_zero:
            continue
        term = entry * xdet(m.minor(0, j))
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return XPoly.zero(sum(m[i, i].degree for i in range(m.rows)))
    return total


def substitute(F: XPoly, forms: Sequence[BiPoly]) -> BiPoly:
    """F(forms[0], ..., forms[3]) for four forms sharing one bidegree."""
    if len(forms) != 4:
        raise DimensionError("substitution needs four forms")
    bidegree = forms[0].bidegree
    if any(f.bidegree != bidegree for f in forms):
        raise DimensionError("substituted forms must share a bidegree")
    powers: Dict[Tuple[int, int], BiPoly] = {}

    def power(i: int, e: int) -> BiPoly:
        if (i, e) not in powers:
            powers[(i, e)] = BiPoly.one() if e == 0 else mul(power(i, e - 1), forms[i])
        return powers[(i, e)]

    result = BiPoly.zero(bidegree * F.degree)
    for mono, x in F.sorted_terms():
        term = reduce(mul, (power(i, e) for i, e in enumerate(mono) if e), BiPoly.one())
        result = result + term.scale(x)
    return result


def pullback(F: XPoly, ideal) -> BiPoly:
    """F(p0, p1, p2, p3) for a SurfaceIdeal (or any sequence of four forms)."""
    generators = getattr(ideal, "generators", ideal)
    return substitute(F, generators)


def quadric_matrix(Q: XPoly) -> QMatrix:
    """Symmetric matrix M with Q(x) = x^T M x."""
    if Q.degree != 2:
        raise DimensionError(f"{Q} is not a quadric")
    entries = [[ZERO] * 4 for _ in range(4)]
    for mono, c in Q.terms.items():
        support = [i for i in range(4) for _ in range(mono[i])]
        i, j = support
        if i == j:
            entries[i][i] += c
        else:
            entries[i][j] += c / 2
            entries[j][i] += c / 2
    return QMatrix.from_rows(entries)
