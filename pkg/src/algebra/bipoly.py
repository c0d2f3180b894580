"""
Bihomogeneous forms in the bigraded ring R = Q[s,t;u,v].

deg s = deg t = (1,0) and deg u = deg v = (0,1). Monomials are exponent
4-tuples (a_s, a_t, a_u, a_v); the canonical order on a bidegree slice is
descending lexicographic with s > t > u > v, so R_{1,1} = [su, sv, tu, tv].
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from math import isqrt
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra.exactla import ONE, ZERO, QMatrix, Vector, integer_row, solve, to_scalar
from src.config.exception import DimensionError, NotDivisibleError

Monomial = Tuple[int, int, int, int]
VARIABLES = ("s", "t", "u", "v")
DUAL_VARIABLES = ("S", "T", "U", "V")


@dataclass(frozen=True)
class BiDegree:
    m: int
    n: int

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.m - other.m, self.n - other.n)

    def __mul__(self, k: int) -> "BiDegree":
        return BiDegree(self.m * k, self.n * k)

    def __le__(self, other: "BiDegree") -> bool:
        return self.m <= other.m and self.n <= other.n

    def __ge__(self, other: "BiDegree") -> bool:
        return other <= self

    def __lt__(self, other: "BiDegree") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "BiDegree") -> bool:
        return other < self

    @property
    def is_effective(self) -> bool:
        return self.m >= 0 and self.n >= 0

    @property
    def dimension(self) -> int:
        """dim R_{m,n}; zero outside the effective cone."""
        return (self.m + 1) * (self.n + 1) if self.is_effective else 0

    def as_shift(self) -> str:
        return f"({-self.m},{-self.n})"

    def __str__(self) -> str:
        return f"({self.m},{self.n})"


@lru_cache(maxsize=None)
def monomial_basis(d: BiDegree) -> Tuple[Monomial, ...]:
    if not d.is_effective:
        return ()
    return tuple(
        (a, d.m - a, c, d.n - c) for a in range(d.m, -1, -1) for c in range(d.n, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(d: BiDegree) -> Dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomial_basis(d))}


def monomial_degree(mono: Monomial) -> BiDegree:
    return BiDegree(mono[0] + mono[1], mono[2] + mono[3])


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def format_monomial(mono: Monomial, names: Sequence[str] = VARIABLES) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Sequence[Tuple[str, Fraction]]) -> str:
    """Join (monomial string, coefficient) pairs as 'a*m1 - b*m2 + ...'."""
    if not terms:
        return "0"
    pieces = []
    for k, (mono, c) in enumerate(terms):
        magnitude = abs(c)
        if mono == "1":
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_scalar(magnitude)}*{mono}"
        if k == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


class BiPoly:
    """A bihomogeneous form; zero forms keep their (possibly negative) bidegree."""

    __slots__ = ("bidegree", "_terms")

    def __init__(self, bidegree: BiDegree, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = to_scalar(c)
            if c == 0:
                continue
            if monomial_degree(mono) != bidegree:
                raise DimensionError(
                    f"monomial {format_monomial(mono)} does not have bidegree {bidegree}"
                )
            clean[tuple(mono)] = c
        self.bidegree = bidegree
        self._terms = clean

    @classmethod
    def _build(cls, bidegree: BiDegree, terms: Dict[Monomial, Fraction]) -> "BiPoly":
        poly = object.__new__(cls)
        poly.bidegree = bidegree
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, bidegree: BiDegree) -> "BiPoly":
        return cls._build(bidegree, {})

    @classmethod
    def constant(cls, c=1) -> "BiPoly":
        return cls(BiDegree(0, 0), {(0, 0, 0, 0): c})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls.constant(1)

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> "BiPoly":
        return cls(monomial_degree(mono), {mono: c})

    @classmethod
    def variable(cls, name: str) -> "BiPoly":
        exponents = [0, 0, 0, 0]
        exponents[VARIABLES.index(name)] = 1
        return cls.monomial(tuple(exponents))

    @classmethod
    def from_vector(cls, bidegree: BiDegree, vector: Sequence) -> "BiPoly":
        basis = monomial_basis(bidegree)
        if len(vector) != len(basis):
            raise DimensionError(f"{len(vector)} coefficients for R_{bidegree} of dimension {len(basis)}")
        return cls._build(bidegree, {m: to_scalar(c) for m, c in zip(basis, vector) if c})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), ZERO)

    def coefficient_vector(self) -> Vector:
        return tuple(self._terms.get(m, ZERO) for m in monomial_basis(self.bidegree))

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the first monomial (canonical order) present."""
        if not self._terms:
            return ZERO
        return self._terms[max(self._terms)]

    def normalized(self) -> "BiPoly":
        lead = self.leading_coefficient()
        if lead == 0 or lead == 1:
            return self
        return self.scale(1 / lead)

    def scale(self, c) -> "BiPoly":
        c = to_scalar(c)
        if c == 0:
            return BiPoly.zero(self.bidegree)
        return BiPoly._build(self.bidegree, {m: x * c for m, x in self._terms.items()})

    def times_monomial(self, mono: Monomial) -> "BiPoly":
        return BiPoly._build(
            self.bidegree + monomial_degree(mono),
            {monomial_product(m, mono): x for m, x in self._terms.items()},
        )

    def _check_same(self, other: "BiPoly") -> None:
        if other.bidegree != self.bidegree:
            raise DimensionError(f"cannot add forms of bidegrees {self.bidegree} and {other.bidegree}")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        self._check_same(other)
        terms = dict(self._terms)
        for m, x in other._terms.items():
            y = terms.get(m, ZERO) + x
            if y:
                terms[m] = y
            else:
                terms.pop(m, None)
        return BiPoly._build(self.bidegree, terms)

    def __neg__(self) -> "BiPoly":
        return BiPoly._build(self.bidegree, {m: -x for m, x in self._terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "BiPoly":
        result = BiPoly.one()
        for _ in range(k):
            result = mul(result, self)
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        total = ZERO
        for (a, b, c, d), x in self._terms.items():
            total += x * point[0] ** a * point[1] ** b * point[2] ** c * point[3] ** d
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.bidegree == other.bidegree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.bidegree, frozenset(self._terms.items())))

    def to_string(self, names: Sequence[str] = VARIABLES) -> str:
        return format_terms([(format_monomial(m, names), c) for m, c in self.sorted_terms()])

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"BiPoly({self.to_string()})"


def mul(f: BiPoly, g: BiPoly) -> BiPoly:
    terms: Dict[Monomial, Fraction] = {}
    for m1, x in f._terms.items():
        for m2, y in g._terms.items():
            key = monomial_product(m1, m2)
            terms[key] = terms.get(key, ZERO) + x * y
    return BiPoly._build(f.bidegree + g.bidegree, {m: c for m, c in terms.items() if c})


def multiplication_matrix(f: BiPoly, source: BiDegree) -> QMatrix:
    """Matrix of g -> f*g from R_source to R_{source + deg f} in canonical bases."""
    target = source + f.bidegree
    index = monomial_index(target)
    columns = []
    for mono in monomial_basis(source):
        column = [ZERO] * len(index)
        for m, x in f._terms.items():
            column[index[monomial_product(m, mono)]] = x
        columns.append(column)
    return QMatrix.from_columns(columns, target.dimension)


def divide_exact(f: BiPoly, g: BiPoly) -> BiPoly:
    if g.is_zero:
        raise DimensionError("division by the zero form")
    quotient = f.bidegree - g.bidegree
    if not quotient.is_effective:
        raise NotDivisibleError(f"not divisible: {f} by {g} (bidegree {g.bidegree} exceeds {f.bidegree})")
    if f.is_zero:
        return BiPoly.zero(quotient)
    x = solve(multiplication_matrix(g, quotient), f.coefficient_vector())
    if x is None:
        raise NotDivisibleError(f"not divisible: {f} by {g}")
    return BiPoly.from_vector(quotient, x)


def substitute(f: BiPoly, images: Sequence[BiPoly]) -> BiPoly:
    """Replace s, t, u, v by the four given forms (images of s,t and of u,v share a bidegree)."""
    if len(images) != 4:
        raise DimensionError("substitution needs one image per variable")
    if images[0].bidegree != images[1].bidegree or images[2].bidegree != images[3].bidegree:
        raise DimensionError("images of s,t (and of u,v) must share a bidegree")
    result_degree = images[0].bidegree * f.bidegree.m + images[2].bidegree * f.bidegree.n
    powers: Dict[Tuple[int, int], BiPoly] = {}

    def power(i: int, e: int) -> BiPoly:
        if (i, e) not in powers:
            powers[(i, e)] = BiPoly.one() if e == 0 else mul(power(i, e - 1), images[i])
        return powers[(i, e)]

    result = BiPoly.zero(result_degree)
    for mono, x in f.sorted_terms():
        term = reduce(mul, (power(i, e) for i, e in enumerate(mono)), BiPoly.one())
        result = result + term.scale(x)
    return result


# ---------------------------------------------------------------------------
# Binary forms: forms in s,t only (bidegree (m,0)) or u,v only ((0,n))
# ---------------------------------------------------------------------------

def binary_side(f: BiPoly) -> str:
    d = f.bidegree
    if d.n == 0 and d.m >= 0:
        return "st"
    if d.m == 0 and d.n > 0:
        return "uv"
    raise DimensionError(f"{f} of bidegree {d} is not a binary form")


def _binary_coefficients(f: BiPoly) -> List[Fraction]:
    """Coefficients c_k of x^k y^(d-k) (x = s or u, y = t or v), k = 0..d."""
    side = binary_side(f)
    d = f.bidegree.m if side == "st" else f.bidegree.n
    if side == "st":
        return [f.coefficient((k, d - k, 0, 0)) for k in range(d + 1)]
    return [f.coefficient((0, 0, k, d - k)) for k in range(d + 1)]


def _from_binary(side: str, coefficients: Sequence) -> BiPoly:
    d = len(coefficients) - 1
    if side == "st":
        return BiPoly(BiDegree(d, 0), {(k, d - k, 0, 0): c for k, c in enumerate(coefficients)})
    return BiPoly(BiDegree(0, d), {(0, 0, k, d - k): c for k, c in enumerate(coefficients)})


def _strip(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= factor * y
        _strip(a)
    return a


def _poly_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return [x / a[-1] for x in a] if a else a


def _low_order(c: List[Fraction]) -> int:
    """Multiplicity of the factor x (lowest nonzero power of x)."""
    return next(k for k, x in enumerate(c) if x)


def binary_form_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """
    Monic gcd of two binary forms on the same side.

    Each form is split as x^k * y^j * core(x, y); the cores are dehomogenized
    at y = 1 and run through Euclid, and the x and y powers are recombined
    with their minimal exponents.
    """
    if f.is_zero and g.is_zero:
        raise DimensionError("gcd of two zero forms")
    if f.is_zero or g.is_zero:
        return (g if f.is_zero else f).normalized()
    if f.bidegree == BiDegree(0, 0) or g.bidegree == BiDegree(0, 0):
        return BiPoly.one()
    side = binary_side(f)
    if binary_side(g) != side:
        raise DimensionError(f"gcd of forms on different sides: {f} and {g}")
    cf, cg = _binary_coefficients(f), _binary_coefficients(g)
    kf, kg = _low_order(cf), _low_order(cg)
    core_f, core_g = _strip(cf[kf:]), _strip(cg[kg:])
    jf = len(cf) - kf - len(core_f)
    jg = len(cg) - kg - len(core_g)
    common = _poly_gcd(core_f, core_g)
    coefficients = [ZERO] * min(kf, kg) + common + [ZERO] * min(jf, jg)
    return _from_binary(side, coefficients).normalized()


def rational_roots(f: BiPoly) -> List[Tuple[Fraction, Fraction]]:
    """
    Distinct rational roots (x:y) of a nonzero binary form, each normalized
    so its first nonzero coordinate is 1.
    """
    c = _binary_coefficients(f)
    if not any(c):
        raise DimensionError("roots of the zero form")
    roots = set()
    if c[-1] == 0:
        roots.add((ONE, ZERO))
    k = _low_order(c)
    if k > 0:
        roots.add((ZERO, ONE))
    for r in _rational_zeros(integer_row(_strip(c[k:]))):
        roots.add((ONE, 1 / r))
    return sorted(roots, reverse=True)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _rational_zeros(c: List[int]) -> List[Fraction]:
    """Rational zeros of sum c_k x^k with c_0 != 0, by the rational root test."""
    if len(c) <= 1:
        return []
    zeros = set()
    for p in _divisors(c[0]):
        for q in _divisors(c[-1]):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if sum(a * candidate ** k for k, a in enumerate(c)) == 0:
                    zeros.add(candidate)
    return sorted(zeros)


class QuadraticKind(str, Enum):
    SPLIT_RATIONAL = "split-rational"
    DOUBLE_ROOT = "double-root"
    IRRATIONAL_PAIR = "irrational-conjugate-pair"


@dataclass(frozen=True)
class QuadraticFactorization:
    """Factorization of a x^2 + b xy + c y^2; ``factors`` is empty for an irrational pair."""

    kind: QuadraticKind
    discriminant: Fraction
    coefficients: Tuple[Fraction, Fraction, Fraction]
    factors: Tuple[BiPoly, ...] = ()


def _square_root(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def factor_binary_quadratic(q: BiPoly) -> QuadraticFactorization:
    """
    Factor a x^2 + b xy + c y^2 (x, y = u, v or s, t) over the rationals.

    Linear factors are normalized with leading coefficient 1 and listed in
    canonical order; an irreducible pair is carried by D = b^2 - 4ac alone.
    """
    if q.is_zero:
        raise DimensionError("cannot factor the zero quadratic")
    side = binary_side(q)
    if (q.bidegree.m if side == "st" else q.bidegree.n) != 2:
        raise DimensionError(f"{q} is not a binary quadratic")
    c, b, a = _binary_coefficients(q)
    discriminant = b * b - 4 * a * c
    coefficients = (a, b, c)
    y = _from_binary(side, [ONE, ZERO])

    if a == 0:
        # q = y (b x + c y)
        if b == 0:
            return QuadraticFactorization(QuadraticKind.DOUBLE_ROOT, discriminant, coefficients, (y,))
        factors = [y, _from_binary(side, [c, b]).normalized()]
    elif discriminant == 0:
        factor = _from_binary(side, [b / (2 * a), ONE])
        return QuadraticFactorization(QuadraticKind.DOUBLE_ROOT, discriminant, coefficients, (factor,))
    else:
        root = _square_root(discriminant)
        if root is None:
            return QuadraticFactorization(QuadraticKind.IRRATIONAL_PAIR, discriminant, coefficients)
        # x - lam y for lam = (-b +- root) / 2a
        factors = [_from_binary(side, [(b - sign * root) / (2 * a), ONE]) for sign in (1, -1)]
    factors.sort(key=lambda f: f.sorted_terms(), reverse=True)
    return QuadraticFactorization(QuadraticKind.SPLIT_RATIONAL, discriminant, coefficients, tuple(factors))
