"""
Exact linear algebra over the rationals.

Every rank, kernel, determinant and linear solve in the package goes through
this module. ``QMatrix`` stores ``fractions.Fraction`` entries; elimination runs
on integer rows (denominators cleared, row contents divided out) and only the
final reduced rows are turned back into fractions.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.config.exception import DimensionError

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def integer_row(row: Sequence) -> List[int]:
    """Scale a row of rationals (or ints) to a primitive integer row."""
    den = lcm(*(x.denominator for x in row)) if row else 1
    return primitive([x.numerator * (den // x.denominator) for x in row])


def primitive(row: List[int]) -> List[int]:
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _leading(row: Sequence[int], start: int = 0) -> Optional[int]:
    for c in range(start, len(row)):
        if row[c]:
            return c
    return None


def _echelon(rows: List[List[int]], ncols: int, reduced: bool) -> List[int]:
    """Fraction-free Gauss(-Jordan) elimination in place; returns pivot columns."""
    pivots: List[int] = []
    nrows = len(rows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(0 if reduced else r + 1, nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                rows[i] = primitive([p * a - f * b for a, b in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
    return pivots


class QMatrix:
    """Immutable rows x cols matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        data = tuple(to_scalar(x) for x in entries)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "QMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise DimensionError("rows of unequal length")
        return cls(len(rows), cols, (x for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "QMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(col) != rows for col in columns):
            raise DimensionError("columns of unequal length")
        return cls(rows, len(columns), (columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for a matrix with {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), vector)), ZERO) for i in range(self.rows))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        columns = [other.column(j) for j in range(other.cols)]
        return QMatrix(
            self.rows,
            other.cols,
            (sum((a * b for a, b in zip(self.row(i), col)), ZERO) for i in range(self.rows) for col in columns),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"


class RowEchelon(NamedTuple):
    matrix: QMatrix
    pivots: List[int]
    rank: int


def rref(m: QMatrix) -> RowEchelon:
    rows = [integer_row(m.row(i)) for i in range(m.rows)]
    pivots = _echelon(rows, m.cols, reduced=True)
    entries: List[Fraction] = []
    for i, c in enumerate(pivots):
        p = rows[i][c]
        entries.extend(Fraction(x, p) for x in rows[i])
    entries.extend([ZERO] * ((m.rows - len(pivots)) * m.cols))
    return RowEchelon(QMatrix(m.rows, m.cols, entries), pivots, len(pivots))


def rank(m: QMatrix) -> int:
    rows = [integer_row(m.row(i)) for i in range(m.rows)]
    return len(_echelon(rows, m.cols, reduced=False))


def kernel_basis(m: QMatrix) -> List[Vector]:
    """
    Basis of the right null space.

    One vector per free column, in increasing column order; the free
    coordinate is 1, the other free coordinates are 0.
    """
    rows = [integer_row(m.row(i)) for i in range(m.rows)]
    pivots = _echelon(rows, m.cols, reduced=True)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, c in enumerate(pivots):
            if rows[i][f]:
                v[c] = Fraction(-rows[i][f], rows[i][c])
        basis.append(tuple(v))
    return basis


def det(m: QMatrix) -> Fraction:
    """Determinant by Bareiss elimination on the denominator-cleared integer matrix."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    scale = 1
    rows: List[List[int]] = []
    for i in range(n):
        row = m.row(i)
        den = lcm(*(x.denominator for x in row))
        scale *= den
        rows.append([x.numerator * (den // x.denominator) for x in row])
    sign = 1
    previous = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if swap is None:
                return ZERO
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // previous
            rows[i][k] = 0
        previous = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def solve(m: QMatrix, b: Sequence) -> Optional[Vector]:
    """One solution x of m x = b (free variables 0), or None if inconsistent."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} rows")
    rows = [integer_row(list(m.row(i)) + [to_scalar(b[i])]) for i in range(m.rows)]
    pivots = _echelon(rows, m.cols + 1, reduced=True)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, c in enumerate(pivots):
        x[c] = Fraction(rows[i][m.cols], rows[i][c])
    return tuple(x)


class EchelonBasis:
    """
    Row-echelon basis of a subspace of Q^n grown one vector at a time.

    Rows are stored as primitive integer rows keyed by their leading column,
    so membership and rank tests never touch fractions.
    """

    __slots__ = ("dimension", "_rows")

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: dict = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.dimension

    def _reduce(self, vector: Sequence) -> Tuple[List[int], Optional[int]]:
        if len(vector) != self.dimension:
            raise DimensionError(f"vector of length {len(vector)} in a space of dimension {self.dimension}")
        row = integer_row(vector)
        c = _leading(row)
        while c is not None and c in self._rows:
            basis_row = self._rows[c]
            p, f = basis_row[c], row[c]
            row = primitive([p * a - f * b for a, b in zip(row, basis_row)])
            c = _leading(row, c + 1)
        return row, c

    def contains(self, vector: Sequence) -> bool:
        return self._reduce(vector)[1] is None

    def add(self, vector: Sequence) -> bool:
        """Insert ``vector``; False when it already lies in the span."""
        row, c = self._reduce(vector)
        if c is None:
            return False
        self._rows[c] = row
        return True


def span_rank(vectors: Iterable[Sequence], dimension: int) -> int:
    basis = EchelonBasis(dimension)
    for vector in vectors:
        basis.add(vector)
        if basis.is_full:
            break
    return len(basis)
