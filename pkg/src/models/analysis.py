"""
Result models shared by the analysis modules, the pipeline and the CLI.

Algebraic values (BiPoly, XPoly, ...) are carried as arbitrary types; the
JSON report is assembled separately in output_schema.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.algebra.bipoly import BiDegree, BiPoly, format_scalar
from src.algebra.xpoly import XPoly


class NumericalType(str, Enum):
    TYPE_1 = "1"
    TYPE_2 = "2"
    TYPE_3 = "3"
    TYPE_4 = "4"
    TYPE_5A = "5a"
    TYPE_5B = "5b"
    TYPE_6 = "6"


class PrimeKind(str, Enum):
    MAXIMAL = "maximal-m"
    ST_PLUS_LINEAR = "st-plus-linear"
    EXISTENCE_ONLY = "existence-only"


class ResidualKind(str, Enum):
    DISTINCT = "distinct-roots"
    DOUBLE = "double-root"
    INFINITE = "infinite"
    NOT_APPLICABLE = "not-applicable"


class DualPairing(str, Enum):
    # X_alpha -> (comb(2, a_s) / 2) * dual monomial: 1/2 S^2U, STU, 1/2 T^2U, ...
    EVALUATION = "evaluation"
    # X_alpha -> dual monomial
    COEFFICIENT = "coefficient"


def format_point(point: Tuple[Fraction, Fraction]) -> str:
    return f"({format_scalar(point[0])}:{format_scalar(point[1])})"


class Basepoint(BaseModel):
    """A point of P^1 x P^1; ``uv`` is None when the whole fiber over ``st`` is a basepoint."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    st: Tuple[Fraction, Fraction]
    uv: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def is_line(self) -> bool:
        return self.uv is None

    def __str__(self) -> str:
        return f"{format_point(self.st)}x{'P^1' if self.uv is None else format_point(self.uv)}"


class BasepointReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    free: bool
    witness: Optional[BiPoly] = None
    rank_deficient_everywhere: bool = False
    basepoints: List[Basepoint] = []

    def witness_text(self) -> Optional[str]:
        if self.free:
            return None
        if self.rank_deficient_everywhere:
            return "rank <= 1 everywhere"
        return str(self.witness)


class HilbertTable(BaseModel):
    imax: int
    jmax: int
    values: List[List[int]]

    def value(self, i: int, j: int) -> int:
        return self.values[i][j]

    def format_rows(self) -> List[str]:
        width = max(len(str(x)) for row in self.values for x in row)
        return [" ".join(str(x).rjust(width) for x in row) for row in self.values]


def shift_key(d: BiDegree) -> Tuple[int, int]:
    return (d.m, d.n)


class BettiTable(BaseModel):
    """Ranks per homological level; level 0 holds the generator shifts."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    levels: List[Dict[BiDegree, int]]

    def rank(self, level: int, shift: BiDegree) -> int:
        if level >= len(self.levels):
            return 0
        return self.levels[level].get(shift, 0)

    def total(self, level: int) -> int:
        return sum(self.levels[level].values()) if level < len(self.levels) else 0

    @property
    def length(self) -> int:
        return len(self.levels)

    @property
    def projective_dimension(self) -> int:
        return len(self.levels)

    def shifts(self, level: int) -> List[Tuple[BiDegree, int]]:
        return sorted(self.levels[level].items(), key=lambda item: shift_key(item[0]))

    def as_multisets(self) -> List[Dict[Tuple[int, int], int]]:
        """Levels keyed by (-a, -b) tuples, the way resolutions are usually written."""
        return [{(-d.m, -d.n): r for d, r in level.items()} for level in self.levels]

    def to_json_dict(self) -> Dict[str, Dict[str, int]]:
        return {
            str(h): {d.as_shift(): r for d, r in self.shifts(h)}
            for h in range(len(self.levels))
        }

    def format_row(self) -> str:
        parts = []
        for h in range(len(self.levels)):
            parts.append("+".join(
                d.as_shift() + (f"^{r}" if r > 1 else "") for d, r in self.shifts(h)
            ))
        return " <- ".join(parts)


class PrimeDescriptor(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: PrimeKind
    linear_form: Optional[BiPoly] = None
    discriminant: Optional[Fraction] = None
    # a u^2 + b uv + c v^2 of the irrational pair, and which conjugate
    quadratic: Optional[Tuple[Fraction, Fraction, Fraction]] = None
    conjugate: Optional[str] = None

    def describe(self) -> str:
        if self.kind is PrimeKind.MAXIMAL:
            return "<s,t,u,v>"
        if self.kind is PrimeKind.EXISTENCE_ONLY:
            return "<s,t,l(u,v)>"
        if self.linear_form is not None:
            return f"<s,t,{self.linear_form.to_string().replace(' ', '')}>"
        a, b, _ = self.quadratic
        return (
            f"<s,t,u-(({format_scalar(-b)}{self.conjugate}sqrt({format_scalar(self.discriminant)}))"
            f"/{format_scalar(2 * a)})*v>"
        )


class TypeReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    numerical_type: NumericalType
    n01: int
    n10: int
    has02: bool
    p: Optional[BiPoly] = None
    q: Optional[BiPoly] = None
    q_discriminant: Optional[Fraction] = None
    embedded_primes: List[PrimeDescriptor] = []


class ImplicitResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    det: XPoly
    reduced: XPoly
    multiplicity: int = Field(ge=1, le=2)
    birational: bool
    oracle_checked: bool = False


class SingularLine(BaseModel):
    """Coordinate line V(x_i, x_j) of the adapted basis, written in the input coordinates."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    indices: Tuple[int, int]
    forms: Tuple[XPoly, XPoly]

    def describe(self) -> str:
        return f"V({self.forms[0]}, {self.forms[1]})"


class DualReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    pairing: DualPairing
    uperp: List[Tuple[Fraction, ...]]
    pullbacks: List[BiPoly]
    g: Optional[BiPoly] = None
    g_degree: Optional[BiDegree] = None
    residuals: Optional[Tuple[BiPoly, BiPoly]] = None
    residual_kind: ResidualKind = ResidualKind.NOT_APPLICABLE
    residual_roots: List[Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]] = []
    predicts_basepoints: bool = False
    predicted_types: List[NumericalType] = []

    def predicted_label(self) -> List[str]:
        if self.predicts_basepoints:
            return ["not basepoint free"]
        return [t.value for t in self.predicted_types]


class CrossCheck(BaseModel):
    consistent: bool
    predicted: List[str]
    detail: str
