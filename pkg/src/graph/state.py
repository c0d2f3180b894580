from typing import Any, Dict, List, Optional, Tuple, TypedDict

from src.models.analysis import (
    BasepointReport,
    BettiTable,
    CrossCheck,
    DualReport,
    HilbertTable,
    ImplicitResult,
    SingularLine,
    TypeReport,
)


class AnalysisState(TypedDict):
    # Input
    generator_texts: List[str]
    window: Tuple[int, int]
    imax: int
    jmax: int
    pairing: str
    oracle: bool

    # Validation
    ideal: Optional[Any]
    valid: bool
    error: Optional[str]
    exit_code: int

    # Analysis stages
    basepoints: Optional[BasepointReport]
    type_report: Optional[TypeReport]
    hilbert: Optional[HilbertTable]
    resolution: Optional[Any]
    betti: Optional[BettiTable]
    implicit: Optional[ImplicitResult]
    singular_lines: List[SingularLine]
    quadric_rank: Optional[int]
    dual: Optional[DualReport]
    cross_check: Optional[CrossCheck]

    # Metadata
    stage_trace: Dict[str, Any]
