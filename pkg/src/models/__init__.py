"""
Models Package

Contains result models and the report schema:
- analysis: pydantic models for basepoints, types, Betti tables, implicit equations and dual-scroll data
- output_schema: AnalysisReport, the JSON layout of the `report` command
"""

from src.models.analysis import (
    Basepoint,
    BasepointReport,
    BettiTable,
    CrossCheck,
    DualPairing,
    DualReport,
    HilbertTable,
    ImplicitResult,
    NumericalType,
    PrimeDescriptor,
    PrimeKind,
    ResidualKind,
    SingularLine,
    TypeReport,
)
from src.models.output_schema import AnalysisReport

__all__ = [
    "Basepoint",
    "BasepointReport",
    "BettiTable",
    "CrossCheck",
    "DualPairing",
    "DualReport",
    "HilbertTable",
    "ImplicitResult",
    "NumericalType",
    "PrimeDescriptor",
    "PrimeKind",
    "ResidualKind",
    "SingularLine",
    "TypeReport",
    "AnalysisReport",
]
