"""
Graph Package

Contains LangGraph workflow components:
- state: AnalysisState, the TypedDict carried through the pipeline
- workflow: SurfaceAnalysisWorkflow running validation, classification, resolution,
  implicitization, singular lines and the dual-scroll cross-check
"""

from src.graph.state import AnalysisState
from src.graph.workflow import SurfaceAnalysisWorkflow

__all__ = [
    "AnalysisState",
    "SurfaceAnalysisWorkflow",
]
