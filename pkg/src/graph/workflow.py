import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from langgraph.graph import END, StateGraph

from src.algebra.bipoly import DUAL_VARIABLES, BiDegree
from src.cli.parser import parse_generators
from src.config.exception import AppException
from src.config.logger import setup_logger
from src.config.settings import get_settings
from src.graph.state import AnalysisState
from src.models.analysis import DualPairing, NumericalType, format_point
from src.surface.classify import classify, singular_line_candidates
from src.surface.dualscroll import cross_check, dual_report, format_dual_form
from src.surface.ideal import hilbert_table, is_basepoint_free, validate
from src.surface.implicitize import implicit_equation, quadric_rank
from src.surface.resolution import betti_table, euler_mismatches, minimal_free_resolution

# Initialize logger
logger = setup_logger("SurfaceAnalysisWorkflow", "workflow.log")


class SurfaceAnalysisWorkflow:
    """LangGraph pipeline running every analysis of one ideal"""

    def __init__(self):
        try:
            logger.info("Initializing SurfaceAnalysisWorkflow")
            self.workflow = self._build_graph()
            logger.info("SurfaceAnalysisWorkflow initialized successfully")
        except Exception as e:
            logger.error(f"Failed to initialize SurfaceAnalysisWorkflow: {e}")
            raise AppException(e, sys)

    def _build_graph(self) -> StateGraph:
        """Build the LangGraph workflow"""
        logger.debug("Building LangGraph workflow")

        graph = StateGraph(AnalysisState)

        graph.add_node("validate", self._timed("validate", self._run_validate))
        graph.add_node("basepoints", self._timed("basepoints", self._run_basepoints))
        graph.add_node("classify", self._timed("classify", self._run_classify))
        graph.add_node("hilbert", self._timed("hilbert", self._run_hilbert))
        graph.add_node("resolution", self._timed("resolution", self._run_resolution))
        graph.add_node("implicit", self._timed("implicit", self._run_implicit))
        graph.add_node("singular", self._timed("singular", self._run_singular))
        graph.add_node("dual", self._timed("dual", self._run_dual))

        graph.set_entry_point("validate")

        graph.add_conditional_edges(
            "validate",
            self._route_after_validation,
            {"basepoints": "basepoints", "end": END},
        )
        graph.add_conditional_edges(
            "basepoints",
            self._route_after_basepoints,
            {"classify": "classify", "hilbert": "hilbert"},
        )
        graph.add_edge("classify", "hilbert")
        graph.add_conditional_edges(
            "hilbert",
            self._route_after_hilbert,
            {"resolution": "resolution", "end": END},
        )
        graph.add_edge("resolution", "implicit")
        graph.add_edge("implicit", "singular")
        graph.add_edge("singular", "dual")
        graph.add_edge("dual", END)

        logger.debug("LangGraph workflow built successfully")
        return graph.compile()

    def _timed(self, name: str, stage: Callable[[AnalysisState], AnalysisState]) -> Callable:
        """Wrap a stage so its duration and status land in the stage trace"""

        def node(state: AnalysisState) -> AnalysisState:
            logger.info(f"Running stage: {name}")
            start = time.time()
            try:
                state = stage(state)
            except Exception as e:
                logger.error(f"Stage {name} failed: {e}")
                raise AppException(e, sys)
            duration = time.time() - start

            state["stage_trace"][name] = {
                "duration_ms": duration * 1000,
                "status": "success" if state["valid"] else "rejected",
            }
            logger.info(f"Stage {name} completed in {duration * 1000:.2f}ms")
            return state

        return node

    def _run_validate(self, state: AnalysisState) -> AnalysisState:
        try:
            state["ideal"] = validate(parse_generators(state["generator_texts"]))
            state["valid"] = True
        except AppException as e:
            logger.warning(f"Input rejected: {e.reason}")
            state["valid"] = False
            state["error"] = e.reason
            state["exit_code"] = e.exit_code
        return state

    def _run_basepoints(self, state: AnalysisState) -> AnalysisState:
        state["basepoints"] = is_basepoint_free(state["ideal"])
        return state

    def _run_classify(self, state: AnalysisState) -> AnalysisState:
        state["type_report"] = classify(state["ideal"])
        return state

    def _run_hilbert(self, state: AnalysisState) -> AnalysisState:
        state["hilbert"] = hilbert_table(state["ideal"], state["imax"], state["jmax"])
        return state

    def _run_resolution(self, state: AnalysisState) -> AnalysisState:
        a, b = state["window"]
        resolution = minimal_free_resolution(state["ideal"], BiDegree(a, b))
        mismatches = euler_mismatches(resolution, state["ideal"])
        if mismatches:
            raise AppException(
                f"Euler characteristic disagrees with the Hilbert function at {', '.join(map(str, mismatches))}",
                sys,
            )
        state["resolution"] = resolution
        state["betti"] = betti_table(resolution)
        return state

    def _run_implicit(self, state: AnalysisState) -> AnalysisState:
        implicit = implicit_equation(state["ideal"], state["type_report"], oracle=state["oracle"])
        state["implicit"] = implicit
        if state["type_report"].numerical_type is NumericalType.TYPE_6:
            state["quadric_rank"] = quadric_rank(implicit.reduced)
        return state

    def _run_singular(self, state: AnalysisState) -> AnalysisState:
        state["singular_lines"] = singular_line_candidates(
            state["ideal"], state["type_report"], state["implicit"].reduced
        )
        return state

    def _run_dual(self, state: AnalysisState) -> AnalysisState:
        dual = dual_report(state["ideal"], DualPairing(state["pairing"]))
        state["dual"] = dual
        state["cross_check"] = cross_check(dual, state["type_report"], basepoint_free=True)
        if not state["cross_check"].consistent:
            logger.warning(f"Dual-scroll cross-check inconsistent: {state['cross_check'].detail}")
        return state

    def _route_after_validation(self, state: AnalysisState) -> str:
        if not state["valid"]:
            logger.warning(f"Invalid input ({state['error']}), stopping")
            return "end"
        return "basepoints"

    def _route_after_basepoints(self, state: AnalysisState) -> str:
        if not state["basepoints"].free:
            logger.warning("Ideal has basepoints, only the Hilbert function is computed")
            return "hilbert"
        return "classify"

    def _route_after_hilbert(self, state: AnalysisState) -> str:
        return "resolution" if state["basepoints"].free else "end"

    def run(
        self,
        generator_texts: Sequence[str],
        window: Optional[Tuple[int, int]] = None,
        imax: int = 5,
        jmax: int = 4,
        pairing: Optional[str] = None,
        oracle: bool = False,
    ) -> Dict:
        """Run the complete workflow"""

        logger.info("=" * 60)
        logger.info(f"Analysing: {list(generator_texts)}")
        logger.info("=" * 60)

        settings = get_settings()
        start_time = time.time()

        try:
            initial_state = AnalysisState(
                generator_texts=list(generator_texts),
                window=tuple(window or settings.window),
                imax=imax,
                jmax=jmax,
                pairing=pairing or settings.pairing,
                oracle=oracle,
                ideal=None,
                valid=False,
                error=None,
                exit_code=0,
                basepoints=None,
                type_report=None,
                hilbert=None,
                resolution=None,
                betti=None,
                implicit=None,
                singular_lines=[],
                quadric_rank=None,
                dual=None,
                cross_check=None,
                stage_trace={},
            )

            logger.info("Starting workflow execution")
            final_state = self.workflow.invoke(initial_state)

            logger.info("=" * 60)
            logger.info(f"Analysis complete ({time.time() - start_time:.2f}s), trace: {final_state['stage_trace']}")
            logger.info("=" * 60)

            return self._format_output(final_state)

        except Exception as e:
            logger.error(f"Workflow execution failed: {e}")
            raise AppException(e, sys)

    def _format_output(self, state: AnalysisState) -> Dict:
        """Format final output; timings stay in the log so the report is reproducible"""

        try:
            basepoints = state["basepoints"]
            report = state["type_report"]
            implicit = state["implicit"]
            dual = state["dual"]
            check = state["cross_check"]

            output = {
                "valid": state["valid"],
                "error": state["error"],
                "exit_code": state["exit_code"],
                "generators": [str(g) for g in state["ideal"]] if state["ideal"] is not None else [],
                "basepoint_free": basepoints.free if basepoints else None,
                "witness": basepoints.witness_text() if basepoints else None,
                "basepoints": [str(b) for b in basepoints.basepoints] if basepoints else [],
                "type": report.numerical_type.value if report else None,
                "n01": report.n01 if report else None,
                "n10": report.n10 if report else None,
                "has02": report.has02 if report else None,
                "p": str(report.p) if report and report.p is not None else None,
                "q": str(report.q) if report and report.q is not None else None,
                "embedded_primes": [prime.describe() for prime in report.embedded_primes] if report else [],
                "hilbert": state["hilbert"].values if state["hilbert"] else None,
                "betti": state["betti"].to_json_dict() if state["betti"] else None,
                "implicit": {
                    "det": str(implicit.det),
                    "reduced": str(implicit.reduced),
                    "multiplicity": implicit.multiplicity,
                    "birational": implicit.birational,
                    "oracle_checked": implicit.oracle_checked,
                } if implicit else None,
                "quadric_rank": state["quadric_rank"],
                "singular_lines": [[str(f) for f in line.forms] for line in state["singular_lines"]],
                "dual": self._format_dual(dual, check) if dual else None,
            }

            logger.debug("Output formatted successfully")
            return output

        except Exception as e:
            logger.error(f"Failed to format output: {e}")
            raise AppException(e, sys)

    @staticmethod
    def _format_dual(dual, check) -> Dict:
        residual: Optional[List[str]] = None
        if dual.residuals is not None:
            residual = [h.to_string(DUAL_VARIABLES) for h in dual.residuals]
        return {
            "pairing": dual.pairing.value,
            "uperp": [format_dual_form(L) for L in dual.uperp],
            "pullbacks": [f.to_string(DUAL_VARIABLES) for f in dual.pullbacks],
            "g": dual.g.to_string(DUAL_VARIABLES) if dual.g is not None else None,
            "g_degree": str(dual.g_degree) if dual.g_degree is not None else None,
            "residual": residual,
            "residual_kind": dual.residual_kind.value,
            "residual_roots": [f"{format_point(st)}x{format_point(uv)}" for st, uv in dual.residual_roots],
            "predicted_type": dual.predicted_label(),
            "consistent": check.consistent if check else None,
            "detail": check.detail if check else None,
        }
