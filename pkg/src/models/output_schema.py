import json
from pydantic import BaseModel, ConfigDict
from typing import List, Dict, Any, Optional


class AnalysisReport(BaseModel):
    """Full report of one ideal; every key is always present so consumers can rely on the layout."""

    valid: bool
    error: Optional[str] = None
    exit_code: int = 0
    generators: List[str] = []
    basepoint_free: Optional[bool] = None
    witness: Optional[str] = None
    basepoints: List[str] = []
    type: Optional[str] = None
    n01: Optional[int] = None
    n10: Optional[int] = None
    has02: Optional[bool] = None
    p: Optional[str] = None
    q: Optional[str] = None
    embedded_primes: List[str] = []
    hilbert: Optional[List[List[int]]] = None
    betti: Optional[Dict[str, Dict[str, int]]] = None
    implicit: Optional[Dict[str, Any]] = None
    quadric_rank: Optional[int] = None
    singular_lines: List[List[str]] = []
    dual: Optional[Dict[str, Any]] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "valid": True,
                "error": None,
                "exit_code": 0,
                "generators": ["s^2*u", "s^2*v", "t^2*u", "s*t*v + t^2*v"],
                "basepoint_free": True,
                "witness": None,
                "basepoints": [],
                "type": "5a",
                "n01": 1,
                "n10": 0,
                "has02": False,
                "p": "s^2",
                "q": "u*v",
                "embedded_primes": ["<s,t,u>", "<s,t,v>"],
                "hilbert": [[1, 2, 3, 4, 5], [2, 4, 6, 8, 10], [3, 2, 2, 2, 2]],
                "betti": {
                    "0": {"(-2,-1)": 4},
                    "1": {"(-2,-2)": 1, "(-3,-2)": 2, "(-4,-1)": 2},
                    "2": {"(-4,-2)": 2},
                },
                "implicit": {
                    "det": "...",
                    "reduced": "x0^2*x3^2 - x0*x1^2*x2 - 2*x0*x1*x2*x3 + x1^2*x2^2",
                    "multiplicity": 1,
                    "birational": True,
                    "oracle_checked": False,
                },
                "quadric_rank": None,
                "singular_lines": [["x0", "x1"], ["x0", "x2"], ["x1", "x3"]],
                "dual": {
                    "pairing": "evaluation",
                    "uperp": ["X1", "X4 - X5"],
                    "g": "T",
                    "g_degree": "(1,0)",
                    "residual_kind": "distinct-roots",
                    "residual_roots": ["(0:1)x(1:0)", "(1:2)x(0:1)"],
                    "predicted_type": ["5a"],
                    "consistent": True,
                },
            }
        }
    )

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, indent=2)
