"""
Surface Package

Contains the analyses of an ideal of four (2,1)-forms:
- ideal: validation, basepoints, Hilbert functions, coordinate changes
- resolution: syzygies per bidegree, minimal bigraded free resolutions, Betti tables
- classify: numerical type, q(u,v), embedded primes, singular coordinate lines
- implicitize: the (1,1) strand determinant and the evaluation-kernel oracle
- dualscroll: U-perp pullbacks, their common factor and the cross-check
"""

from src.surface.ideal import SurfaceIdeal, hilbert_function, hilbert_table, is_basepoint_free, validate
from src.surface.resolution import (
    betti_table,
    minimal_first_syzygies,
    minimal_free_resolution,
    syzygies_in_bidegree,
)
from src.surface.classify import (
    classify,
    embedded_primes,
    q_invariant,
    singular_line_candidates,
    verify_singular_component,
)
from src.surface.implicitize import assemble_d1, implicit_equation, kernel_oracle, z1_basis_11
from src.surface.dualscroll import common_factor, cross_check, dual_report, pullback_dual, u_perp

__all__ = [
    "SurfaceIdeal",
    "hilbert_function",
    "hilbert_table",
    "is_basepoint_free",
    "validate",
    "betti_table",
    "minimal_first_syzygies",
    "minimal_free_resolution",
    "syzygies_in_bidegree",
    "classify",
    "embedded_primes",
    "q_invariant",
    "singular_line_candidates",
    "verify_singular_component",
    "assemble_d1",
    "implicit_equation",
    "kernel_oracle",
    "z1_basis_11",
    "common_factor",
    "cross_check",
    "dual_report",
    "pullback_dual",
    "u_perp",
]
