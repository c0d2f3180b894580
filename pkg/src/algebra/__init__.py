"""
Algebra Package

Exact arithmetic substrate:
- exactla: rational matrices, rref, kernels, Bareiss determinants, incremental echelon bases
- bipoly: bidegrees, monomial bases and bihomogeneous forms in s,t;u,v
- xpoly: polynomials in x0..x3, XPoly determinants, pullback along the generators
"""

from src.algebra.exactla import EchelonBasis, QMatrix, det, kernel_basis, rank, rref, solve
from src.algebra.bipoly import (
    BiDegree,
    BiPoly,
    QuadraticFactorization,
    QuadraticKind,
    binary_form_gcd,
    divide_exact,
    factor_binary_quadratic,
    monomial_basis,
    mul,
    multiplication_matrix,
)
from src.algebra.xpoly import XPoly, XPolyMatrix, pullback, xdet

__all__ = [
    "EchelonBasis",
    "QMatrix",
    "det",
    "kernel_basis",
    "rank",
    "rref",
    "solve",
    "BiDegree",
    "BiPoly",
    "QuadraticFactorization",
    "QuadraticKind",
    "binary_form_gcd",
    "divide_exact",
    "factor_binary_quadratic",
    "monomial_basis",
    "mul",
    "multiplication_matrix",
    "XPoly",
    "XPolyMatrix",
    "pullback",
    "xdet",
]
