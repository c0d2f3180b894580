"""
CLI Package

Contains the command-line surface:
- parser: recursive descent parser for bihomogeneous polynomials
- commands: argparse dispatch for `bisurf <command>`
"""

from src.cli.parser import PolynomialParser, parse_generators, parse_poly

__all__ = [
    "PolynomialParser",
    "parse_generators",
    "parse_poly",
]
