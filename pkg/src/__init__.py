"""
bisurf - Main Source Package

This package contains the components for analysing tensor product surfaces of bidegree (2,1):
- algebra: exact rational linear algebra, bihomogeneous forms, polynomials in x0..x3
- surface: ideal validation, resolutions, classification, implicitization, dual scroll
- graph: LangGraph analysis pipeline and its state
- models: result models and the JSON report schema
- cli: polynomial parser and command dispatch
- config: logging, exceptions and settings
- utils: input file loading
"""

__version__ = "0.1.0"
