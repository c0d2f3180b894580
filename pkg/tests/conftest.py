"""
Shared fixtures: one ideal per numerical type, the monomial ideals with
known resolutions, and cached resolutions so the expensive computation runs
once per session.
"""

import pytest

from src.cli.parser import parse_generators
from src.surface.ideal import validate
from src.surface.resolution import minimal_free_resolution

TYPE_EXAMPLES = {
    "1": ["s^2*u + s*t*v", "t^2*u", "s^2*v + s*t*u", "t^2*v + s*t*v"],
    "2": ["s^2*u", "t^2*u", "s^2*v + s*t*u", "t^2*v + s*t*v"],
    "3": ["s^2*u + s*t*v", "t^2*u", "s^2*v", "t^2*v + s*t*u"],
    "4": ["s*t*v", "t^2*v", "s^2*v - t^2*u", "s^2*u"],
    "5a": ["s^2*u", "s^2*v", "t^2*u", "t^2*v + s*t*v"],
    "5b": ["s^2*u", "s^2*v", "t^2*u", "t^2*v + s*t*u"],
    "6": ["s^2*u", "s^2*v", "t^2*u", "t^2*v"],
}

WITH_BASEPOINTS = {
    "s*t": ["s^2*u", "s*t*u", "t^2*u", "s*t*v"],
    "s^2": ["s^2*u", "s^2*v", "s*t*u", "s*t*v"],
}

# Shifts written as (-a, -b); level 0 holds the generators.
TYPE_BETTI = {
    "1": [
        {(-2, -1): 4},
        {(-2, -4): 1, (-3, -2): 4, (-4, -1): 2},
        {(-3, -4): 2, (-4, -2): 3},
        {(-4, -4): 1},
    ],
    "2": [
        {(-2, -1): 4},
        {(-2, -3): 1, (-3, -2): 4, (-4, -1): 2},
        {(-3, -3): 2, (-4, -2): 3},
        {(-4, -3): 1},
    ],
    "3": [
        {(-2, -1): 4},
        {(-2, -4): 1, (-3, -1): 1, (-3, -2): 2, (-3, -3): 1, (-4, -2): 1, (-5, -1): 1},
        {(-3, -4): 2, (-4, -3): 2, (-5, -2): 2},
        {(-4, -4): 1, (-5, -3): 1},
    ],
    "4": [
        {(-2, -1): 4},
        {(-2, -3): 1, (-3, -1): 1, (-3, -2): 2, (-4, -2): 1, (-5, -1): 1},
        {(-3, -3): 1, (-4, -3): 1, (-5, -2): 2},
        {(-5, -3): 1},
    ],
    "5": [
        {(-2, -1): 4},
        {(-2, -2): 1, (-3, -2): 2, (-4, -1): 2},
        {(-4, -2): 2},
    ],
    "6": [
        {(-2, -1): 4},
        {(-2, -2): 2, (-4, -1): 2},
        {(-4, -2): 1},
    ],
}

MONOMIAL_IDEALS = {
    "G1": ["s^2*u", "s^2*v", "s*t*u", "s*t*v", "t^2*u^2", "t^2*u*v", "t^3*u", "t^3*v", "t^2*v^3"],
    "G1'": ["s^2*u", "s^2*v", "s*t*u", "t^2*u", "s*t*v^2", "s*t^2*v", "t^3*v", "t^2*v^3"],
    "G2": ["s^2*u", "s^2*v", "s*t*u", "s*t*v", "t^2*u^2", "t^2*u*v", "t^3*u", "t^3*v"],
    "G2'": ["s^2*u", "s^2*v", "s*t*u", "t^2*u", "s*t*v^2", "s*t^2*v", "t^3*v"],
}

MONOMIAL_BETTI = {
    "G1": [
        {(-2, -1): 4, (-2, -2): 2, (-3, -1): 2, (-2, -3): 1},
        {(-2, -2): 2, (-2, -3): 1, (-2, -4): 1, (-3, -1): 2, (-3, -2): 5, (-3, -3): 2, (-4, -1): 2},
        {(-3, -2): 1, (-3, -3): 2, (-3, -4): 2, (-4, -2): 3, (-4, -3): 1},
        {(-4, -3): 1, (-4, -4): 1},
    ],
    "G1'": [
        {(-2, -1): 4, (-2, -2): 1, (-3, -1): 2, (-2, -3): 1},
        {(-2, -2): 1, (-2, -3): 1, (-2, -4): 1, (-3, -1): 2, (-3, -2): 4, (-3, -3): 2, (-4, -1): 2},
        {(-3, -3): 2, (-3, -4): 2, (-4, -2): 3, (-4, -3): 1},
        {(-4, -3): 1, (-4, -4): 1},
    ],
    "G2": [
        {(-2, -1): 4, (-2, -2): 2, (-3, -1): 2},
        {(-2, -2): 2, (-2, -3): 1, (-3, -1): 2, (-3, -2): 5, (-4, -1): 2},
        {(-3, -2): 1, (-3, -3): 2, (-4, -2): 3},
        {(-4, -3): 1},
    ],
    "G2'": [
        {(-2, -1): 4, (-2, -2): 1, (-3, -1): 2},
        {(-2, -2): 1, (-2, -3): 1, (-3, -1): 2, (-3, -2): 4, (-4, -1): 2},
        {(-3, -3): 2, (-4, -2): 3},
        {(-4, -3): 1},
    ],
}


def type_family(label: str) -> str:
    """'5a' and '5b' share one Betti table."""
    return label[0]


def surface(label: str):
    return validate(parse_generators(TYPE_EXAMPLES[label]))


@pytest.fixture(scope="session")
def ideals():
    return {label: surface(label) for label in TYPE_EXAMPLES}


@pytest.fixture(scope="session")
def example_5a(ideals):
    return ideals["5a"]


@pytest.fixture(scope="session")
def resolutions(ideals):
    return {label: minimal_free_resolution(ideal) for label, ideal in ideals.items()}


@pytest.fixture(scope="session")
def monomial_resolutions():
    return {
        name: (tuple(parse_generators(texts)), minimal_free_resolution(parse_generators(texts)))
        for name, texts in MONOMIAL_IDEALS.items()
    }
