"""
Numerical type, Hilbert function, Betti table and implicit degree do not
depend on the choice of coordinates on P^1 x P^1 or of the basis of U.
"""

import random

import pytest

from src.algebra.xpoly import pullback
from src.surface.classify import classify
from src.surface.ideal import hilbert_table, is_basepoint_free, random_transform
from src.surface.implicitize import implicit_equation
from src.surface.resolution import betti_table, minimal_free_resolution
from tests.conftest import TYPE_BETTI, TYPE_EXAMPLES, type_family

LABELS = sorted(TYPE_EXAMPLES)
TRANSFORMS = 20


@pytest.mark.parametrize("label", LABELS)
def test_type_survives_coordinate_changes(ideals, label):
    """Random GL2 x GL2 x GL4 changes keep the numerical type"""
    rng = random.Random(f"type-{label}")
    for _ in range(TRANSFORMS):
        moved = random_transform(ideals[label], rng)
        assert is_basepoint_free(moved).free
        assert classify(moved).numerical_type.value == label


@pytest.mark.parametrize("label", LABELS)
def test_hilbert_table_survives_coordinate_changes(ideals, label):
    """HF(R/I) is a property of the ideal, not of its coordinates"""
    moved = random_transform(ideals[label], random.Random(21))
    assert hilbert_table(moved, 5, 4).values == hilbert_table(ideals[label], 5, 4).values


@pytest.mark.parametrize("label", LABELS)
def test_betti_table_survives_coordinate_changes(ideals, label):
    """The minimal resolution of every moved ideal has the same shifts"""
    rng = random.Random(f"betti-{label}")
    for _ in range(TRANSFORMS):
        moved = random_transform(ideals[label], rng)
        resolution = minimal_free_resolution(moved)
        assert betti_table(resolution).as_multisets() == TYPE_BETTI[type_family(label)]
        assert resolution.compositions_vanish()


@pytest.mark.parametrize("label", LABELS)
def test_implicit_equation_after_coordinate_change(ideals, label):
    """The reduced equation still vanishes on the image and the map degree is unchanged"""
    rng = random.Random(f"implicit-{label}")
    original = implicit_equation(ideals[label])
    for _ in range(TRANSFORMS):
        moved = random_transform(ideals[label], rng)
        result = implicit_equation(moved)
        assert pullback(result.reduced, moved).is_zero
        assert result.reduced.degree == original.reduced.degree
        assert result.multiplicity == original.multiplicity
