# ------------------------------------------------------------------------------------------------
# License
# ------------------------------------------------------------------------------------------------

# Copyright (c) 2025 LSeu-Open
#
# This code is licensed under the MIT License.
# See LICENSE file in the root directory

# ------------------------------------------------------------------------------------------------
# Description
# ------------------------------------------------------------------------------------------------

"""
Tests for the printed family formulas and the discrepancy table.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math

import pytest

from srgnet.core.exceptions import CouplingDomainError, UnsupportedFamilyError
from srgnet.entanglement.family_forms import (
    NOTE_BLOCK_PATTERN,
    NOTE_KAPPA_SQUARED,
    NOTE_TRIANGULAR_12_3,
    family_blocks,
    family_closed_forms,
    printed_formulas,
)
from srgnet.graphs.families import Family, FamilySpec

# ------------------------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------------------------

def rows_by_equation(spec, g):
    return {row['equation']: row for row in family_closed_forms(spec, g)}

# ------------------------------------------------------------------------------------------------
# Family blocks
# ------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("spec, expected", [
    (FamilySpec(Family.TRIANGULAR, (8,)), ((0, 2, 8),)),
    (FamilySpec(Family.LATTICE, (4,)), ((-1, 1, 3),)),
    (FamilySpec(Family.PETERSEN), ((0, -1, 2),)),
    (FamilySpec(Family.LATIN_SQUARE_CYCLIC, (3,)), ()),
    (FamilySpec(Family.COMPLETE_BIPARTITE, (3,)), ()),
])
def test_family_blocks(spec, expected):
    assert family_blocks(spec) == expected

def test_latin_square_blocks():
    blocks = family_blocks(FamilySpec(Family.LATIN_SQUARE_CYCLIC, (5,)))
    assert blocks == ((1, -2, 4), (0, -1, 6), (-2, 1, 4))

# ------------------------------------------------------------------------------------------------
# Discrepancy table
# ------------------------------------------------------------------------------------------------

def test_triangular_table():
    """T(8) at g = 1: the 1:23 forms agree, the κ² and block variants do not."""
    print("\n--- Testing discrepancy table for triangular(8) ---")
    # Arrange
    spec = FamilySpec(Family.TRIANGULAR, (8,))

    # Act
    rows = rows_by_equation(spec, 1.0)

    # Assert
    assert set(rows) == {"4-38", "4-37", "4-39", "4-43", "4-66", "4-67", "4-68", "4-70"}
    for equation in ("4-38", "4-37", "4-66"):
        assert rows[equation]['consistent'], equation
        assert rows[equation]['note'] is None
    for equation, note in [("4-39", NOTE_KAPPA_SQUARED), ("4-68", NOTE_KAPPA_SQUARED),
                           ("4-43", NOTE_BLOCK_PATTERN), ("4-70", NOTE_BLOCK_PATTERN),
                           ("4-67", NOTE_TRIANGULAR_12_3)]:
        assert not rows[equation]['consistent'], equation
        assert rows[equation]['note'] == note
    assert all(row['family'] == "triangular(8)" for row in rows.values())
    print("✅ Consistent and inconsistent rows identified.")

def test_triangular_block_values():
    rows = rows_by_equation(FamilySpec(Family.TRIANGULAR, (8,)), 1.0)
    assert rows["4-70"]['printed_value'] == pytest.approx(2 * math.sqrt(8) / math.sqrt(17 * 13))
    assert rows["4-70"]['printed_value'] == pytest.approx(rows["4-43"]['printed_value'])
    assert rows["4-70"]['general_value'] == pytest.approx(2 * math.sqrt(8) / math.sqrt(25 * 21))
    assert rows["4-70"]['partition'] == "block"

def test_triangular_13_2_printed_matches_kappa_squared():
    rows = rows_by_equation(FamilySpec(Family.TRIANGULAR, (8,)), 0.5)
    assert rows["4-68"]['printed_value'] == pytest.approx(rows["4-39"]['printed_value'])

@pytest.mark.parametrize("spec, equation", [
    (FamilySpec(Family.LATTICE, (4,)), "4-75"),
    (FamilySpec(Family.KNESER62), "4-96"),
    (FamilySpec(Family.COMPLETE_BIPARTITE, (3,)), "4-55"),
])
def test_family_1_23_forms_agree(spec, equation):
    for g in (0.1, 1.0, 10.0):
        row = rows_by_equation(spec, g)[equation]
        assert row['consistent']
        assert row['discrepancy'] <= 1e-10

def test_petersen_rows():
    rows = rows_by_equation(FamilySpec(Family.PETERSEN), 1.0)
    assert rows["4-39"]['printed_value'] ** 2 == pytest.approx(164 / 147)
    assert rows["4-39"]['exceeds_unity']
    assert 1 - rows["4-39"]['general_value'] ** 2 == pytest.approx(55 / 147)
    assert not rows["4-62"]['consistent']
    assert rows["4-62"]['note'] == NOTE_BLOCK_PATTERN

def test_kappa_squared_exceeds_unity_at_large_coupling():
    rows = rows_by_equation(FamilySpec(Family.PETERSEN), 1e3)
    assert rows["4-39"]['exceeds_unity']
    assert not rows["4-38"]['exceeds_unity']

def test_complete_bipartite_has_kappa_equals_mu_row():
    rows = rows_by_equation(FamilySpec(Family.COMPLETE_BIPARTITE, (3,)), 1.0)
    assert "4-59" in rows
    assert "4-62" not in rows

def test_zero_coupling_is_consistent():
    rows = family_closed_forms(FamilySpec(Family.LATTICE, (4,)), 0.0)
    assert all(row['printed_value'] == 0.0 and row['consistent'] for row in rows)

def test_disagreement_is_logged(caplog):
    caplog.set_level(logging.WARNING)
    family_closed_forms(FamilySpec(Family.TRIANGULAR, (8,)), 1.0)
    assert "disagree with the general pipeline" in caplog.text

def test_shrikhande_is_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        printed_formulas(FamilySpec(Family.SHRIKHANDE))

def test_negative_coupling_rejected():
    with pytest.raises(CouplingDomainError):
        family_closed_forms(FamilySpec(Family.PETERSEN), -1.0)
