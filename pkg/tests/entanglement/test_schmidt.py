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
Tests for Schur reduction, the γ/entropy pipeline and the closed-form Schmidt numbers.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from srgnet.core.exceptions import CouplingDomainError, DOutOfRangeError, SingularBlockError
from srgnet.core.types import Convention, LogBase, Partition, SrgParams
from srgnet.entanglement.schmidt import (
    CouplingConfig,
    block_mode,
    block_schmidt,
    closed_form_mode,
    closed_form_schmidt,
    entropy_from_gamma,
    first_stratum_potential,
    mode_entropy,
    mode_spectrum_from_blocks,
    one_minus_d_squared,
    predicted_report,
    report_from_spectrum,
    schmidt_coefficients,
    schur_reduce,
)
from srgnet.graphs.families import Family, FamilySpec, generate
from srgnet.spectral.stratification import TwoByTwoBlock, block_diagonalize, stratified_blocks

PETERSEN = SrgParams(10, 3, 0, 1)
TRIANGULAR_8 = SrgParams(28, 12, 6, 4)

# ------------------------------------------------------------------------------------------------
# Fixtures
# ------------------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def petersen_blocks():
    return block_diagonalize(stratified_blocks(generate(FamilySpec(Family.PETERSEN)), 0))

# ------------------------------------------------------------------------------------------------
# Coupling configuration
# ------------------------------------------------------------------------------------------------

def test_coupling_defaults():
    coupling = CouplingConfig.from_config()
    assert coupling.g == 1.0
    assert coupling.log_base is LogBase.NATURAL
    assert coupling.convention is Convention.PAPER

def test_coupling_accepts_strings():
    coupling = CouplingConfig(g=2, log_base="base2", convention="physical")
    assert coupling.log_base is LogBase.BASE2
    assert coupling.convention is Convention.PHYSICAL

def test_coupling_rejects_negative_g():
    with pytest.raises(CouplingDomainError):
        CouplingConfig(g=-1.0)

# ------------------------------------------------------------------------------------------------
# Schur complement
# ------------------------------------------------------------------------------------------------

def test_schur_reduce_scalar():
    assert schur_reduce([[2.0]], [[1.0]], [[2.0]])[0, 0] == pytest.approx(1.5)

def test_schur_reduce_matches_inverse_block():
    """The Schur complement inverts to the matching block of the full inverse."""
    rng = np.random.default_rng(3)
    raw = rng.normal(size=(5, 5))
    full = raw @ raw.T + 5 * np.eye(5)
    reduced = schur_reduce(full[:2, :2], full[:2, 2:], full[2:, 2:])
    assert_allclose(np.linalg.inv(reduced), np.linalg.inv(full)[:2, :2], atol=1e-12)
    assert_allclose(reduced, reduced.T)

def test_schur_reduce_empty_block():
    assert_allclose(schur_reduce([[3.0]], np.zeros((1, 0)), np.zeros((0, 0))), [[3.0]])

def test_schur_reduce_singular_block():
    with pytest.raises(SingularBlockError):
        schur_reduce([[1.0]], [[1.0]], [[0.0]])

# ------------------------------------------------------------------------------------------------
# γ and entropy
# ------------------------------------------------------------------------------------------------

def test_entropy_zero_at_gamma_one():
    assert entropy_from_gamma(1.0) == 0.0

def test_entropy_gamma_three():
    """γ = 3: S = 2 log 2, i.e. exactly 2 bits."""
    assert entropy_from_gamma(3.0) == pytest.approx(2 * math.log(2))
    assert entropy_from_gamma(3.0, LogBase.BASE2) == pytest.approx(2.0)

def test_mode_entropy_from_d():
    mode = mode_entropy(math.sqrt(8.0 / 9.0))
    assert mode.gamma == pytest.approx(3.0)
    assert mode.t_squared == pytest.approx(0.5)
    assert mode.entropy == pytest.approx(2 * math.log(2))

def test_mode_entropy_uses_magnitude():
    assert mode_entropy(-0.5) == mode_entropy(0.5)

@pytest.mark.parametrize("d", [1.0, 1.5, float("nan"), float("inf")])
def test_mode_entropy_out_of_range(d):
    with pytest.raises(DOutOfRangeError):
        mode_entropy(d)

def test_mode_entropy_in_bits():
    mode = mode_entropy(0.6, CouplingConfig(log_base=LogBase.BASE2))
    assert mode.entropy == pytest.approx(mode_entropy(0.6).entropy / math.log(2))

def test_schmidt_coefficients_geometric():
    """Coefficients sum to one and the first is 2/(γ+1)."""
    coefficients = schmidt_coefficients(0.8, 200)
    gamma = mode_entropy(0.8).gamma
    assert coefficients.sum() == pytest.approx(1.0)
    assert coefficients[0] == pytest.approx(2.0 / (gamma + 1.0))
    assert coefficients[1] / coefficients[0] == pytest.approx((gamma - 1) / (gamma + 1))

# ------------------------------------------------------------------------------------------------
# First-stratum closed forms
# ------------------------------------------------------------------------------------------------

def test_petersen_closed_forms_at_unit_coupling():
    """Exact rational values for SRG(10,3,0,1) at g = 1."""
    print("\n--- Petersen closed forms, g = 1 ---")
    d_1 = closed_form_schmidt(PETERSEN, 1.0, "1:23")
    d_12 = closed_form_schmidt(PETERSEN, 1.0, "12:3")
    d_13 = closed_form_schmidt(PETERSEN, 1.0, "13:2")
    print(f"d(1:23)={d_1:.10f}, d(12:3)={d_12:.10f}, d(13:2)={d_13:.10f}")

    assert d_1 ** 2 == pytest.approx(36 / 91)
    assert 1 - d_12 ** 2 == pytest.approx(55 / 111)
    assert 1 - d_13 ** 2 == pytest.approx(55 / 147)
    print("✅ Closed forms match the exact values.")

@pytest.mark.parametrize("partition", ["1:23", "12:3", "13:2"])
def test_one_minus_d_squared_is_consistent(partition):
    for g in (0.1, 1.0, 10.0):
        d = closed_form_schmidt(TRIANGULAR_8, g, partition)
        assert one_minus_d_squared(TRIANGULAR_8, g, partition) == pytest.approx(1 - d * d, rel=1e-12)

def test_verbatim_13_2_exceeds_unity():
    """The κ² variant is not a valid Schmidt number for the Petersen graph."""
    d = closed_form_schmidt(PETERSEN, 1.0, Partition.S13_VS_S2, verbatim=True)
    assert d ** 2 == pytest.approx(164 / 147)
    assert d > 1

def test_zero_coupling_is_unentangled():
    for partition in Partition:
        assert closed_form_schmidt(TRIANGULAR_8, 0.0, partition) == 0.0
        assert closed_form_mode(TRIANGULAR_8, 0.0, partition).entropy == 0.0

def test_closed_form_mode_large_coupling():
    """Stays finite where d rounds to 1 in floating point."""
    mode = closed_form_mode(TRIANGULAR_8, 1e8, "1:23")
    assert math.isfinite(mode.entropy)
    assert mode.gamma == pytest.approx(math.sqrt(2e8 * 12 / 28), rel=1e-6)

def test_first_stratum_potential_schur_form():
    """1 - (Schur complement)/P_00 of the first-stratum potential is d² for 1:23."""
    p = first_stratum_potential(PETERSEN, 1.0)
    reduced = schur_reduce(p[:1, :1], p[:1, 1:], p[1:, 1:])
    assert 1 - reduced[0, 0] / p[0, 0] == pytest.approx(36 / 91)

# ------------------------------------------------------------------------------------------------
# Paired blocks
# ------------------------------------------------------------------------------------------------

def test_block_schmidt_petersen():
    block = TwoByTwoBlock(lambda1=0.0, lambda2=-1.0, lambda12=2.0)
    d = block_schmidt(block, PETERSEN, 1.0)
    assert d ** 2 == pytest.approx(8 / 63)
    mode = block_mode(block, PETERSEN, 1.0)
    assert 1 / mode.gamma ** 2 == pytest.approx(55 / 63)

def test_block_schmidt_verbatim_differs():
    block = TwoByTwoBlock(lambda1=0.0, lambda2=2.0, lambda12=8.0)
    corrected = block_schmidt(block, TRIANGULAR_8, 1.0)
    printed = block_schmidt(block, TRIANGULAR_8, 1.0, verbatim=True)
    assert corrected == pytest.approx(2 * math.sqrt(8) / math.sqrt(25 * 21))
    assert printed == pytest.approx(2 * math.sqrt(8) / math.sqrt(17 * 13))

def test_block_schmidt_verbatim_without_real_value():
    """λ12 - λi < -1/(2g) on one side and not the other has no real square root."""
    block = TwoByTwoBlock(lambda1=3.0, lambda2=-1.0, lambda12=1.0)
    assert math.isnan(block_schmidt(block, PETERSEN, 1.0, verbatim=True))

# ------------------------------------------------------------------------------------------------
# Predicted spectra and reports
# ------------------------------------------------------------------------------------------------

def test_mode_spectrum_from_blocks_petersen(petersen_blocks):
    """12:3 has the first-stratum sector, two pair sectors and one product mode."""
    spectrum = mode_spectrum_from_blocks(petersen_blocks, 1.0, "12:3")
    assert len(spectrum) == 4
    assert spectrum[0] == pytest.approx(math.sqrt(56 / 111))
    assert spectrum[1:3] == pytest.approx((math.sqrt(8 / 63),) * 2)
    assert spectrum[3] == 0.0

def test_mode_spectrum_1_23_has_one_mode(petersen_blocks):
    assert mode_spectrum_from_blocks(petersen_blocks, 1.0, "1:23") == pytest.approx((6 / math.sqrt(91),))

def test_predicted_report_total(petersen_blocks):
    report = predicted_report(petersen_blocks, 1.0, "13:2")
    expected = (closed_form_mode(PETERSEN, 1.0, "13:2").entropy
                + 2 * block_mode(petersen_blocks.pairs[0], PETERSEN, 1.0).entropy)
    assert report.partition == "13:2"
    assert report.total_entropy == pytest.approx(expected)
    assert report.to_dict()['total_entropy'] == report.total_entropy

def test_report_from_spectrum_sorts():
    report = report_from_spectrum("0,1", 1.0, [0.1, 0.5, 0.0])
    assert report.d_spectrum == (0.5, 0.1, 0.0)
    assert report.log_base is LogBase.NATURAL
