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
Tests for the whitened-SVD and Mehler-grid oracles.

The whitened SVD never looks at the strata, so agreement with the block
predictions is an independent check of the closed forms.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from srgnet.core.exceptions import (
    DOutOfRangeError,
    EmptyOrFullSubsetError,
    GraphError,
    GridTooCoarseError,
)
from srgnet.core.types import Convention, LogBase, Partition
from srgnet.entanglement.oracle import (
    bipartite_entanglement,
    coefficient_entropy,
    exponent_matrix,
    mehler_oracle,
    strata_entanglement,
    strata_partition,
    whitened_spectrum,
)
from srgnet.entanglement.schmidt import (
    CouplingConfig,
    closed_form_schmidt,
    mode_entropy,
    mode_spectrum_from_blocks,
    predicted_report,
    schmidt_coefficients,
)
from srgnet.graphs.families import Family, FamilySpec, generate
from srgnet.graphs.matrices import potential
from srgnet.spectral.stratification import block_diagonalize, stratified_blocks, stratify

FAMILY_INSTANCES = [
    FamilySpec(Family.COMPLETE_BIPARTITE, (3,)),
    FamilySpec(Family.COCKTAIL_PARTY, (4,)),
    FamilySpec(Family.TRIANGULAR, (5,)),
    FamilySpec(Family.TRIANGULAR, (8,)),
    FamilySpec(Family.LATTICE, (4,)),
    FamilySpec(Family.LATIN_SQUARE_CYCLIC, (5,)),
    FamilySpec(Family.KNESER62),
    FamilySpec(Family.PETERSEN),
    FamilySpec(Family.SHRIKHANDE),
]

COUPLINGS = [0.1, 1.0, 10.0]

# ------------------------------------------------------------------------------------------------
# Fixtures
# ------------------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def instances():
    """Graph and root-0 block diagonalization of every family instance."""
    result = {}
    for spec in FAMILY_INSTANCES:
        graph = generate(spec)
        result[spec.label] = (graph, block_diagonalize(stratified_blocks(graph, 0)))
    return result

@pytest.fixture
def petersen():
    return generate(FamilySpec(Family.PETERSEN))

# ------------------------------------------------------------------------------------------------
# Exponent matrix
# ------------------------------------------------------------------------------------------------

def test_exponent_matrix_conventions(petersen):
    """The physical exponent squares to the potential."""
    v = potential(petersen, 1.0).matrix
    assert_allclose(exponent_matrix(petersen, CouplingConfig(g=1.0)), v)
    root = exponent_matrix(petersen, CouplingConfig(g=1.0, convention=Convention.PHYSICAL))
    assert_allclose(root @ root, v, atol=1e-10)

# ------------------------------------------------------------------------------------------------
# Whitened SVD against the closed forms
# ------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_root_bipartition_matches_closed_form(spec, instances):
    """1:23 has a single mode, the first-stratum sector."""
    graph, diag = instances[spec.label]
    for g in COUPLINGS:
        spectrum = whitened_spectrum(graph, [0], CouplingConfig(g=g))
        assert spectrum.shape == (1,)
        assert spectrum[0] == pytest.approx(closed_form_schmidt(diag.params, g, "1:23"), abs=1e-9)

@pytest.mark.parametrize("partition", ["12:3", "13:2"])
@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_split_bipartitions_match_blocks(spec, partition, instances):
    """Splitting the strata gives the first-stratum sector plus one sector per pair."""
    print(f"\n--- Testing {spec.label} {partition} ---")
    graph, diag = instances[spec.label]
    side_a, _ = strata_partition(stratify(graph, 0), partition)
    for g in COUPLINGS:
        # Act
        oracle = whitened_spectrum(graph, side_a, CouplingConfig(g=g))
        predicted = mode_spectrum_from_blocks(diag, g, partition)

        # Assert
        assert_allclose(oracle, predicted, atol=1e-9)
    print("✅ Oracle spectrum matches the block prediction.")

@pytest.mark.parametrize("partition", list(Partition))
def test_total_entropy_matches_prediction(partition, instances):
    graph, diag = instances["triangular(8)"]
    for g in COUPLINGS:
        oracle = strata_entanglement(graph, partition, coupling=CouplingConfig(g=g))
        predicted = predicted_report(diag, g, partition)
        assert oracle.partition == partition.value
        assert oracle.total_entropy == pytest.approx(predicted.total_entropy, rel=1e-8, abs=1e-10)

def test_entropy_in_bits(petersen):
    nats = strata_entanglement(petersen, "12:3", coupling=CouplingConfig(g=1.0))
    bits = strata_entanglement(petersen, "12:3", coupling=CouplingConfig(g=1.0, log_base=LogBase.BASE2))
    assert bits.total_entropy == pytest.approx(nats.total_entropy / math.log(2))

def test_physical_convention_differs(petersen):
    """With V^(1/2) as exponent the closed forms no longer apply."""
    physical = strata_entanglement(petersen, "1:23", coupling=CouplingConfig(g=1.0, convention="physical"))
    assert physical.convention is Convention.PHYSICAL
    assert abs(physical.d_spectrum[0] - 6 / math.sqrt(91)) > 1e-3

def test_arbitrary_subset_report(petersen):
    """Any subset works; the label is the sorted vertex list."""
    report = bipartite_entanglement(petersen, [3, 1, 1])
    assert report.partition == "1,3"
    assert len(report.modes) == 2
    assert list(report.d_spectrum) == sorted(report.d_spectrum, reverse=True)

def test_subset_and_complement_agree(petersen):
    side_a = [0, 2, 4, 6]
    complement = [v for v in range(petersen.n) if v not in side_a]
    coupling = CouplingConfig(g=0.7)
    assert_allclose(whitened_spectrum(petersen, side_a, coupling),
                    whitened_spectrum(petersen, complement, coupling), atol=1e-10)

# ------------------------------------------------------------------------------------------------
# Subset validation
# ------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("subset", [[], list(range(10))])
def test_empty_or_full_subset(petersen, subset):
    with pytest.raises(EmptyOrFullSubsetError):
        bipartite_entanglement(petersen, subset)

@pytest.mark.parametrize("subset", [[10], [-1, 2]])
def test_subset_out_of_range(petersen, subset):
    with pytest.raises(GraphError, match="outside"):
        bipartite_entanglement(petersen, subset)

def test_strata_partition(petersen):
    strat = stratify(petersen, 0)
    side_a, side_b = strata_partition(strat, "12:3")
    assert len(side_a) == 4 and len(side_b) == 6
    assert set(side_a) == {0, *strat.strata[1]}

    side_a, side_b = strata_partition(strat, Partition.S13_VS_S2)
    assert set(side_b) == set(strat.strata[1])

# ------------------------------------------------------------------------------------------------
# Mehler grid
# ------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("d", [0.2, 0.69282, 0.95])
def test_mehler_follows_geometric_law(d):
    """Sampled coefficients reproduce (1 - t²) t^(2n) and the mode entropy."""
    print(f"\n--- Testing Mehler grid at d={d} ---")
    coefficients = mehler_oracle(d)
    assert coefficients.sum() == pytest.approx(1.0)
    assert_allclose(coefficients[:10], schmidt_coefficients(d, 10), atol=1e-6)
    assert coefficient_entropy(coefficients) == pytest.approx(mode_entropy(d).entropy, abs=1e-5)
    print("✅ Geometric distribution reproduced.")

def test_mehler_at_zero_is_product_state():
    coefficients = mehler_oracle(0.0)
    assert coefficients[0] == pytest.approx(1.0)
    assert coefficient_entropy(coefficients) == pytest.approx(0.0, abs=1e-8)

def test_mehler_rejects_narrow_grid():
    with pytest.raises(GridTooCoarseError, match="does not cover"):
        mehler_oracle(0.5, grid_halfwidth=5.0)

def test_mehler_rejects_sparse_grid():
    with pytest.raises(GridTooCoarseError, match="refine the grid"):
        mehler_oracle(0.95, grid_points=8)

@pytest.mark.parametrize("d", [1.0, -0.1, 1.2])
def test_mehler_d_out_of_range(d):
    with pytest.raises(DOutOfRangeError):
        mehler_oracle(d)

def test_coefficient_entropy_in_bits():
    assert coefficient_entropy(np.full(4, 0.25), LogBase.BASE2) == pytest.approx(2.0)
