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
Tests for stratification and block diagonalization.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging

import networkx as nx
import numpy as np
import pytest
from numpy.testing import assert_allclose

from srgnet.core.exceptions import (
    BlockSumViolationError,
    DisconnectedGraphError,
    NegativeDiscriminantError,
    NotThreeStrataError,
    RootOutOfRangeError,
    StratificationError,
)
from srgnet.core.types import Graph, SrgParams
from srgnet.graphs.families import Family, FamilySpec, generate
from srgnet.graphs.matrices import srg_eigenvalues
from srgnet.spectral.serialization import (
    block_diagonalization_from_dict,
    block_diagonalization_to_dict,
    stratification_to_dict,
)
from srgnet.spectral.stratification import (
    block_diagonalize,
    extract_blocks,
    first_stratum_block,
    group_descending,
    numeric_first_stratum_block,
    pair_from_lambda12,
    strata_vertices,
    stratified_blocks,
    stratify,
)

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

# ------------------------------------------------------------------------------------------------
# Fixtures
# ------------------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def diagonalizations():
    """Block diagonalization at root 0 of every family instance."""
    return {spec.label: block_diagonalize(stratified_blocks(generate(spec), 0)) for spec in FAMILY_INSTANCES}

@pytest.fixture
def petersen():
    return generate(FamilySpec(Family.PETERSEN))

# ------------------------------------------------------------------------------------------------
# Stratification
# ------------------------------------------------------------------------------------------------

def test_stratify_petersen(petersen):
    strat = stratify(petersen, 0)
    assert strat.valencies == (1, 3, 6)
    assert strat.strata[0] == (0,)
    assert set(strat.strata[1]) == set(np.flatnonzero(petersen.adjacency[0]).tolist())

def test_stratify_path_has_more_strata():
    path = Graph.from_networkx(nx.path_graph(4))
    assert stratify(path, 0).valencies == (1, 1, 1, 1)

def test_stratify_root_out_of_range(petersen):
    with pytest.raises(RootOutOfRangeError):
        stratify(petersen, 10)

def test_stratify_disconnected():
    graph = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        stratify(graph, 0)

def test_strata_vertices(petersen):
    strat = stratify(petersen, 0)
    assert strata_vertices(strat, (0, 2)) == tuple(sorted((0,) + strat.strata[2]))

# ------------------------------------------------------------------------------------------------
# Block extraction
# ------------------------------------------------------------------------------------------------

def test_extract_blocks_shapes(petersen):
    blocks = extract_blocks(petersen, stratify(petersen, 0))
    assert blocks.a11.shape == (3, 3)
    assert blocks.a12.shape == (3, 6)
    assert blocks.a22.shape == (6, 6)
    assert blocks.params == SrgParams(10, 3, 0, 1)

def test_extract_blocks_rejects_four_strata():
    path = Graph.from_networkx(nx.path_graph(4))
    with pytest.raises(NotThreeStrataError):
        extract_blocks(path, stratify(path, 0), SrgParams(4, 1, 0, 1))

def test_extract_blocks_wrong_parameters(petersen):
    """Claiming mu = 2 breaks the A12 column sums."""
    with pytest.raises(BlockSumViolationError, match="A12 column sums"):
        extract_blocks(petersen, stratify(petersen, 0), SrgParams(10, 3, 0, 2))

@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_first_stratum_block_matches_projection(spec):
    """The analytic 3x3 block equals <phi_i|A|phi_j> from the blocks."""
    blocks = stratified_blocks(generate(spec), 0)
    assert_allclose(numeric_first_stratum_block(blocks), first_stratum_block(blocks.params).m, atol=1e-10)

def test_first_stratum_block_entries():
    block = first_stratum_block(SrgParams(28, 12, 6, 4))
    assert block.lambda1 == 6.0
    assert block.lambda2 == 8.0
    assert block.lambda12 == pytest.approx(16 * 15 / 12)

# ------------------------------------------------------------------------------------------------
# Block diagonalization
# ------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_pair_constraints_and_singlets(spec, diagonalizations):
    """Every pair obeys the SRG sum/product rules; every singlet is r or s."""
    diag = diagonalizations[spec.label]
    params = diag.params
    spectrum = srg_eigenvalues(params)
    for pair in diag.pairs:
        assert pair.lambda1 + pair.lambda2 == pytest.approx(params.lam - params.mu, abs=1e-8)
        assert pair.lambda12 - pair.lambda1 * pair.lambda2 == pytest.approx(params.kappa - params.mu, abs=1e-8)
    for value in diag.singlets2 + diag.singlets3:
        assert min(abs(value - spectrum.r), abs(value - spectrum.s)) < 1e-8

@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_mode_counts(spec, diagonalizations):
    diag = diagonalizations[spec.label]
    paired = sum(pair.multiplicity for pair in diag.pairs)
    assert 1 + paired + len(diag.singlets2) == diag.params.kappa
    assert 1 + paired + len(diag.singlets3) == diag.params.nonadjacent

@pytest.mark.parametrize("spec", FAMILY_INSTANCES, ids=lambda spec: spec.label)
def test_block_spectrum_matches_adjacency(spec, diagonalizations):
    graph = generate(spec)
    dense = np.linalg.eigvalsh(graph.adjacency.astype(float))
    assert_allclose(diagonalizations[spec.label].spectrum(), dense, atol=1e-8)

def test_triangular_8_pairs(diagonalizations):
    """T(8): five pairs with lambda12 = 8 and diagonal {0, 2}."""
    diag = diagonalizations["triangular(8)"]
    assert len(diag.pairs) == 1
    pair = diag.pairs[0]
    print(f"\n[T(8)] pair {pair}")
    assert pair.multiplicity == 5
    assert pair.lambda12 == pytest.approx(8.0)
    assert sorted([pair.lambda1, pair.lambda2]) == pytest.approx([0.0, 2.0], abs=1e-8)
    assert (len(diag.singlets2), len(diag.singlets3)) == (6, 9)

def test_petersen_pairs(diagonalizations):
    diag = diagonalizations["petersen"]
    assert [(p.lambda12, p.multiplicity) for p in diag.pairs] == [(pytest.approx(2.0), 2)]
    assert diag.singlets2 == ()
    assert len(diag.singlets3) == 3

def test_complete_bipartite_has_no_pairs(diagonalizations):
    diag = diagonalizations["complete-bipartite(3)"]
    assert diag.pairs == ()
    assert diag.singlets2 == (0.0, 0.0)
    assert diag.singlets3 == (0.0,)

def test_block_diagonalize_logs(petersen, caplog):
    caplog.set_level(logging.INFO)
    block_diagonalize(stratified_blocks(petersen, 0))
    assert "Block-diagonalized SRG(10,3,0,1)" in caplog.text

# ------------------------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------------------------

def test_group_descending():
    values = np.array([3.0, 3.0 - 1e-12, 2.0, 1e-14, 0.0])
    groups = group_descending(values, 1e-8)
    assert [g.tolist() for g in groups] == [[0, 1], [2], [3, 4]]

def test_pair_from_lambda12():
    lambda1, lambda2 = pair_from_lambda12(SrgParams(28, 12, 6, 4), 8.0)
    assert (lambda1, lambda2) == pytest.approx((2.0, 0.0))

def test_pair_from_lambda12_negative_discriminant():
    with pytest.raises(NegativeDiscriminantError):
        pair_from_lambda12(SrgParams(28, 12, 6, 4), 20.0)

def test_pair_from_lambda12_non_positive():
    with pytest.raises(StratificationError):
        pair_from_lambda12(SrgParams(28, 12, 6, 4), 0.0)

# ------------------------------------------------------------------------------------------------
# Serialization
# ------------------------------------------------------------------------------------------------

def test_stratification_to_dict(petersen):
    payload = stratification_to_dict(stratify(petersen, 0))
    assert payload['root'] == 0
    assert payload['valencies'] == [1, 3, 6]

def test_block_diagonalization_json_form(diagonalizations):
    """Singlets are stored as (value, count) pairs and expand back unchanged."""
    diag = diagonalizations["triangular(8)"]
    payload = block_diagonalization_to_dict(diag)
    assert payload['params'] == {'n': 28, 'kappa': 12, 'lambda': 6, 'mu': 4}
    assert sum(count for _, count in payload['singlets3']) == 9

    rebuilt = block_diagonalization_from_dict(payload)
    assert rebuilt == diag
