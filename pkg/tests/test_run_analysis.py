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
Tests for the coupling sweeps and the catalog scan runner.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import pytest
from unittest.mock import patch

from numpy.testing import assert_allclose

from srgnet import run_analysis
from srgnet.core.exceptions import CouplingDomainError, SignatureError
from srgnet.core.types import LogBase, SrgParams
from srgnet.data.loaders import save_graphs
from srgnet.entanglement.schmidt import CouplingConfig, closed_form_mode
from srgnet.graphs.families import Family, FamilySpec, generate

# ------------------------------------------------------------------------------------------------
# Fixtures
# ------------------------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def petersen():
    return generate(FamilySpec(Family.PETERSEN))

@pytest.fixture
def catalog_files(tmp_path):
    """Two catalog files with the (16,6,2,2) graphs."""
    lattice = generate(FamilySpec(Family.LATTICE, (4,)))
    shrikhande = generate(FamilySpec(Family.SHRIKHANDE))
    first = save_graphs(tmp_path / "catalog" / "part1.g6", [lattice, shrikhande])
    second = save_graphs(tmp_path / "catalog" / "part2.g6", [shrikhande])
    return str(first), str(second)

# ------------------------------------------------------------------------------------------------
# Tests for coupling_grid
# ------------------------------------------------------------------------------------------------

def test_coupling_grid_is_logarithmic():
    assert_allclose(run_analysis.coupling_grid(0.01, 100.0, 5), [0.01, 0.1, 1.0, 10.0, 100.0])

def test_coupling_grid_single_point():
    assert run_analysis.coupling_grid(0.5, 2.0, 1).tolist() == [0.5]

@pytest.mark.parametrize("g_min, g_max", [(0.0, 1.0), (-1.0, 1.0), (2.0, 1.0)])
def test_coupling_grid_bad_range(g_min, g_max):
    with pytest.raises(CouplingDomainError):
        run_analysis.coupling_grid(g_min, g_max, 5)

def test_coupling_grid_needs_points():
    with pytest.raises(ValueError, match="at least one point"):
        run_analysis.coupling_grid(0.1, 1.0, 0)

# ------------------------------------------------------------------------------------------------
# Tests for sweep
# ------------------------------------------------------------------------------------------------

def test_sweep_matches_closed_form(petersen, caplog):
    """A 1:23 sweep follows the first-stratum closed form at every coupling."""
    print("\n--- Testing sweep (1:23) ---")
    # Arrange
    caplog.set_level("INFO")

    # Act
    reports = run_analysis.sweep(petersen, "1:23", g_min=0.1, g_max=10.0, points=3, workers=2)

    # Assert
    assert [report.g for report in reports] == pytest.approx([0.1, 1.0, 10.0])
    for report in reports:
        expected = closed_form_mode(SrgParams(10, 3, 0, 1), report.g, "1:23").entropy
        assert report.total_entropy == pytest.approx(expected, rel=1e-9)
    assert "Swept 1:23 over 3 couplings" in caplog.text
    print("✅ Sweep follows the closed form.")

def test_sweep_keeps_log_base(petersen):
    coupling = CouplingConfig(g=123.0, log_base=LogBase.BASE2)
    reports = run_analysis.sweep(petersen, "12:3", g_min=1.0, g_max=1.0, points=1, coupling=coupling)
    assert len(reports) == 1
    assert reports[0].g == 1.0
    assert reports[0].log_base is LogBase.BASE2

def test_sweep_defaults_from_config(petersen):
    reports = run_analysis.sweep(petersen, "1:23", workers=1)
    assert len(reports) == 25
    assert reports[0].g == pytest.approx(0.01)
    assert reports[-1].g == pytest.approx(100.0)

def test_sweep_over_subset(petersen):
    reports = run_analysis.sweep(petersen, subset=[0, 1], g_min=0.5, g_max=2.0, points=2)
    assert all(report.partition == "0,1" and len(report.modes) == 2 for report in reports)

@pytest.mark.parametrize("partition, subset", [(None, None), ("1:23", [0])])
def test_entanglement_report_needs_one_side(petersen, partition, subset):
    with pytest.raises(ValueError, match="either a strata partition or a vertex subset"):
        run_analysis.entanglement_report(petersen, 1.0, partition, subset)

# ------------------------------------------------------------------------------------------------
# Tests for scan_files
# ------------------------------------------------------------------------------------------------

def test_scan_files_success(catalog_files, caplog):
    """All graphs of every file land in one signature class."""
    print("\n--- Testing scan_files (Success) ---")
    caplog.set_level("INFO")
    first, second = catalog_files

    result = run_analysis.scan_files([first, second], workers=1)

    assert result.labels == (f"{first}:0", f"{first}:1", f"{second}:0")
    assert result.skipped == ()
    assert len(result.report.classes) == 1
    assert result.report.classes[0].members == (0, 1, 2)
    assert "3 graph(s) in 1 signature class(es)" in caplog.text
    print("✅ Catalog scanned.")

def test_scan_files_skips_unreadable(catalog_files, tmp_path, caplog):
    print("\n--- Testing scan_files (One Failure) ---")
    first, _ = catalog_files
    missing = str(tmp_path / "missing.g6")

    result = run_analysis.scan_files([missing, first])

    assert result.skipped == (missing,)
    assert result.labels == (f"{first}:0", f"{first}:1")
    assert f"Skipping {missing}" in caplog.text
    print("✅ Unreadable file skipped and the scan continued.")

@patch('srgnet.run_analysis.load_graphs_safely')
def test_scan_files_nothing_loaded(mock_load):
    mock_load.return_value = None
    with pytest.raises(SignatureError, match="No graphs could be loaded"):
        run_analysis.scan_files(["a.g6", "b.g6"])
    assert mock_load.call_count == 2
