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
SRG Network Analysis

Strongly regular graphs read as networks of coupled quantum harmonic
oscillators: family generators, distance stratification and block
diagonalization, ground-state entanglement across strata bipartitions, and
A12 singular-value signatures for telling cospectral SRGs apart.

"""

__version__ = "0.1.0"
__author__ = "LSeu-Open"

from .core.types import Graph, Partition, SrgParams
from .graphs.families import Family, FamilySpec, generate
from .data.loaders import load_graphs, save_graphs
from .data.validators import srg_params
from .spectral.stratification import block_diagonalize, stratified_blocks, stratify
from .entanglement.schmidt import CouplingConfig, closed_form_mode, predicted_report
from .entanglement.oracle import bipartite_entanglement, strata_entanglement
from .signature.a12 import a12_signature, canonical_signature, distinguish, scan_catalog
from .run_analysis import scan_files, sweep

__all__ = [
    'Graph',
    'Partition',
    'SrgParams',
    'Family',
    'FamilySpec',
    'generate',
    'load_graphs',
    'save_graphs',
    'srg_params',
    'stratify',
    'stratified_blocks',
    'block_diagonalize',
    'CouplingConfig',
    'closed_form_mode',
    'predicted_report',
    'bipartite_entanglement',
    'strata_entanglement',
    'a12_signature',
    'canonical_signature',
    'distinguish',
    'scan_catalog',
    'scan_files',
    'sweep',
]
