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
Numerical Configuration.

This module serves as the central hub for every tunable parameter of the
analysis pipeline: tolerances used by the block diagonalization and the
signature comparison, the Mehler grid used by the Schmidt-coefficient oracle,
and the defaults of the entanglement computations.

Adjusting the values in this file changes numerical thresholds without
requiring any modification to the algorithms themselves. A custom copy can be
passed to the CLI with ``--config path/to/file.py``.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------
import types

# ------------------------------------------------------------------------------------------------
# Tolerances
# ------------------------------------------------------------------------------------------------

TOLERANCES = types.MappingProxyType({
    # analytic 3x3 block vs numeric projection
    'block_match': 1e-10,
    # pair blocks: lambda1 + lambda2 = lambda - mu, lambda12 - lambda1*lambda2 = kappa - mu
    'pair_constraint': 1e-8,
    # off-diagonal residual allowed on the projected a22
    'joint_diagonal': 1e-8,
    # relative gap below which two singular values are the same multiplet
    'multiplicity_grouping': 1e-8,
    # singular values below this fraction of the largest are kernel modes
    'kernel_relative': 1e-10,
    # Rayleigh quotients are snapped to r or s within this distance
    'singlet_snap': 1e-6,
    # block spectra vs dense eigensolver
    'spectrum_match': 1e-8,
    # absolute tolerance when comparing A12 signatures
    'signature_compare': 1e-6,
    # A12 top singular value vs mu sqrt((n-kappa-1)/kappa)
    'signature_top_value': 1e-8,
    # sum of squared A12 singular values vs mu (n-kappa-1)
    'signature_frobenius': 1e-6,
    # oracle modes below this are reported as decoupled
    'oracle_zero': 1e-12,
    # smallest eigenvalue accepted when whitening an exponent matrix
    'whitening_floor': 1e-12,
    # printed family formula vs general pipeline
    'formula_consistency': 1e-10,
})

# ------------------------------------------------------------------------------------------------
# Entanglement defaults
# ------------------------------------------------------------------------------------------------

ENTANGLEMENT_DEFAULTS = types.MappingProxyType({
    'g': 1.0,
    # 'natural' (nats) or 'base2' (bits)
    'log_base': 'natural',
    # 'paper' uses V as the ground-state exponent, 'physical' uses V^(1/2)
    'convention': 'paper',
})

MEHLER_GRID = types.MappingProxyType({
    # measured in units of the widest standard deviation of the two-mode Gaussian
    'halfwidth': 8.0,
    'min_halfwidth': 6.0,
    'points': 400,
    # first terms compared against the geometric law
    'compared_terms': 10,
    'geometric_tolerance': 1e-6,
    # deviation of the top coefficient from 2/(gamma+1) that marks a coarse grid
    'top_coefficient_tolerance': 1e-4,
})

LARGE_COUPLING = types.MappingProxyType({
    # the asymptotic forms are trusted only once gamma reaches this value
    'min_gamma': 2.0,
})

# ------------------------------------------------------------------------------------------------
# Sweep and output defaults
# ------------------------------------------------------------------------------------------------

SWEEP_DEFAULTS = types.MappingProxyType({
    'g_min': 1e-2,
    'g_max': 1e2,
    'points': 25,
})

OUTPUT = types.MappingProxyType({
    'significant_digits': 12,
    'json_indent': 2,
})
