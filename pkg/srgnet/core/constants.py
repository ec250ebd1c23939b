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
Static Application Constants.

This module defines static constants for the toolkit. These values are tied to
file formats, the command-line surface and published reference data, not to
the numerical algorithms. For tunable tolerances and defaults, see
`config.srgnet_config`.
"""

# ------------------------------------------------------------------------------------------------
# Constants
# ------------------------------------------------------------------------------------------------

# Files and environment
LOG_FILE = "srgnet.log"
THREADS_ENV_VAR = "SRGNET_THREADS"

# graph6 format
GRAPH6_HEADER = b">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_LONG_MARKER = 126
GRAPH6_SHORT_LIMIT = 62
GRAPH6_MEDIUM_LIMIT = 258047

# Strata bipartitions, written as "<strata on side A>:<strata on side B>"
PARTITION_LABELS = ("1:23", "12:3", "13:2")

# Command-line surface
CLI_VERBS = ("gen", "check", "stratify", "entropy", "spectrum", "distinguish", "scan", "sweep")
OUTPUT_FORMATS = ("json", "csv", "text")

# CSV layouts
SWEEP_CSV_COLUMNS = [
    'g',
    'partition',
    'mode_index',
    'd',
    'gamma',
    'entropy_nats',
    'total_entropy',
]
SIGNATURE_CSV_COLUMNS = ['graph', 'class', 'value', 'multiplicity']
DISCREPANCY_CSV_COLUMNS = [
    'equation',
    'family',
    'partition',
    'printed_value',
    'general_value',
    'discrepancy',
    'consistent',
    'exceeds_unity',
    'note',
]

# Heads of the published A12 singular-value lists, keyed by (n, kappa, lambda, mu).
# Values are as printed (four decimals, or exact surds where printed as such).
PUBLISHED_SIGNATURE_HEADS = {
    (25, 12, 5, 6): 6.0,
    (26, 10, 3, 4): 4.8990,
    (28, 12, 6, 4): 20 ** 0.5,
    (36, 14, 4, 6): 7.3485,
    (40, 12, 2, 4): 6.0,
    (50, 21, 8, 9): 10.3923,
    (64, 18, 2, 6): 9.4868,
}

# Cleanly printed published lists, as (value, multiplicity) pairs.
PUBLISHED_SIGNATURES = {
    'triangular_8': ((20 ** 0.5, 1), (8 ** 0.5, 5), (0.0, 6)),
    'paulus_2': ((6.0, 1), (2.4495, 4), (1.7321, 4), (0.0, 3)),
    'paulus_5': ((6.0, 1), (2.4495, 4), (2.0, 3), (0.0, 4)),
    'paulus_6': ((6.0, 1), (2.0, 9), (0.0, 2)),
}
