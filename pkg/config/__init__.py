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
Configuration module for the SRG network analysis toolkit.

This module provides centralized configuration management: numerical
tolerances, entanglement defaults, the Mehler grid and sweep/output settings.
"""

from .srgnet_config import (
    TOLERANCES,
    ENTANGLEMENT_DEFAULTS,
    MEHLER_GRID,
    LARGE_COUPLING,
    SWEEP_DEFAULTS,
    OUTPUT
)
