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
Number formatting shared by the CLI and the CSV reporter.

All numeric output is written with a fixed number of significant digits
(``OUTPUT['significant_digits']``) so that repeated runs produce identical bytes.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import json
import math
from types import ModuleType
from typing import Any, Optional

import numpy as np

from .config_loader import config_value

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def _digits(config: Optional[ModuleType]) -> int:
    return int(config_value(config, 'OUTPUT', 'significant_digits'))

def format_number(value: Any, config: Optional[ModuleType] = None) -> str:
    """Render a number with the configured significant digits; integers and booleans unchanged."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    text = f"{value:.{_digits(config)}g}"
    # -0 and 0 print the same
    return "0" if text == "-0" else text

def round_significant(payload: Any, config: Optional[ModuleType] = None) -> Any:
    """Recursively round every float in a JSON-like payload to the configured significant digits."""
    if isinstance(payload, dict):
        return {key: round_significant(value, config) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [round_significant(value, config) for value in payload]
    if isinstance(payload, (bool, np.bool_)):
        return bool(payload)
    if isinstance(payload, (int, np.integer)):
        return int(payload)
    if isinstance(payload, (float, np.floating)):
        value = float(payload)
        if not math.isfinite(value):
            return None
        return float(f"{value:.{_digits(config)}g}") + 0.0
    return payload

def dumps_json(payload: Any, config: Optional[ModuleType] = None) -> str:
    """JSON text with rounded numbers and the configured indentation."""
    indent = config_value(config, 'OUTPUT', 'json_indent')
    return json.dumps(round_significant(payload, config), indent=indent, ensure_ascii=False)
