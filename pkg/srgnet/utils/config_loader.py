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
This module loads user configuration files and resolves configuration values.

A user configuration is a Python file shaped like `config/srgnet_config.py`.
It may define only the tables it wants to change; missing tables and missing
keys fall back to the packaged defaults.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import importlib.util
import sys
from pathlib import Path
from types import ModuleType
from typing import Any, Optional

from config import srgnet_config as default_config

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def load_config_from_path(config_path: str) -> ModuleType:
    """
    Dynamically load a Python configuration file from a given path.

    Args:
        config_path (str): The absolute or relative path to the Python config file.

    Returns:
        ModuleType: The loaded configuration module.
        
    Raises:
        FileNotFoundError: If the configuration file does not exist.
        ImportError: If the module cannot be created or executed.
    """
    config_file = Path(config_path).resolve()

    if not config_file.is_file():
        raise FileNotFoundError(f"Configuration file not found at: {config_file}")

    module_name = f"srgnet_user_config_{config_file.stem}"

    spec = importlib.util.spec_from_file_location(module_name, config_file)
    if spec is None or spec.loader is None:
        raise ImportError(f"Could not create module spec for {config_file}")

    config_module = importlib.util.module_from_spec(spec)

    # Registered so relative imports inside the config resolve
    sys.modules[module_name] = config_module

    try:
        spec.loader.exec_module(config_module)
    except Exception as e:
        del sys.modules[module_name]
        raise ImportError(f"Failed to load configuration from {config_file}: {e}") from e

    return config_module

def config_value(config: Optional[ModuleType], table: str, key: str) -> Any:
    """
    Look up ``config.<table>[key]``, falling back to the packaged default.

    Args:
        config: A loaded configuration module, or None for the defaults.
        table: Name of the mapping, e.g. ``"TOLERANCES"``.
        key: Entry in that mapping.

    Returns:
        The configured value.

    Raises:
        KeyError: If neither the given nor the default configuration defines the entry.
    """
    if config is not None:
        mapping = getattr(config, table, None)
        if mapping is not None and key in mapping:
            return mapping[key]
    return getattr(default_config, table)[key]
