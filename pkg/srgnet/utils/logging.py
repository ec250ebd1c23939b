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
Logging configuration for the SRG network analysis toolkit.

This module provides utilities for setting up logging with standard formatting
and handlers for file and diagnostic-stream output. Console output always goes
to stderr so that JSON and CSV written to stdout stay machine-readable.
"""

import logging
import sys

from ..core.constants import LOG_FILE

def _select_level(level: int, quiet: bool, verbose: bool) -> int:
    if verbose:
        return logging.DEBUG
    if quiet:
        return logging.ERROR
    return level

def configure_logging(level=logging.INFO, log_file=LOG_FILE, console_output=True):
    """
    Configure logging with both file and console output.
    
    Args:
        level (int): Logging level (default: logging.INFO)
        log_file (str): Path to log file (default: from LOG_FILE constant)
        console_output (bool): Whether to include console output (default: True)
        
    Returns:
        logging.Logger: Configured logger instance
    """
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    
    handlers = []
    
    file_handler = logging.FileHandler(log_file)
    file_handler.setFormatter(formatter)
    handlers.append(file_handler)
    
    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        handlers.append(console_handler)
    
    logging.basicConfig(
        level=level,
        handlers=handlers,
        force=True  # Force override any existing configuration
    )
    # Route OutOfRegimeWarning and friends through the same handlers
    logging.captureWarnings(True)
    
    return logging.getLogger(__name__)

def configure_console_only_logging(level=logging.INFO, quiet=False, verbose=False):
    """
    Configure logging with only diagnostic-stream output and simplified formatting.
    
    Used by the command-line interface.
    
    Args:
        level (int): Logging level (default: logging.INFO)
        quiet (bool): If True, suppress INFO and WARNING messages.
        verbose (bool): If True, emit DEBUG messages (numerical residuals). Wins over quiet.
        
    Returns:
        logging.Logger: Configured logger instance
    """
    logging.basicConfig(
        level=_select_level(level, quiet, verbose),
        format='%(levelname)s: %(message)s',
        stream=sys.stderr,
        force=True  # Force override any existing configuration
    )
    logging.captureWarnings(True)
    
    return logging.getLogger(__name__)
