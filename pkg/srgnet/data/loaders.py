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
Graph file ingestion.

This module reads and writes graph6 catalog files. The strict readers raise
the codec's exceptions so the CLI can report them; the ``*_safely`` variant
logs failures and returns None, which lets batch scans skip unreadable files.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..core.exceptions import Graph6Error, SrgNetError
from ..core.types import Graph
from .graph6 import parse_graph6, write_graph6_lines

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def load_graphs(path: PathLike) -> List[Graph]:
    """
    Read every graph in a graph6 file.

    Args:
        path: Path to a graph6 file (one graph per line).

    Returns:
        List[Graph]: The decoded graphs, in file order.

    Raises:
        FileNotFoundError: If the file does not exist.
        Graph6Error: If any line cannot be decoded, or the file holds no graph.
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise FileNotFoundError(f"Graph file not found: {file_path}")

    graphs = parse_graph6(file_path.read_bytes())
    if not graphs:
        raise Graph6Error(f"No graphs found in '{file_path}'")
    logger.info(f"Loaded {len(graphs)} graph(s) from '{file_path}'")
    return graphs

def load_graph(path: PathLike, index: int = 0) -> Graph:
    """Read the graph on line ``index`` (counting non-blank lines) of a graph6 file."""
    graphs = load_graphs(path)
    if not 0 <= index < len(graphs):
        raise Graph6Error(f"'{path}' holds {len(graphs)} graph(s); index {index} is out of range")
    return graphs[index]

def load_graphs_safely(path: PathLike) -> Optional[List[Graph]]:
    """
    Read a graph6 file, logging instead of raising.

    Returns:
        Optional[List[Graph]]: The graphs, or None if the file is missing or malformed.
    """
    try:
        return load_graphs(path)
    except FileNotFoundError as e:
        logger.error(str(e))
    except SrgNetError as e:
        logger.error(f"Could not decode '{path}': {e.code}: {e}")
    except OSError as e:
        logger.error(f"Error reading '{path}': {e}")
    return None

def save_graphs(path: PathLike, graphs: Iterable[Graph]) -> Path:
    """
    Write graphs to a graph6 file, creating parent directories as needed.

    Returns:
        Path: The written file.
    """
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_bytes(write_graph6_lines(graphs))
    logger.info(f"Wrote graph6 file '{file_path}'")
    return file_path
