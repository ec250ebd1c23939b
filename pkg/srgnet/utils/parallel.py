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
Worker-count resolution and an order-preserving parallel map.

Per-root signatures, per-graph scans and per-coupling sweeps are independent
pure computations over immutable inputs, so a thread pool with an ordered
``map`` gives deterministic output without any coordination. numpy and scipy
release the GIL inside their dense kernels.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import os
from multiprocessing.pool import ThreadPool
from typing import Callable, Iterable, List, Optional, TypeVar

from ..core.constants import THREADS_ENV_VAR

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def resolve_workers(requested: Optional[int] = None) -> int:
    """
    Decide how many workers to use.

    Args:
        requested: Explicit worker count. None defers to the SRGNET_THREADS
            environment variable; 0 (from either source) means one worker per CPU.

    Returns:
        int: A positive worker count.
    """
    if requested is None:
        raw = os.environ.get(THREADS_ENV_VAR, "0").strip() or "0"
        try:
            requested = int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer {THREADS_ENV_VAR}={raw!r}")
            requested = 0
    if requested <= 0:
        return os.cpu_count() or 1
    return requested

def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply ``func`` to every item, possibly in parallel, returning results in input order.

    Exceptions raised by ``func`` propagate to the caller unchanged.
    """
    items = list(items)
    count = min(resolve_workers(workers), len(items))
    if count <= 1:
        return [func(item) for item in items]

    logger.debug(f"Dispatching {len(items)} tasks to {count} workers")
    with ThreadPool(count) as pool:
        return pool.map(func, items)
