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
Batch drivers for the SRG network analysis.

This module provides coupling sweeps of the entanglement of one graph and
signature scans over graph6 catalogs spread across several files.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import time
from dataclasses import dataclass
from functools import partial
from types import ModuleType
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core.exceptions import CouplingDomainError, SignatureError
from .core.types import Graph, Partition
from .data.loaders import load_graphs_safely
from .entanglement.oracle import bipartite_entanglement, strata_entanglement
from .entanglement.schmidt import CouplingConfig, EntanglementReport
from .signature.a12 import ScanReport, scan_catalog
from .utils.config_loader import config_value
from .utils.parallel import ordered_map

logger = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogScan:
    """A scan over several files, with one label per scanned graph ("path:line")."""
    report: ScanReport
    labels: Tuple[str, ...]
    skipped: Tuple[str, ...]
    elapsed: float

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def coupling_grid(g_min: float, g_max: float, points: int) -> np.ndarray:
    """
    Logarithmic grid of couplings from ``g_min`` to ``g_max`` inclusive.

    Raises:
        CouplingDomainError: If g_min <= 0 or g_max < g_min.
        ValueError: If points < 1.
    """
    if g_min <= 0 or g_max < g_min:
        raise CouplingDomainError(f"Sweep needs 0 < g_min <= g_max, got g_min={g_min}, g_max={g_max}")
    if points < 1:
        raise ValueError(f"Sweep needs at least one point, got {points}")
    if points == 1:
        return np.array([float(g_min)])
    return np.geomspace(g_min, g_max, points)

def entanglement_report(graph: Graph, g: float, partition: Optional["Partition | str"] = None,
                        subset: Optional[Iterable[int]] = None, root: int = 0,
                        coupling: Optional[CouplingConfig] = None,
                        config: Optional[ModuleType] = None) -> EntanglementReport:
    """
    Entanglement of a strata bipartition or of an explicit vertex subset at coupling g.

    Exactly one of ``partition`` and ``subset`` must be given.
    """
    if (partition is None) == (subset is None):
        raise ValueError("Give either a strata partition or a vertex subset")
    template = coupling or CouplingConfig.from_config(config)
    coupling = CouplingConfig(g=g, log_base=template.log_base, convention=template.convention)
    if subset is not None:
        return bipartite_entanglement(graph, subset, coupling, config)
    return strata_entanglement(graph, partition, root, coupling, config)

def sweep(graph: Graph, partition: Optional["Partition | str"] = None, g_min: Optional[float] = None,
          g_max: Optional[float] = None, points: Optional[int] = None, subset: Optional[Iterable[int]] = None,
          root: int = 0, coupling: Optional[CouplingConfig] = None, config: Optional[ModuleType] = None,
          workers: Optional[int] = None) -> List[EntanglementReport]:
    """
    Entanglement reports over a logarithmic coupling grid.

    Args:
        graph: The oscillator network.
        partition: Strata bipartition label ("1:23", "12:3", "13:2").
        g_min, g_max, points: Grid; ``SWEEP_DEFAULTS`` where omitted.
        subset: Explicit side-A vertices instead of a strata bipartition.
        root: Root of the stratification.
        coupling: Supplies log base and convention; its g is ignored.
        config: Optional numerical configuration module.
        workers: Worker threads, one coupling per task.

    Returns:
        List[EntanglementReport]: One report per coupling, g ascending.
    """
    grid = coupling_grid(
        g_min if g_min is not None else config_value(config, 'SWEEP_DEFAULTS', 'g_min'),
        g_max if g_max is not None else config_value(config, 'SWEEP_DEFAULTS', 'g_max'),
        int(points if points is not None else config_value(config, 'SWEEP_DEFAULTS', 'points')),
    )
    subset = None if subset is None else tuple(subset)
    task = partial(entanglement_report, graph, partition=partition, subset=subset, root=root,
                   coupling=coupling, config=config)

    start_time = time.time()
    reports = ordered_map(lambda g: task(float(g)), grid, workers)
    label = reports[0].partition if reports else partition
    logger.info(f"Swept {label} over {len(grid)} couplings in [{grid[0]:g}, {grid[-1]:g}] "
                f"in {time.time() - start_time:.2f} seconds")
    return reports

def scan_files(paths: Sequence[str], tol: Optional[float] = None, config: Optional[ModuleType] = None,
               workers: Optional[int] = None) -> CatalogScan:
    """
    Load graph6 catalogs and partition all their graphs into signature classes.

    Files that cannot be read are logged and skipped.

    Raises:
        SignatureError: If no graph could be loaded.
        MixedParametersError: If the loaded graphs do not share one parameter set.
    """
    start_time = time.time()
    total_files = len(paths)
    logger.info(f"[*] Scanning {total_files} catalog file(s)")

    graphs: List[Graph] = []
    labels: List[str] = []
    skipped: List[str] = []
    for index, path in enumerate(paths, 1):
        logger.info(f"File {index}/{total_files}: {path}")
        loaded = load_graphs_safely(path)
        if loaded is None:
            logger.error(f"[-] Skipping {path}")
            skipped.append(str(path))
            continue
        graphs.extend(loaded)
        labels.extend(f"{path}:{line}" for line in range(len(loaded)))

    if not graphs:
        raise SignatureError("No graphs could be loaded from the given catalog files")

    report = scan_catalog(graphs, tol, config, workers)
    elapsed = time.time() - start_time

    logger.info("=" * 60)
    logger.info(f"[+] {len(graphs)} graph(s) in {len(report.classes)} signature class(es)")
    logger.info(f"[*] Total processing time: {elapsed:.2f} seconds")
    logger.info("=" * 60)
    return CatalogScan(report=report, labels=tuple(labels), skipped=tuple(skipped), elapsed=elapsed)
