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
Numeric oracles for ground-state entanglement.

`bipartite_entanglement` works on the full network: the ground state is
exp(-½ xᵀ W x) with W = V (default convention) or W = V^(1/2), and the
d-spectrum of a bipartition A|B is the set of singular values of
W_AA^(-1/2) W_AB W_BB^(-1/2). No stratification is involved, so it
checks every closed form independently.

`mehler_oracle` checks the single-sector law: it samples the two-mode wave
function on a grid and returns the squared singular values of the sampled
kernel, which must follow the geometric distribution (1 - t²) t^(2n).
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
from types import ModuleType
from typing import Iterable, Optional, Tuple

import numpy as np
from scipy import linalg
from scipy.special import entr

from ..core.exceptions import (
    DOutOfRangeError,
    EmptyOrFullSubsetError,
    GraphError,
    GridTooCoarseError,
    SingularBlockError,
)
from ..core.types import Convention, Graph, LogBase, Partition
from ..graphs.matrices import potential
from ..spectral.stratification import Stratification, stratify, strata_vertices
from ..utils.config_loader import config_value
from .schmidt import CouplingConfig, EntanglementReport, mode_entropy

logger = logging.getLogger(__name__)

# Strata on side A of each bipartition; side B is the complement
_SIDE_A_STRATA = {
    Partition.S1_VS_S23: (0,),
    Partition.S12_VS_S3: (0, 1),
    Partition.S13_VS_S2: (0, 2),
}

# ------------------------------------------------------------------------------------------------
# Exponent matrix and whitening
# ------------------------------------------------------------------------------------------------

def exponent_matrix(graph: Graph, coupling: CouplingConfig) -> np.ndarray:
    """Ground-state exponent W: V = I + 2gL, or its positive square root."""
    v = potential(graph, coupling.g).matrix
    if coupling.convention is Convention.PAPER:
        return np.array(v, dtype=float)
    eigenvalues, vectors = linalg.eigh(v)
    return (vectors * np.sqrt(eigenvalues)) @ vectors.T

def _inverse_sqrt(matrix: np.ndarray, floor: float) -> np.ndarray:
    eigenvalues, vectors = linalg.eigh(matrix)
    if eigenvalues[0] < floor:
        raise SingularBlockError(
            f"Diagonal block of the exponent matrix has eigenvalue {eigenvalues[0]:.3e} below {floor:.1e}"
        )
    return (vectors / np.sqrt(eigenvalues)) @ vectors.T

def _normalize_subset(graph: Graph, subset: Iterable[int]) -> Tuple[np.ndarray, np.ndarray]:
    side_a = np.array(sorted({int(v) for v in subset}), dtype=np.int64)
    if side_a.size and (side_a[0] < 0 or side_a[-1] >= graph.n):
        raise GraphError(f"Subset contains vertices outside 0..{graph.n - 1}")
    if side_a.size == 0 or side_a.size == graph.n:
        raise EmptyOrFullSubsetError(
            f"Side A must be a nonempty proper subset of the {graph.n} vertices, got {side_a.size} vertices"
        )
    side_b = np.setdiff1d(np.arange(graph.n), side_a)
    return side_a, side_b

# ------------------------------------------------------------------------------------------------
# Whitened-SVD oracle
# ------------------------------------------------------------------------------------------------

def whitened_spectrum(graph: Graph, subset_a: Iterable[int], coupling: CouplingConfig,
                      config: Optional[ModuleType] = None) -> np.ndarray:
    """
    Descending singular values of W_AA^(-1/2) W_AB W_BB^(-1/2).

    Values below the ``oracle_zero`` tolerance are reported as exactly zero.
    """
    side_a, side_b = _normalize_subset(graph, subset_a)
    w = exponent_matrix(graph, coupling)
    floor = config_value(config, 'TOLERANCES', 'whitening_floor')

    whitened = (
        _inverse_sqrt(w[np.ix_(side_a, side_a)], floor)
        @ w[np.ix_(side_a, side_b)]
        @ _inverse_sqrt(w[np.ix_(side_b, side_b)], floor)
    )
    spectrum = linalg.svdvals(whitened)
    spectrum[spectrum < config_value(config, 'TOLERANCES', 'oracle_zero')] = 0.0
    return np.sort(spectrum)[::-1]

def bipartite_entanglement(graph: Graph, subset_a: Iterable[int],
                           coupling: Optional[CouplingConfig] = None,
                           config: Optional[ModuleType] = None,
                           label: Optional[str] = None) -> EntanglementReport:
    """
    Entanglement between a vertex subset and its complement.

    Args:
        graph: The oscillator network.
        subset_a: Vertices on side A.
        coupling: Coupling and conventions; package defaults when omitted.
        config: Optional numerical configuration module.
        label: Description stored in the report; the sorted vertex list when omitted.

    Returns:
        EntanglementReport: One mode per vertex of the smaller side, by descending d.

    Raises:
        EmptyOrFullSubsetError: If side A is empty or the whole vertex set.
        DOutOfRangeError: If a singular value reaches 1 in floating point (g far too large for the oracle).
    """
    coupling = coupling or CouplingConfig.from_config(config)
    subset_a = sorted({int(v) for v in subset_a})
    spectrum = whitened_spectrum(graph, subset_a, coupling, config)
    try:
        modes = tuple(mode_entropy(d, coupling) for d in spectrum)
    except DOutOfRangeError as e:
        raise DOutOfRangeError(f"{e}; use the closed forms at this coupling (g={coupling.g:g})") from e

    report = EntanglementReport(
        partition=label or ",".join(str(v) for v in subset_a),
        g=coupling.g,
        modes=modes,
        log_base=coupling.log_base,
        convention=coupling.convention,
    )
    logger.debug(f"Oracle {report.partition} at g={coupling.g:g}: top d={spectrum[0]:.12g}, "
                 f"S={report.total_entropy:.12g}")
    return report

def strata_partition(strat: Stratification, label: "Partition | str") -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Vertex sets (A, B) of a strata bipartition, e.g. "12:3" gives A = Γ0 ∪ Γ1, B = Γ2."""
    partition = Partition.parse(label)
    if len(strat.strata) != 3:
        raise GraphError(f"Strata bipartitions need three strata, got {len(strat.strata)}")
    groups_a = _SIDE_A_STRATA[partition]
    groups_b = tuple(index for index in range(3) if index not in groups_a)
    return strata_vertices(strat, groups_a), strata_vertices(strat, groups_b)

def strata_entanglement(graph: Graph, partition: "Partition | str", root: int = 0,
                        coupling: Optional[CouplingConfig] = None,
                        config: Optional[ModuleType] = None) -> EntanglementReport:
    """`bipartite_entanglement` on the strata bipartition seen from ``root``."""
    partition = Partition.parse(partition)
    side_a, _ = strata_partition(stratify(graph, root), partition)
    return bipartite_entanglement(graph, side_a, coupling, config, label=partition.value)

# ------------------------------------------------------------------------------------------------
# Grid oracle for one sector
# ------------------------------------------------------------------------------------------------

def mehler_oracle(d: float, grid_halfwidth: Optional[float] = None, grid_points: Optional[int] = None,
                  config: Optional[ModuleType] = None) -> np.ndarray:
    """
    Schmidt coefficients of exp(-x²/2 - y²/2 - d·xy) from a sampled kernel.

    Args:
        d: Schmidt number, 0 <= d < 1.
        grid_halfwidth: Half-width of the square grid in units of the widest
            standard deviation 1/sqrt(1 - d) of the wave function.
        grid_points: Points per axis.
        config: Optional numerical configuration module (``MEHLER_GRID``).

    Returns:
        np.ndarray: Normalized squared singular values in descending order.

    Raises:
        DOutOfRangeError: If d is outside [0, 1).
        GridTooCoarseError: If the grid is narrower than the minimum half-width,
            or the top coefficient misses 2/(γ+1) by more than the tolerance.
    """
    d = float(d)
    if not 0.0 <= d < 1.0:
        raise DOutOfRangeError(f"Schmidt number must lie in [0, 1), got {d!r}")
    halfwidth = grid_halfwidth if grid_halfwidth is not None else config_value(config, 'MEHLER_GRID', 'halfwidth')
    points = int(grid_points if grid_points is not None else config_value(config, 'MEHLER_GRID', 'points'))
    if halfwidth < config_value(config, 'MEHLER_GRID', 'min_halfwidth'):
        raise GridTooCoarseError(f"Grid half-width {halfwidth} does not cover the wave function")

    extent = halfwidth / math.sqrt(1.0 - d)
    axis, step = np.linspace(-extent, extent, points, retstep=True)
    x, y = np.meshgrid(axis, axis, indexing='ij')
    kernel = np.exp(-0.5 * x * x - 0.5 * y * y - d * x * y) * step

    sigma = linalg.svdvals(kernel)
    weights = sigma ** 2
    coefficients = weights / weights.sum()

    expected_top = 2.0 / (mode_entropy(d).gamma + 1.0)
    deviation = abs(coefficients[0] - expected_top)
    logger.debug(f"Mehler grid d={d}: {points} points over ±{extent:.3g}, top deviation {deviation:.3e}")
    if deviation > config_value(config, 'MEHLER_GRID', 'top_coefficient_tolerance'):
        raise GridTooCoarseError(
            f"Top Schmidt coefficient {coefficients[0]:.8f} misses 2/(γ+1)={expected_top:.8f}; refine the grid"
        )
    return coefficients

def coefficient_entropy(coefficients: Iterable[float], log_base: LogBase = LogBase.NATURAL) -> float:
    """Shannon entropy -Σ p log p of a list of Schmidt coefficients."""
    entropy = float(np.sum(entr(np.asarray(list(coefficients), dtype=float))))
    if LogBase(log_base) is LogBase.BASE2:
        entropy /= math.log(2.0)
    return entropy
