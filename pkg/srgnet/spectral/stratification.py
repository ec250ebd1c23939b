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
Stratification-basis reduction of SRG adjacency matrices.

Seen from a root vertex o, a connected SRG splits into three strata:
Γ0 = {o}, Γ1 = the kappa neighbours of o and Γ2 = the n - kappa - 1 remaining
vertices. In that ordering

        | 0    1ᵀ    0   |
    A = | 1    A11   A12 |
        | 0    A12ᵀ  A22 |

and the SRG identities turn A into a direct sum of
  - one 3x3 first-stratum block on the uniform stratum vectors,
  - 2x2 blocks [[l1, sqrt(l12)], [sqrt(l12), l2]] pairing a Γ1 mode with a Γ2 mode,
    with l1 + l2 = lambda - mu and l12 - l1*l2 = kappa - mu,
  - 1x1 singlets, each equal to one of the restricted eigenvalues r, s.

The pairing comes from the SVD of A12 after deflating the all-ones vectors. When
singular values are degenerate the SVD bases are rotated together so that the
projected A11 and A22 are diagonal as well.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass, field
from types import ModuleType
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy import linalg

from ..core.exceptions import (
    BlockSumViolationError,
    DisconnectedGraphError,
    JointDiagonalizationError,
    NegativeDiscriminantError,
    NotThreeStrataError,
    RootOutOfRangeError,
    StratificationError,
)
from ..core.types import Graph, SrgParams
from ..data.validators import srg_params
from ..graphs.matrices import srg_eigenvalues
from ..utils.config_loader import config_value

logger = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Stratification:
    """Distance classes Γ0, Γ1, ... of a connected graph seen from ``root``."""
    root: int
    strata: Tuple[Tuple[int, ...], ...]

    @property
    def valencies(self) -> Tuple[int, ...]:
        return tuple(len(stratum) for stratum in self.strata)


@dataclass(frozen=True, eq=False)
class StratifiedBlocks:
    """A11 (Γ1 x Γ1), A12 (Γ1 x Γ2) and A22 (Γ2 x Γ2) of an SRG, as integer matrices."""
    a11: np.ndarray
    a12: np.ndarray
    a22: np.ndarray
    params: SrgParams


@dataclass(frozen=True, eq=False)
class FirstStratumBlock:
    """Adjacency matrix restricted to the uniform vectors of Γ0, Γ1 and Γ2."""
    m: np.ndarray

    @property
    def lambda1(self) -> float:
        return float(self.m[1, 1])

    @property
    def lambda2(self) -> float:
        return float(self.m[2, 2])

    @property
    def lambda12(self) -> float:
        return float(self.m[1, 2] ** 2)


@dataclass(frozen=True)
class TwoByTwoBlock:
    """Pairing of a Γ1 mode (self-adjacency lambda1) with a Γ2 mode (lambda2)."""
    lambda1: float
    lambda2: float
    lambda12: float
    multiplicity: int = 1

    @property
    def matrix(self) -> np.ndarray:
        coupling = math.sqrt(self.lambda12)
        return np.array([[self.lambda1, coupling], [coupling, self.lambda2]])

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


@dataclass(frozen=True)
class BlockDiagonalization:
    """Block form of A in the stratification basis."""
    params: SrgParams
    first: FirstStratumBlock = field(compare=False)
    pairs: Tuple[TwoByTwoBlock, ...]
    singlets2: Tuple[float, ...]
    singlets3: Tuple[float, ...]

    def spectrum(self) -> np.ndarray:
        """All eigenvalues of A, assembled block by block, in ascending order."""
        values = list(np.linalg.eigvalsh(self.first.m))
        for pair in self.pairs:
            values.extend(np.repeat(pair.eigenvalues(), pair.multiplicity))
        values.extend(self.singlets2)
        values.extend(self.singlets3)
        return np.sort(np.asarray(values, dtype=float))

# ------------------------------------------------------------------------------------------------
# Stratification
# ------------------------------------------------------------------------------------------------

def stratify(graph: Graph, root: int) -> Stratification:
    """
    Partition the vertices by graph distance from ``root`` (breadth-first layers).

    Any connected graph is accepted; SRGs always produce three strata.

    Raises:
        RootOutOfRangeError: If root is not a vertex.
        DisconnectedGraphError: If the graph is not connected.
    """
    if not 0 <= int(root) < graph.n:
        raise RootOutOfRangeError(f"Root {root} is not a vertex of a graph on {graph.n} vertices")
    nx_graph = graph.to_networkx()
    if not nx.is_connected(nx_graph):
        raise DisconnectedGraphError("Stratification needs a connected graph")

    layers = nx.bfs_layers(nx_graph, int(root))
    return Stratification(root=int(root), strata=tuple(tuple(sorted(layer)) for layer in layers))

def _check(condition: bool, identity: str, params: SrgParams) -> None:
    if not condition:
        raise BlockSumViolationError(f"{identity} fails for {params}; the input is not an SRG with these parameters")

def extract_blocks(graph: Graph, strat: Stratification,
                   params: Optional[SrgParams] = None) -> StratifiedBlocks:
    """
    Cut A11, A12 and A22 out of the adjacency matrix and check the block identities.

    Args:
        graph: The SRG.
        strat: Its stratification from some root.
        params: SRG parameters; verified from the graph when omitted.

    Returns:
        StratifiedBlocks: The three blocks with their parameters.

    Raises:
        NotThreeStrataError: If the stratification does not have three strata.
        BlockSumViolationError: If a row/column sum or quadratic identity fails.
    """
    if len(strat.strata) != 3:
        raise NotThreeStrataError(f"Expected 3 strata, got {len(strat.strata)} (sizes {strat.valencies})")
    if params is None:
        params = srg_params(graph)

    _, first, second = (np.asarray(stratum, dtype=np.int64) for stratum in strat.strata)
    a = graph.adjacency
    a11 = a[np.ix_(first, first)]
    a12 = a[np.ix_(first, second)]
    a22 = a[np.ix_(second, second)]

    n, kappa, lam, mu = params.as_tuple()
    _check(strat.valencies == (1, kappa, n - kappa - 1), "stratum sizes (1, kappa, n-kappa-1)", params)
    _check(np.all(a12.sum(axis=0) == mu), "A12 column sums = mu", params)
    _check(np.all(a11.sum(axis=1) == lam), "A11 row sums = lambda", params)
    _check(np.all(a22.sum(axis=1) == kappa - mu), "A22 row sums = kappa - mu", params)
    _check(np.all(a12.sum(axis=1) == kappa - lam - 1), "A12 row sums = kappa - lambda - 1", params)

    i1, j1 = np.eye(kappa, dtype=np.int64), np.ones((kappa, kappa), dtype=np.int64)
    i2, j2 = np.eye(n - kappa - 1, dtype=np.int64), np.ones((n - kappa - 1, n - kappa - 1), dtype=np.int64)
    _check(
        np.array_equal(a12.T @ a12 + a22 @ a22, (kappa - mu) * i2 + mu * j2 + (lam - mu) * a22),
        "A12ᵀA12 + A22² = (kappa-mu)I + mu J + (lambda-mu)A22", params,
    )
    _check(
        np.array_equal(a11 @ a11 + a12 @ a12.T, (kappa - mu) * i1 + (mu - 1) * j1 + (lam - mu) * a11),
        "A11² + A12A12ᵀ = (kappa-mu)I + (mu-1)J + (lambda-mu)A11", params,
    )
    _check(
        np.array_equal(a11 @ a12 + a12 @ a22, (lam - mu) * a12 + mu * np.ones_like(a12)),
        "A11A12 + A12A22 = (lambda-mu)A12 + mu J", params,
    )
    return StratifiedBlocks(a11=a11, a12=a12, a22=a22, params=params)

def stratified_blocks(graph: Graph, root: int = 0) -> StratifiedBlocks:
    """Verify, stratify and cut in one call."""
    params = srg_params(graph)
    return extract_blocks(graph, stratify(graph, root), params)

# ------------------------------------------------------------------------------------------------
# First stratum
# ------------------------------------------------------------------------------------------------

def first_stratum_block(params: SrgParams) -> FirstStratumBlock:
    """
    Analytic 3x3 block on the uniform vectors of Γ0, Γ1, Γ2:

        [[0,        sqrt(k),               0                 ],
         [sqrt(k),  lambda,                mu sqrt(n-k-1)/sqrt(k)],
         [0,        mu sqrt(n-k-1)/sqrt(k), k - mu            ]]
    """
    kappa, lam, mu = params.kappa, params.lam, params.mu
    coupling = mu * math.sqrt(params.nonadjacent) / math.sqrt(kappa)
    m = np.array([
        [0.0, math.sqrt(kappa), 0.0],
        [math.sqrt(kappa), float(lam), coupling],
        [0.0, coupling, float(kappa - mu)],
    ])
    m.setflags(write=False)
    return FirstStratumBlock(m)

def numeric_first_stratum_block(blocks: StratifiedBlocks) -> np.ndarray:
    """<phi_i|A|phi_j> computed from the blocks, with phi_i the normalized uniform vector of Γi."""
    kappa, far = blocks.a12.shape
    e1 = np.full(kappa, 1.0 / math.sqrt(kappa))
    e2 = np.full(far, 1.0 / math.sqrt(far))
    # A phi_0 = sqrt(kappa) phi_1
    return np.array([
        [0.0, math.sqrt(kappa), 0.0],
        [math.sqrt(kappa), e1 @ blocks.a11 @ e1, e1 @ blocks.a12 @ e2],
        [0.0, e2 @ blocks.a12.T @ e1, e2 @ blocks.a22 @ e2],
    ])

# ------------------------------------------------------------------------------------------------
# Block diagonalization
# ------------------------------------------------------------------------------------------------

def _complement_basis(size: int) -> np.ndarray:
    """Orthonormal basis of the complement of the all-ones vector (size x size-1)."""
    return linalg.null_space(np.ones((1, size)))

def _full_svd(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """SVD with square left/right factors, tolerating empty matrices."""
    rows, cols = matrix.shape
    if matrix.size == 0:
        return np.eye(rows), np.zeros(0), np.eye(cols)
    left, sigma, right_t = linalg.svd(matrix, full_matrices=True)
    return left, sigma, right_t.T

def group_descending(values: np.ndarray, relative: float) -> List[np.ndarray]:
    """Split a descending array into runs whose consecutive gaps are relatively small."""
    groups, start = [], 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > relative * max(abs(values[i - 1]), 1.0):
            groups.append(np.arange(start, i))
            start = i
    return groups

def _eigvalsh(matrix: np.ndarray) -> np.ndarray:
    if matrix.size == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(matrix)

def _snap(values: np.ndarray, r: float, s: float, tolerance: float, side: str) -> Tuple[float, ...]:
    snapped = []
    for value in values:
        if abs(value - r) <= tolerance:
            snapped.append(r)
        elif abs(value - s) <= tolerance:
            snapped.append(s)
        else:
            raise JointDiagonalizationError(
                f"Decoupled {side} mode has eigenvalue {value:.12g}, which is neither r={r:.12g} nor s={s:.12g}"
            )
    return tuple(sorted(snapped, reverse=True))

def _check_pair(pair: TwoByTwoBlock, params: SrgParams, tolerance: float) -> None:
    sum_residual = abs(pair.lambda1 + pair.lambda2 - (params.lam - params.mu))
    product_residual = abs(pair.lambda12 - pair.lambda1 * pair.lambda2 - (params.kappa - params.mu))
    logger.debug(f"Pair {pair}: sum residual {sum_residual:.3e}, product residual {product_residual:.3e}")
    if sum_residual > tolerance or product_residual > tolerance:
        raise JointDiagonalizationError(
            f"Paired block {pair} violates lambda1+lambda2=lambda-mu or lambda12-lambda1*lambda2=kappa-mu"
        )

def _assembled_adjacency(blocks: StratifiedBlocks) -> np.ndarray:
    kappa, far = blocks.a12.shape
    n = 1 + kappa + far
    a = np.zeros((n, n))
    a[0, 1:1 + kappa] = a[1:1 + kappa, 0] = 1.0
    a[1:1 + kappa, 1:1 + kappa] = blocks.a11
    a[1:1 + kappa, 1 + kappa:] = blocks.a12
    a[1 + kappa:, 1:1 + kappa] = blocks.a12.T
    a[1 + kappa:, 1 + kappa:] = blocks.a22
    return a

def block_diagonalize(blocks: StratifiedBlocks, config: Optional[ModuleType] = None) -> BlockDiagonalization:
    """
    Compute the stratification-basis block form of A.

    Steps: check the numeric first-stratum projection against the analytic
    block; deflate the all-ones vectors of Γ1 and Γ2; take the SVD of the
    deflated A12; inside every multiplet of equal singular values rotate both
    bases by the eigenbasis of the projected A11 and check that the projected
    A22 comes out diagonal; diagonalize A11 (A22) on the left (right) kernel to
    obtain the singlets.

    Args:
        blocks: Output of `extract_blocks`.
        config: Optional numerical configuration module.

    Returns:
        BlockDiagonalization: First block, pairs with multiplicities and singlets.

    Raises:
        BlockSumViolationError: If the first-stratum projection does not match.
        JointDiagonalizationError: If any residual exceeds its tolerance.
    """
    def tol(key: str) -> float:
        return config_value(config, 'TOLERANCES', key)

    params = blocks.params
    kappa, far = params.kappa, params.nonadjacent
    spectrum = srg_eigenvalues(params)

    first = first_stratum_block(params)
    residual = float(np.max(np.abs(numeric_first_stratum_block(blocks) - first.m)))
    logger.debug(f"First-stratum block residual {residual:.3e}")
    if residual > tol('block_match'):
        raise BlockSumViolationError(f"First-stratum projection differs from the analytic block by {residual:.3e}")

    q1, q2 = _complement_basis(kappa), _complement_basis(far)
    b11 = q1.T @ blocks.a11 @ q1
    b12 = q1.T @ blocks.a12 @ q2
    b22 = q2.T @ blocks.a22 @ q2

    left, sigma, right = _full_svd(b12)
    # the Perron singular value of A12 bounds every other one
    reference = math.sqrt(params.mu * (kappa - params.lam - 1))
    rank = int(np.count_nonzero(sigma > tol('kernel_relative') * reference))

    pairs: List[TwoByTwoBlock] = []
    for group in group_descending(sigma[:rank], tol('multiplicity_grouping')):
        u, w = left[:, group], right[:, group]
        lambda1s, rotation = np.linalg.eigh(u.T @ b11 @ u)
        u, w = u @ rotation, w @ rotation
        projected = w.T @ b22 @ w
        off_diagonal = float(np.max(np.abs(projected - np.diag(np.diag(projected)))))
        logger.debug(f"Multiplet sigma={sigma[group[0]]:.12g} x{len(group)}: A22 off-diagonal residual {off_diagonal:.3e}")
        if off_diagonal > tol('joint_diagonal'):
            raise JointDiagonalizationError(
                f"Projected A22 is not diagonal in the multiplet sigma={sigma[group[0]]:.12g} (residual {off_diagonal:.3e})"
            )
        lambda2s = np.diag(projected)
        lambda12 = float(np.mean(sigma[group] ** 2))

        # lambda1 may still take distinct values inside one multiplet
        order = np.argsort(-lambda1s)
        for cluster in group_descending(lambda1s[order], tol('pair_constraint')):
            chosen = order[cluster]
            pair = TwoByTwoBlock(
                lambda1=float(np.mean(lambda1s[chosen])),
                lambda2=float(np.mean(lambda2s[chosen])),
                lambda12=lambda12,
                multiplicity=len(chosen),
            )
            _check_pair(pair, params, tol('pair_constraint'))
            pairs.append(pair)

    kernel_left, kernel_right = left[:, rank:], right[:, rank:]
    singlets2 = _snap(_eigvalsh(kernel_left.T @ b11 @ kernel_left),
                      spectrum.r, spectrum.s, tol('singlet_snap'), "stratum-2")
    singlets3 = _snap(_eigvalsh(kernel_right.T @ b22 @ kernel_right),
                      spectrum.r, spectrum.s, tol('singlet_snap'), "stratum-3")

    pairs.sort(key=lambda p: (-p.lambda12, -p.lambda1))
    result = BlockDiagonalization(
        params=params, first=first, pairs=tuple(pairs), singlets2=singlets2, singlets3=singlets3,
    )

    paired = sum(pair.multiplicity for pair in pairs)
    if 1 + paired + len(singlets2) != kappa or 1 + paired + len(singlets3) != far:
        raise JointDiagonalizationError("Mode counts do not add up to the stratum sizes")

    dense = np.linalg.eigvalsh(_assembled_adjacency(blocks))
    mismatch = float(np.max(np.abs(dense - result.spectrum())))
    logger.debug(f"Block spectrum vs dense spectrum residual {mismatch:.3e}")
    if mismatch > tol('spectrum_match'):
        raise JointDiagonalizationError(f"Block spectra differ from the spectrum of A by {mismatch:.3e}")

    logger.info(
        f"Block-diagonalized {params}: {len(pairs)} distinct pair block(s) covering {paired} mode pair(s), "
        f"{len(singlets2)}+{len(singlets3)} singlets"
    )
    return result

# ------------------------------------------------------------------------------------------------
# Paired blocks from their coupling
# ------------------------------------------------------------------------------------------------

def pair_from_lambda12(params: SrgParams, lambda12: float) -> Tuple[float, float]:
    """
    Diagonal entries of the paired block with squared coupling ``lambda12``.

    Solves z^2 - (lambda - mu) z + (lambda12 - kappa + mu) = 0.

    Returns:
        Tuple[float, float]: (lambda1, lambda2) with lambda1 >= lambda2.

    Raises:
        NegativeDiscriminantError: If no real pair has this coupling.
    """
    if lambda12 <= 0:
        raise StratificationError(f"lambda12 must be positive, got {lambda12}")
    trace = params.lam - params.mu
    discriminant = trace ** 2 - 4.0 * (lambda12 - params.kappa + params.mu)
    if discriminant < 0:
        if discriminant < -1e-12 * max(1.0, trace ** 2):
            raise NegativeDiscriminantError(
                f"No paired block of {params} has lambda12={lambda12} (discriminant {discriminant:.6g})"
            )
        discriminant = 0.0
    root = math.sqrt(discriminant)
    return 0.5 * (trace + root), 0.5 * (trace - root)

def strata_vertices(strat: Stratification, groups: Sequence[int]) -> Tuple[int, ...]:
    """Sorted vertices of the strata with the given indices (0 = root)."""
    return tuple(sorted(v for index in groups for v in strat.strata[index]))
