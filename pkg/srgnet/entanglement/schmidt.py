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
Schmidt numbers, squeezing parameters and entropies of two-mode sectors.

A two-mode Gaussian wave function exp(-x²/2 - y²/2 - d·xy) has Schmidt
coefficients (1 - t²) t^(2n) with t² = (γ - 1)/(γ + 1), where γ = 1/sqrt(1 - d²).
Its von Neumann entropy is

    S = ((γ+1)/2) log((γ+1)/2) - ((γ-1)/2) log((γ-1)/2).

On an SRG every sector that couples the strata reduces to such a two-mode
problem. This module holds the reduction (`schur_reduce`), the γ/S pipeline
(`mode_entropy`) and the closed forms of d for the first-stratum sector
(`closed_form_schmidt`) and for the paired blocks (`block_schmidt`).

Closed forms are evaluated in their V-consistent form by default. Passing
``verbatim=True`` evaluates the printed variants of the 13:2 and paired-block
formulas, which disagree with the potential V = I + 2gL and are kept for
discrepancy reporting only.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass
from types import ModuleType
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg
from scipy.special import xlogy

from ..core.exceptions import DOutOfRangeError, SingularBlockError
from ..core.types import (
    Convention,
    EntanglementReportPayload,
    LogBase,
    ModePayload,
    Partition,
    SrgParams,
)
from ..graphs.matrices import check_coupling
from ..spectral.stratification import BlockDiagonalization, TwoByTwoBlock, first_stratum_block
from ..utils.config_loader import config_value

logger = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class CouplingConfig:
    """
    Coupling strength plus the two conventions that change reported numbers.

    Args:
        g: Coupling strength between connected oscillators, g >= 0.
        log_base: Entropy unit, nats (default) or bits.
        convention: Ground-state exponent W = V (default) or W = V^(1/2).

    Raises:
        CouplingDomainError: If g is negative.
    """
    g: float = 1.0
    log_base: LogBase = LogBase.NATURAL
    convention: Convention = Convention.PAPER

    def __post_init__(self):
        object.__setattr__(self, 'g', check_coupling(self.g))
        object.__setattr__(self, 'log_base', LogBase(self.log_base))
        object.__setattr__(self, 'convention', Convention(self.convention))

    @classmethod
    def from_config(cls, config: Optional[ModuleType] = None, g: Optional[float] = None) -> "CouplingConfig":
        """Defaults from ``ENTANGLEMENT_DEFAULTS``, with an optional explicit g."""
        return cls(
            g=config_value(config, 'ENTANGLEMENT_DEFAULTS', 'g') if g is None else g,
            log_base=config_value(config, 'ENTANGLEMENT_DEFAULTS', 'log_base'),
            convention=config_value(config, 'ENTANGLEMENT_DEFAULTS', 'convention'),
        )


@dataclass(frozen=True)
class ModeEntanglement:
    """One two-mode sector: Schmidt number d, γ = 1/sqrt(1-d²) and entropy S."""
    d: float
    gamma: float
    entropy: float

    @property
    def t_squared(self) -> float:
        """Ratio of consecutive Schmidt coefficients, (γ-1)/(γ+1)."""
        return (self.gamma - 1.0) / (self.gamma + 1.0)

    def to_dict(self) -> ModePayload:
        return {'d': self.d, 'gamma': self.gamma, 'entropy': self.entropy}


@dataclass(frozen=True)
class EntanglementReport:
    """Entanglement across one bipartition, mode by mode."""
    partition: str
    g: float
    modes: Tuple[ModeEntanglement, ...]
    log_base: LogBase = LogBase.NATURAL
    convention: Convention = Convention.PAPER

    @property
    def total_entropy(self) -> float:
        return float(math.fsum(mode.entropy for mode in self.modes))

    @property
    def d_spectrum(self) -> Tuple[float, ...]:
        return tuple(mode.d for mode in self.modes)

    def to_dict(self) -> EntanglementReportPayload:
        return {
            'partition': self.partition,
            'g': self.g,
            'log_base': self.log_base.value,
            'convention': self.convention.value,
            'modes': [mode.to_dict() for mode in self.modes],
            'total_entropy': self.total_entropy,
        }

# ------------------------------------------------------------------------------------------------
# Schur complement
# ------------------------------------------------------------------------------------------------

def schur_reduce(v11: np.ndarray, v12: np.ndarray, v22: np.ndarray) -> np.ndarray:
    """
    Eliminate the second group of variables from a quadratic form.

    Args:
        v11: p x p block kept.
        v12: p x q coupling block.
        v22: q x q block eliminated, positive definite.

    Returns:
        np.ndarray: The symmetric p x p Schur complement v11 - v12 v22⁻¹ v12ᵀ.

    Raises:
        SingularBlockError: If v22 is not positive definite.
    """
    v11 = np.atleast_2d(np.asarray(v11, dtype=float))
    v22 = np.atleast_2d(np.asarray(v22, dtype=float))
    v12 = np.asarray(v12, dtype=float).reshape(v11.shape[0], v22.shape[0])
    if v22.size == 0:
        return v11.copy()
    try:
        factor = linalg.cho_factor(v22)
    except linalg.LinAlgError as e:
        raise SingularBlockError(f"Eliminated block is not positive definite: {e}") from e
    reduced = v11 - v12 @ linalg.cho_solve(factor, v12.T)
    return 0.5 * (reduced + reduced.T)

# ------------------------------------------------------------------------------------------------
# γ and entropy
# ------------------------------------------------------------------------------------------------

def entropy_from_gamma(gamma: float, log_base: LogBase = LogBase.NATURAL) -> float:
    """S = ((γ+1)/2) log((γ+1)/2) - ((γ-1)/2) log((γ-1)/2), zero at γ = 1."""
    upper, lower = 0.5 * (gamma + 1.0), 0.5 * (gamma - 1.0)
    entropy = float(xlogy(upper, upper) - xlogy(lower, lower))
    entropy = max(entropy, 0.0)
    if LogBase(log_base) is LogBase.BASE2:
        entropy /= math.log(2.0)
    return entropy

def _mode(d: float, one_minus_d2: float, log_base: LogBase) -> ModeEntanglement:
    gamma = 1.0 / math.sqrt(one_minus_d2)
    return ModeEntanglement(d=float(d), gamma=gamma, entropy=entropy_from_gamma(gamma, log_base))

def mode_entropy(d: float, coupling: Optional[CouplingConfig] = None) -> ModeEntanglement:
    """
    γ and entropy of a sector with Schmidt number ``d``.

    Args:
        d: Schmidt number, 0 <= d < 1. Negative values are read as |d|.
        coupling: Supplies the log base; nats when omitted.

    Returns:
        ModeEntanglement: d, γ and S.

    Raises:
        DOutOfRangeError: If |d| >= 1 or d is not finite; such a sector is not normalizable.
    """
    d = abs(float(d))
    if not math.isfinite(d) or d >= 1.0:
        raise DOutOfRangeError(f"Schmidt number must lie in [0, 1), got {d!r}")
    log_base = coupling.log_base if coupling is not None else LogBase.NATURAL
    return _mode(d, (1.0 - d) * (1.0 + d), log_base)

def schmidt_coefficients(d: float, terms: int) -> np.ndarray:
    """First ``terms`` Schmidt coefficients (1 - t²) t^(2n) of a sector with Schmidt number d."""
    mode = mode_entropy(d)
    ratio = mode.t_squared
    return (1.0 - ratio) * ratio ** np.arange(terms)

# ------------------------------------------------------------------------------------------------
# First-stratum closed forms
# ------------------------------------------------------------------------------------------------

def first_stratum_potential(params: SrgParams, g: float) -> np.ndarray:
    """V = I + 2gL on the uniform stratum vectors: (1 + 2gκ) I - 2g M, M the first-stratum block."""
    g = check_coupling(g)
    return (1.0 + 2.0 * g * params.kappa) * np.eye(3) - 2.0 * g * first_stratum_block(params).m

def closed_form_schmidt(params: SrgParams, g: float, partition: "Partition | str",
                        verbatim: bool = False) -> float:
    """
    Schmidt number of the first-stratum sector for a strata bipartition.

    Args:
        params: SRG parameters (n, κ, λ, μ).
        g: Coupling strength, g >= 0.
        partition: "1:23", "12:3" or "13:2".
        verbatim: For "13:2" only, evaluate the printed variant whose first
            term has κ² in place of κ. That value exceeds 1 at large g.

    Returns:
        float: The magnitude of d.

    Raises:
        CouplingDomainError: If g is negative.
    """
    g = check_coupling(g)
    partition = Partition.parse(partition)
    n, kappa, lam, mu = params.as_tuple()
    if g == 0.0:
        return 0.0

    if partition is Partition.S1_VS_S23:
        inner = (1 + 2 * g * mu) * (1 + 2 * g * (kappa - lam)) - 4 * g * g * mu * (kappa - lam - 1)
        return (2.0 * math.sqrt(kappa) * math.sqrt(1 + 2 * g * mu) * g
                / (math.sqrt(1 + 2 * g * kappa) * math.sqrt(inner)))

    if partition is Partition.S12_VS_S3:
        inner = (1 + 2 * g * kappa) * (1 + 2 * g * (kappa - lam)) - 4 * g * g * kappa
        return (2.0 * mu * math.sqrt(n - kappa - 1) * math.sqrt(1 + 2 * g * kappa) * g
                / (math.sqrt(kappa) * math.sqrt(1 + 2 * g * mu) * math.sqrt(inner)))

    first = kappa ** 2 if verbatim else kappa
    d2 = (4 * g * g * first / ((1 + 2 * g * kappa) * (1 + 2 * g * (kappa - lam)))
          + 4 * g * g * mu * (kappa - lam - 1) / ((1 + 2 * g * mu) * (1 + 2 * g * (kappa - lam))))
    return math.sqrt(d2)

def _potential_determinant(params: SrgParams, g: float) -> float:
    # det of the 3x3 first-stratum potential, using (κ - r)(κ - s) = μn
    n, kappa, lam, mu = params.as_tuple()
    return 1.0 + 2.0 * g * (2 * kappa - lam + mu) + 4.0 * g * g * mu * n

def one_minus_d_squared(params: SrgParams, g: float, partition: "Partition | str") -> float:
    """
    1 - d² of the first-stratum sector as det(V) / (det(V_AA) det(V_BB)).

    Every factor is a polynomial in g with positive coefficients, so the ratio
    keeps full precision when d is close to 1.
    """
    g = check_coupling(g)
    partition = Partition.parse(partition)
    n, kappa, lam, mu = params.as_tuple()
    if partition is Partition.S1_VS_S23:
        denominator = (1 + 2 * g * kappa) * (1 + 2 * g * (kappa - lam + mu) + 4 * g * g * mu)
    elif partition is Partition.S12_VS_S3:
        denominator = (1 + 2 * g * (2 * kappa - lam) + 4 * g * g * kappa * (kappa - lam - 1)) * (1 + 2 * g * mu)
    else:
        denominator = (1 + 2 * g * kappa) * (1 + 2 * g * mu) * (1 + 2 * g * (kappa - lam))
    return _potential_determinant(params, g) / denominator

def closed_form_mode(params: SrgParams, g: float, partition: "Partition | str",
                     coupling: Optional[CouplingConfig] = None) -> ModeEntanglement:
    """
    First-stratum sector with γ taken from the cancellation-free 1 - d².

    Agrees with ``mode_entropy(closed_form_schmidt(...))`` wherever the latter
    is representable, and stays accurate up to g ~ 1e8.
    """
    log_base = coupling.log_base if coupling is not None else LogBase.NATURAL
    d = closed_form_schmidt(params, g, partition)
    return _mode(d, one_minus_d_squared(params, g, partition), log_base)

# ------------------------------------------------------------------------------------------------
# Paired blocks
# ------------------------------------------------------------------------------------------------

def block_schmidt(block: TwoByTwoBlock, params: SrgParams, g: float, verbatim: bool = False) -> float:
    """
    Schmidt number of a paired Γ1/Γ2 sector.

    d = 2g sqrt(λ12) / sqrt((1 + 2g(κ - λ1)) (1 + 2g(κ - λ2))). With
    ``verbatim=True`` the printed variant with λ12 - λi in place of κ - λi is
    returned instead, or NaN when that variant has no real value.
    """
    g = check_coupling(g)
    if g == 0.0 or block.lambda12 <= 0:
        return 0.0
    if verbatim:
        left, right = block.lambda12 - block.lambda1, block.lambda12 - block.lambda2
    else:
        left, right = params.kappa - block.lambda1, params.kappa - block.lambda2
    product = (1 + 2 * g * left) * (1 + 2 * g * right)
    if product <= 0:
        logger.debug(f"Block {block} has no real Schmidt number in the printed variant at g={g}")
        return math.nan
    return 2.0 * g * math.sqrt(block.lambda12) / math.sqrt(product)

def block_mode(block: TwoByTwoBlock, params: SrgParams, g: float,
               coupling: Optional[CouplingConfig] = None) -> ModeEntanglement:
    """Paired sector with 1 - d² = det(V) / ((1 + 2g(κ-λ1)) (1 + 2g(κ-λ2)))."""
    log_base = coupling.log_base if coupling is not None else LogBase.NATURAL
    d = block_schmidt(block, params, g)
    g = float(g)
    denominator = (1 + 2 * g * (params.kappa - block.lambda1)) * (1 + 2 * g * (params.kappa - block.lambda2))
    return _mode(d, _potential_determinant(params, g) / denominator, log_base)

# ------------------------------------------------------------------------------------------------
# Predicted mode spectra
# ------------------------------------------------------------------------------------------------

def _side_sizes(params: SrgParams, partition: Partition) -> Tuple[int, int]:
    kappa, far = params.kappa, params.nonadjacent
    if partition is Partition.S1_VS_S23:
        return 1, kappa + far
    if partition is Partition.S12_VS_S3:
        return 1 + kappa, far
    return 1 + far, kappa

def block_modes(diag: BlockDiagonalization, g: float, partition: "Partition | str",
                coupling: Optional[CouplingConfig] = None) -> List[ModeEntanglement]:
    """
    Sectors of a strata bipartition, predicted from the block decomposition.

    The root alone couples only through the first-stratum sector. Splitting
    Γ1 from Γ2 adds one sector per paired block and multiplicity. The rest of
    the smaller side is left in product states (d = 0).

    Returns:
        List[ModeEntanglement]: Sorted by descending d; one entry per mode of the smaller side.
    """
    partition = Partition.parse(partition)
    params = diag.params
    modes = [closed_form_mode(params, g, partition, coupling)]
    if partition is not Partition.S1_VS_S23:
        for pair in diag.pairs:
            modes.extend([block_mode(pair, params, g, coupling)] * pair.multiplicity)

    size = min(_side_sizes(params, partition))
    product_state = mode_entropy(0.0, coupling)
    modes.extend([product_state] * (size - len(modes)))
    return sorted(modes, key=lambda mode: -mode.d)

def mode_spectrum_from_blocks(diag: BlockDiagonalization, g: float,
                              partition: "Partition | str") -> Tuple[float, ...]:
    """Descending d-spectrum of a strata bipartition, from ``block_modes``."""
    return tuple(mode.d for mode in block_modes(diag, g, partition))

def predicted_report(diag: BlockDiagonalization, g: float, partition: "Partition | str",
                     coupling: Optional[CouplingConfig] = None) -> EntanglementReport:
    """`EntanglementReport` of a strata bipartition assembled from closed forms."""
    partition = Partition.parse(partition)
    coupling = coupling or CouplingConfig(g=g)
    return EntanglementReport(
        partition=partition.value,
        g=float(g),
        modes=tuple(block_modes(diag, g, partition, coupling)),
        log_base=coupling.log_base,
        convention=coupling.convention,
    )

def report_from_spectrum(partition: str, g: float, spectrum: Sequence[float],
                         coupling: Optional[CouplingConfig] = None) -> EntanglementReport:
    """Wrap a d-spectrum into a report, sorted by descending d."""
    coupling = coupling or CouplingConfig(g=g)
    modes = sorted((mode_entropy(d, coupling) for d in spectrum), key=lambda mode: -mode.d)
    return EntanglementReport(
        partition=partition,
        g=float(g),
        modes=tuple(modes),
        log_base=coupling.log_base,
        convention=coupling.convention,
    )
