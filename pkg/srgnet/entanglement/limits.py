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
Limits of the first-stratum entanglement.

Large coupling: with γ ≈ sqrt(2g·boundary/n) the entropy approaches
½ log(g·boundary / 2n) + 1, where the boundary is κ for 1:23 and μ(n-κ-1)
for 12:3 (the number of edges cut).

Large systems: for growing κ the first-stratum γ tends to 1 at fixed μ.
`area_law_gamma` evaluates that γ for the finite-μ and κ = μ cases.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from types import ModuleType
from typing import Optional

from ..core.exceptions import CaseMismatchError, CouplingDomainError, OutOfRegimeWarning
from ..core.types import Partition, SrgParams
from ..graphs.matrices import check_coupling
from ..utils.config_loader import config_value
from .schmidt import closed_form_mode

logger = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

class AreaLawCase(str, Enum):
    FINITE_MU = "finite_mu"
    KAPPA_EQUALS_MU = "kappa_equals_mu"


@dataclass(frozen=True)
class LargeCouplingEstimate:
    """Asymptotic entropy with the γ it assumes; ``in_regime`` is False when γ < the configured minimum."""
    partition: str
    g: float
    boundary: int
    gamma: float
    entropy: float
    in_regime: bool

# ------------------------------------------------------------------------------------------------
# Large coupling
# ------------------------------------------------------------------------------------------------

def boundary_size(params: SrgParams, partition: "Partition | str") -> int:
    """Edges cut by a strata bipartition with the root alone or with Γ1 on side A."""
    partition = Partition.parse(partition)
    if partition is Partition.S1_VS_S23:
        return params.kappa
    if partition is Partition.S12_VS_S3:
        return params.mu * params.nonadjacent
    raise CaseMismatchError(f"No large-coupling form is defined for the {partition.value} bipartition")

def large_g_entropy(params: SrgParams, g: float, partition: "Partition | str" = Partition.S1_VS_S23,
                    config: Optional[ModuleType] = None) -> LargeCouplingEstimate:
    """
    Asymptotic entropy ½ ln(g·boundary / 2n) + 1 in nats.

    Args:
        params: SRG parameters.
        g: Coupling strength, g > 0.
        partition: "1:23" (boundary κ) or "12:3" (boundary μ(n-κ-1)).
        config: Optional numerical configuration module (``LARGE_COUPLING``).

    Returns:
        LargeCouplingEstimate: The estimate. When the asymptotic γ is below the
        configured minimum an `OutOfRegimeWarning` is issued and ``in_regime`` is False.

    Raises:
        CouplingDomainError: If g is not positive.
        CaseMismatchError: For the 13:2 bipartition.
    """
    g = check_coupling(g)
    if g == 0.0:
        raise CouplingDomainError("The large-coupling form needs g > 0")
    partition = Partition.parse(partition)
    boundary = boundary_size(params, partition)

    ratio = g * boundary / (2.0 * params.n)
    gamma = math.sqrt(4.0 * ratio)
    entropy = 0.5 * math.log(ratio) + 1.0

    in_regime = gamma >= config_value(config, 'LARGE_COUPLING', 'min_gamma')
    if not in_regime:
        message = (f"Asymptotic γ={gamma:.4g} for {params} at g={g:g} is below the large-coupling regime; "
                   f"the estimate is unreliable")
        logger.warning(message)
        warnings.warn(message, OutOfRegimeWarning, stacklevel=2)

    return LargeCouplingEstimate(
        partition=partition.value, g=g, boundary=boundary, gamma=gamma, entropy=entropy, in_regime=in_regime,
    )

def asymptotic_error(params: SrgParams, g: float, partition: "Partition | str" = Partition.S1_VS_S23) -> float:
    """Exact closed-form entropy minus the large-coupling estimate."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutOfRegimeWarning)
        estimate = large_g_entropy(params, g, partition)
    return closed_form_mode(params, g, partition).entropy - estimate.entropy

# ------------------------------------------------------------------------------------------------
# Large systems
# ------------------------------------------------------------------------------------------------

def _check_case(params: SrgParams, case: AreaLawCase) -> None:
    if case is AreaLawCase.FINITE_MU and not params.kappa > params.mu:
        raise CaseMismatchError(f"The finite-mu case needs kappa > mu, got {params}")
    if case is AreaLawCase.KAPPA_EQUALS_MU and params.kappa != params.mu:
        raise CaseMismatchError(f"The kappa = mu case needs kappa == mu, got {params}")

def area_law_gamma(params: SrgParams, g: float, case: "AreaLawCase | str" = AreaLawCase.FINITE_MU,
                   verbatim: bool = False) -> float:
    """
    γ of the 1:23 first-stratum sector for the large-system analysis.

    By default γ = 1/sqrt(1 - d²) with the V-consistent d. ``verbatim=True``
    evaluates the printed expressions instead; their determinant carries an
    extra factor and, in the κ = μ case, γ tends to 1 only in that form.

    Raises:
        CaseMismatchError: If the parameters do not fit the case.
    """
    g = check_coupling(g)
    case = AreaLawCase(case)
    _check_case(params, case)
    if not verbatim:
        return closed_form_mode(params, g, Partition.S1_VS_S23).gamma

    n, kappa, lam, mu = params.as_tuple()
    base = 1 + 2 * g * kappa
    if case is AreaLawCase.FINITE_MU:
        term = 4 * g * g * kappa * (1 + 2 * g * mu) / (1 + 4 * g * g * mu + 2 * g * mu * (kappa - lam + mu))
    else:
        term = 4 * g * g * kappa * (1 + 2 * g * kappa) / (1 + 4 * g * g * kappa + 2 * g * kappa * (2 * kappa - lam))
    return math.sqrt(base / (base - term))
