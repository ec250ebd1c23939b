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
Printed family formulas for Schmidt numbers, checked against the general pipeline.

Each family of strongly regular graphs has its own printed expressions for the
first-stratum Schmidt numbers and for the paired blocks. `family_closed_forms`
evaluates every printed expression verbatim next to the value of the general
V-consistent pipeline and reports the difference. The general 13:2 form and
paired-block form are also listed in their printed variants.

The ``equation`` column keeps the printed equation labels so rows can be
traced back to the published derivations.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass
from types import ModuleType
from typing import Callable, List, Optional, Tuple

from ..core.exceptions import UnsupportedFamilyError
from ..core.types import DiscrepancyRow, Partition, SrgParams
from ..graphs.families import Family, FamilySpec
from ..graphs.matrices import check_coupling
from ..spectral.stratification import TwoByTwoBlock
from ..utils.config_loader import config_value
from .schmidt import block_schmidt, closed_form_schmidt

logger = logging.getLogger(__name__)

BLOCK = "block"

NOTE_KAPPA_SQUARED = "first term has kappa^2 where the potential gives kappa"
NOTE_BLOCK_PATTERN = "uses lambda12 - lambda_i where the potential gives kappa - lambda_i"
NOTE_LATTICE_BLOCK = "matches neither the potential nor the lambda12 - lambda_i pattern"
NOTE_TRIANGULAR_12_3 = "last term has (nu-3) where the general form gives (nu-2)"

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class PrintedFormula:
    """A printed expression of d as a function of g, with what it should reproduce."""
    equation: str
    partition: str
    evaluate: Callable[[float], float]
    block: Optional[Tuple[float, float, float]] = None
    note: Optional[str] = None

# ------------------------------------------------------------------------------------------------
# Paired blocks of each family, as (lambda1, lambda2, lambda12)
# ------------------------------------------------------------------------------------------------

def family_blocks(spec: FamilySpec) -> Tuple[Tuple[float, float, float], ...]:
    """Known paired blocks with λ12 > 0; families whose A12 has rank one have none."""
    family, size = spec.family, spec.size
    if family is Family.TRIANGULAR:
        (nu,) = size
        blocks = [(0, nu - 6, 2 * (nu - 4))]
    elif family is Family.LATTICE:
        (nu,) = size
        blocks = [(-1, nu - 3, nu - 1)] if nu >= 3 else []
    elif family is Family.LATIN_SQUARE_CYCLIC:
        (nu,) = size
        # nu = 3 gives K_{3,3,3}, whose A12 has rank one
        blocks = [(0, nu - 6, 3 * (nu - 3)), (-2, nu - 4, nu - 1)] if nu > 3 else []
        if nu > 4:
            blocks.insert(0, (1, nu - 7, 4 * (nu - 4)))
    elif family is Family.KNESER62:
        s = t = 2
        blocks = [(-1, s - t - 1, s * t)]
    elif family is Family.PETERSEN:
        kappa, mu = 3, 1
        blocks = [(0, -mu, kappa - mu)]
    else:
        blocks = []
    return tuple(block for block in blocks if block[2] > 0)

# ------------------------------------------------------------------------------------------------
# Printed formulas
# ------------------------------------------------------------------------------------------------

def _complete_bipartite(m: int) -> List[PrintedFormula]:
    return [
        PrintedFormula("4-55", "1:23", lambda g: 2 * math.sqrt(m) * g / math.sqrt(
            (1 + 2 * g * m) ** 2 - 4 * m * (m - 1) * g * g)),
        PrintedFormula("4-56", "12:3", lambda g: 2 * math.sqrt(m * (m - 1)) * g / math.sqrt(
            (1 + 2 * g * m) ** 2 - 4 * m * g * g)),
        PrintedFormula("4-57", "13:2", lambda g: 2 * g / (1 + 2 * g * m) * math.sqrt(m * (2 * m - 1)),
                       note=NOTE_KAPPA_SQUARED),
    ]

def _kappa_equals_mu(params: SrgParams) -> List[PrintedFormula]:
    n, kappa, lam, _ = params.as_tuple()
    return [
        PrintedFormula("4-59", "12:3", lambda g: 2 * math.sqrt(n - kappa - 1) * math.sqrt(kappa) * g / math.sqrt(
            (1 + 2 * g * kappa) * (1 + 2 * g * (kappa - lam)) - 4 * g * g * kappa)),
    ]

def _lambda_zero(params: SrgParams) -> List[PrintedFormula]:
    kappa, mu = params.kappa, params.mu
    return [
        PrintedFormula("4-62", BLOCK, lambda g: 2 * g * math.sqrt(kappa - mu) / (
            math.sqrt(1 + 2 * g * kappa) * math.sqrt(1 + 2 * g * (kappa - mu))),
            block=(0, -mu, kappa - mu), note=NOTE_BLOCK_PATTERN),
    ]

def _triangular(nu: int) -> List[PrintedFormula]:
    formulas = [
        PrintedFormula("4-66", "1:23", lambda g: 2 * g * math.sqrt(2 * (nu - 2) * (1 + 8 * g)) / (
            math.sqrt(1 + 4 * g * (nu - 2))
            * math.sqrt((1 + 8 * g) * (1 + 2 * g * (nu - 2)) - 16 * g * g * (nu - 3)))),
        PrintedFormula("4-67", "12:3", lambda g: 4 * g * math.sqrt((nu - 3) * (1 + 4 * g * (nu - 2))) / (
            math.sqrt(1 + 8 * g)
            * math.sqrt((1 + 4 * g * (nu - 2)) * (1 + 2 * g * (nu - 2)) - 8 * g * g * (nu - 3))),
            note=NOTE_TRIANGULAR_12_3),
        PrintedFormula("4-68", "13:2", lambda g: 4 * g * math.sqrt(
            (nu - 2) ** 2 / ((1 + 4 * g * (nu - 2)) * (1 + 2 * g * (nu - 2)))
            + (nu - 3) / ((1 + 8 * g) * (1 + 2 * g * (nu - 2)))), note=NOTE_KAPPA_SQUARED),
    ]
    if nu >= 5:
        formulas.append(PrintedFormula("4-70", BLOCK, lambda g: 2 * g * math.sqrt(2 * (nu - 4)) / (
            math.sqrt(1 + 4 * g * (nu - 4)) * math.sqrt(1 + 2 * g * (nu - 2))),
            block=(0, nu - 6, 2 * (nu - 4)), note=NOTE_BLOCK_PATTERN))
    return formulas

def _lattice(nu: int) -> List[PrintedFormula]:
    formulas = [
        PrintedFormula("4-75", "1:23", lambda g: 2 * g * math.sqrt(2 * (nu - 1) * (1 + 4 * g)) / (
            math.sqrt(1 + 4 * g * (nu - 1))
            * math.sqrt((1 + 4 * g) * (1 + 2 * g * nu) - 8 * g * g * (nu - 1)))),
        PrintedFormula("4-76", "12:3", lambda g: 2 * g * math.sqrt(2 * (nu - 1) * (1 + 4 * g * (nu - 1))) / (
            math.sqrt(1 + 4 * g)
            * math.sqrt((1 + 4 * g * (nu - 1)) * (1 + 2 * g * nu) - 8 * g * g * (nu - 1)))),
        PrintedFormula("4-77", "13:2", lambda g: 2 * g * math.sqrt(
            4 * (nu - 1) ** 2 / ((1 + 4 * g * (nu - 1)) * (1 + 2 * g * nu))
            + 2 * (nu - 1) / ((1 + 4 * g) * (1 + 2 * g * nu))), note=NOTE_KAPPA_SQUARED),
    ]
    if nu >= 3:
        formulas.append(PrintedFormula("4-79", BLOCK, lambda g: 2 * g * math.sqrt(nu - 1) / (
            math.sqrt(1 + 4 * g * (nu - 1)) * math.sqrt(1 + 2 * g * (nu - 1))),
            block=(-1, nu - 3, nu - 1), note=NOTE_LATTICE_BLOCK))
    return formulas

def _latin_square(nu: int) -> List[PrintedFormula]:
    formulas = [
        PrintedFormula("4-83", "1:23", lambda g: 2 * g * math.sqrt(3 * (nu - 1) * (1 + 12 * g)) / (
            math.sqrt(1 + 6 * g * (nu - 1))
            * math.sqrt((1 + 12 * g) * (1 + 2 * g * (2 * nu - 3)) - 48 * g * g * (nu - 2)))),
        PrintedFormula("4-84", "12:3", lambda g: 4 * g * math.sqrt(3 * (nu - 2) * (1 + 6 * g * (nu - 1))) / (
            math.sqrt(1 + 12 * g)
            * math.sqrt((1 + 6 * g * (nu - 1)) * (1 + 2 * g * (2 * nu - 3)) - 12 * g * g * (nu - 1)))),
        PrintedFormula("4-85", "13:2", lambda g: 2 * g * math.sqrt(
            9 * (nu - 1) ** 2 / ((1 + 6 * g * (nu - 1)) * (1 + 2 * g * (2 * nu - 3)))
            + 12 * (nu - 2) / ((1 + 12 * g) * (1 + 2 * g * (2 * nu - 3)))), note=NOTE_KAPPA_SQUARED),
    ]
    if nu > 4:
        formulas.append(PrintedFormula("4-89", BLOCK, lambda g: 2 * g * math.sqrt(4 * (nu - 4)) / (
            math.sqrt(1 + 2 * g * (4 * nu - 17)) * math.sqrt(1 + 6 * g * (nu - 3))),
            block=(1, nu - 7, 4 * (nu - 4)), note=NOTE_BLOCK_PATTERN))
    if nu > 3:
        formulas.append(PrintedFormula("4-90", BLOCK, lambda g: 2 * g * math.sqrt(3 * (nu - 3)) / (
            math.sqrt(1 + 2 * g * (2 * nu - 3)) * math.sqrt(1 + 6 * g * (nu - 3))),
            block=(0, nu - 6, 3 * (nu - 3)), note=NOTE_BLOCK_PATTERN))
        formulas.append(PrintedFormula("4-91", BLOCK, lambda g: 2 * g * math.sqrt(nu - 1) / (
            math.sqrt(1 + 2 * g * (nu + 1)) * math.sqrt(1 + 6 * g)),
            block=(-2, nu - 4, nu - 1), note=NOTE_BLOCK_PATTERN))
    return formulas

def _generalized_quadrangle(s: int, t: int) -> List[PrintedFormula]:
    return [
        PrintedFormula("4-96", "1:23", lambda g: 2 * g * math.sqrt(s * (t + 1) * (1 + 2 * g * (t + 1))) / (
            math.sqrt(1 + 2 * g * s * (t + 1))
            * math.sqrt((1 + 2 * g * (t + 1)) * (1 + 2 * g * (s * t + 1)) - 4 * g * g * s * t * (t + 1)))),
        PrintedFormula("4-97", "12:3", lambda g: 2 * g * math.sqrt(s * t * (1 + t) * (1 + 2 * g * s * (t + 1))) / (
            math.sqrt(1 + 2 * g * (t + 1))
            * math.sqrt((1 + 2 * g * s * (t + 1)) * (1 + 2 * g * (s * t + 1)) - 4 * g * g * s * (t + 1)))),
        PrintedFormula("4-98", "13:2", lambda g: 2 * g * math.sqrt(
            s * s * (t + 1) ** 2 / ((1 + 2 * g * s * (t + 1)) * (1 + 2 * g * (s * t + 1)))
            + s * t * (t + 1) / ((1 + 2 * g * (t + 1)) * (1 + 2 * g * (s * t + 1)))), note=NOTE_KAPPA_SQUARED),
        PrintedFormula("4-99", BLOCK, lambda g: 2 * g * math.sqrt(s * t) / (
            math.sqrt(1 + 2 * g * (1 + s * t)) * math.sqrt(1 + 2 * g * (s * (t - 1) + t + 1))),
            block=(-1, s - t - 1, s * t), note=NOTE_BLOCK_PATTERN),
    ]

def _general(params: SrgParams, spec: FamilySpec) -> List[PrintedFormula]:
    formulas = [
        PrintedFormula("4-38", "1:23", lambda g: closed_form_schmidt(params, g, Partition.S1_VS_S23)),
        PrintedFormula("4-37", "12:3", lambda g: closed_form_schmidt(params, g, Partition.S12_VS_S3)),
        PrintedFormula("4-39", "13:2", lambda g: closed_form_schmidt(params, g, Partition.S13_VS_S2, verbatim=True),
                       note=NOTE_KAPPA_SQUARED),
    ]
    for triple in family_blocks(spec):
        block = TwoByTwoBlock(*triple)
        formulas.append(PrintedFormula(
            "4-43", BLOCK, lambda g, block=block: block_schmidt(block, params, g, verbatim=True),
            block=triple, note=NOTE_BLOCK_PATTERN,
        ))
    return formulas

def printed_formulas(spec: FamilySpec) -> List[PrintedFormula]:
    """
    Every printed formula that applies to a family member.

    Raises:
        UnsupportedFamilyError: For families without printed formulas (Shrikhande).
    """
    if spec.family is Family.SHRIKHANDE:
        raise UnsupportedFamilyError(f"No printed closed forms exist for {spec.label}")

    params = spec.expected_params
    formulas = _general(params, spec)
    family, size = spec.family, spec.size
    if family is Family.COMPLETE_BIPARTITE:
        formulas += _complete_bipartite(*size)
    elif family is Family.TRIANGULAR:
        formulas += _triangular(*size)
    elif family is Family.LATTICE:
        formulas += _lattice(*size)
    elif family is Family.LATIN_SQUARE_CYCLIC:
        formulas += _latin_square(*size)
    elif family is Family.KNESER62:
        # the Kneser graph K(6,2) is the collinearity graph of GQ(2,2)
        formulas += _generalized_quadrangle(2, 2)

    if params.kappa == params.mu:
        formulas += _kappa_equals_mu(params)
    if params.lam == 0 and params.kappa > params.mu:
        formulas += _lambda_zero(params)
    return formulas

# ------------------------------------------------------------------------------------------------
# Discrepancy table
# ------------------------------------------------------------------------------------------------

def _evaluate(formula: PrintedFormula, g: float) -> float:
    if g == 0.0:
        return 0.0
    try:
        return float(formula.evaluate(g))
    except (ValueError, ZeroDivisionError):
        # no real value at this coupling
        return math.nan

def _general_value(formula: PrintedFormula, params: SrgParams, g: float) -> float:
    if formula.partition == BLOCK:
        return block_schmidt(TwoByTwoBlock(*formula.block), params, g)
    return closed_form_schmidt(params, g, formula.partition)

def family_closed_forms(spec: FamilySpec, g: float, config: Optional[ModuleType] = None) -> List[DiscrepancyRow]:
    """
    Evaluate every printed formula of a family member next to the general pipeline.

    Args:
        spec: Family member.
        g: Coupling strength, g >= 0.
        config: Optional numerical configuration module.

    Returns:
        List[DiscrepancyRow]: One row per formula. ``consistent`` marks rows whose
        printed value matches the general value within ``formula_consistency``;
        ``exceeds_unity`` marks printed values that cannot be a Schmidt number.

    Raises:
        UnsupportedFamilyError: For families without printed formulas.
        CouplingDomainError: If g is negative.
    """
    g = check_coupling(g)
    params = spec.expected_params
    tolerance = config_value(config, 'TOLERANCES', 'formula_consistency')

    rows: List[DiscrepancyRow] = []
    for formula in printed_formulas(spec):
        printed = _evaluate(formula, g)
        general = _general_value(formula, params, g)
        discrepancy = abs(printed - general) if math.isfinite(printed) else math.inf
        consistent = discrepancy <= tolerance
        rows.append({
            'equation': formula.equation,
            'family': spec.label,
            'partition': formula.partition,
            'printed_value': printed,
            'general_value': general,
            'discrepancy': discrepancy,
            'consistent': consistent,
            'exceeds_unity': math.isfinite(printed) and printed >= 1.0,
            'note': None if consistent else formula.note,
        })

    disagreeing = [row['equation'] for row in rows if not row['consistent']]
    if disagreeing:
        logger.warning(f"{spec.label} at g={g:g}: printed formulas {', '.join(disagreeing)} "
                       f"disagree with the general pipeline")
    exceeding = [row['equation'] for row in rows if row['exceeds_unity']]
    if exceeding:
        logger.warning(f"{spec.label} at g={g:g}: printed formulas {', '.join(exceeding)} give d >= 1")
    return rows
