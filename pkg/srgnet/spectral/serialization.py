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
JSON forms of stratification data.

A block diagonalization is written as the 3x3 first block, the paired blocks
as {lambda1, lambda2, lambda12, multiplicity}, and each singlet multiset as a
list of [value, multiplicity] pairs.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

from collections import Counter
from typing import Iterable, List

from ..core.types import BlockDiagonalizationPayload, JsonDict, SrgParams
from .stratification import (
    BlockDiagonalization,
    Stratification,
    TwoByTwoBlock,
    first_stratum_block,
)

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def _multiset(values: Iterable[float]) -> List[List[float]]:
    counts = Counter(values)
    return [[value, counts[value]] for value in sorted(counts, reverse=True)]

def stratification_to_dict(strat: Stratification) -> JsonDict:
    return {
        'root': strat.root,
        'valencies': list(strat.valencies),
        'strata': [list(stratum) for stratum in strat.strata],
    }

def block_diagonalization_to_dict(diag: BlockDiagonalization) -> BlockDiagonalizationPayload:
    return {
        'params': diag.params.to_dict(),
        'first': diag.first.m.tolist(),
        'pairs': [
            {
                'lambda1': pair.lambda1,
                'lambda2': pair.lambda2,
                'lambda12': pair.lambda12,
                'multiplicity': pair.multiplicity,
            }
            for pair in diag.pairs
        ],
        'singlets2': _multiset(diag.singlets2),
        'singlets3': _multiset(diag.singlets3),
    }

def block_diagonalization_from_dict(payload: JsonDict) -> BlockDiagonalization:
    """
    Rebuild a block diagonalization from its JSON form.

    The first block is regenerated from the parameters; the stored matrix is
    informational.
    """
    raw = payload['params']
    params = SrgParams(raw['n'], raw['kappa'], raw['lambda'], raw['mu'])

    def expand(pairs: List[List[float]]) -> tuple:
        return tuple(sorted((float(v) for v, count in pairs for _ in range(int(count))), reverse=True))

    return BlockDiagonalization(
        params=params,
        first=first_stratum_block(params),
        pairs=tuple(
            TwoByTwoBlock(
                lambda1=float(p['lambda1']),
                lambda2=float(p['lambda2']),
                lambda12=float(p['lambda12']),
                multiplicity=int(p['multiplicity']),
            )
            for p in payload['pairs']
        ),
        singlets2=expand(payload['singlets2']),
        singlets3=expand(payload['singlets3']),
    )
