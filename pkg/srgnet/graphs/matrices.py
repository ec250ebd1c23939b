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
Matrices derived from a graph.

The oscillator network on a graph G has Hamiltonian with potential matrix
V = I + 2gL, where L = diag(degrees) - A is the graph Laplacian and g >= 0 is
the coupling between connected oscillators. This module builds L and V and the
restricted eigenvalues of SRG adjacency matrices.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..core.exceptions import CouplingDomainError
from ..core.types import Graph, SrgParams

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PotentialMatrix:
    """Potential matrix V = I + 2gL of an oscillator network."""
    g: float
    matrix: np.ndarray


class SrgSpectrum(NamedTuple):
    """Adjacency spectrum {kappa^1, r^f, s^g} of a strongly regular graph."""
    kappa: int
    r: float
    s: float
    f: int
    g: int

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def check_coupling(g: float) -> float:
    """
    Validate a coupling strength.

    Raises:
        CouplingDomainError: If g is negative or not finite.
    """
    g = float(g)
    if not math.isfinite(g) or g < 0:
        raise CouplingDomainError(f"Coupling strength must be a finite non-negative number, got {g}")
    return g

def laplacian(graph: Graph) -> np.ndarray:
    """Return L = diag(degrees) - A as an integer matrix; every row sums to zero."""
    return np.diag(graph.degrees) - graph.adjacency

def potential(graph: Graph, g: float) -> PotentialMatrix:
    """
    Build the potential matrix V = I + 2gL.

    Diagonal entries are 1 + 2g k_i and off-diagonal entries -2g A_ij. V is
    positive definite with smallest eigenvalue >= 1.

    Args:
        graph: The network.
        g: Coupling strength, g >= 0.

    Returns:
        PotentialMatrix: V together with the coupling used.

    Raises:
        CouplingDomainError: If g is negative.
    """
    g = check_coupling(g)
    matrix = np.eye(graph.n) + 2.0 * g * laplacian(graph)
    matrix.setflags(write=False)
    return PotentialMatrix(g=g, matrix=matrix)

def srg_eigenvalues(params: SrgParams) -> SrgSpectrum:
    """
    Eigenvalues and multiplicities of an SRG adjacency matrix from its parameters.

    r > s are the roots of x^2 - (lambda - mu) x - (kappa - mu) = 0.
    """
    n, kappa, lam, mu = params.as_tuple()
    root = math.sqrt((lam - mu) ** 2 + 4 * (kappa - mu))
    r = 0.5 * (lam - mu + root)
    s = 0.5 * (lam - mu - root)
    skew = (2 * kappa + (n - 1) * (lam - mu)) / root
    f = round(0.5 * ((n - 1) - skew))
    g = round(0.5 * ((n - 1) + skew))
    return SrgSpectrum(kappa=kappa, r=r, s=s, f=f, g=g)
