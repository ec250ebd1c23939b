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
Strongly regular graph verification.

This module decides whether a graph is strongly regular and returns its
parameters (n, kappa, lambda, mu). Verification is exact integer arithmetic,
done two independent ways: common-neighbour counting over all vertex pairs, and
the matrix identity A^2 = (kappa - mu) I + mu J + (lambda - mu) A.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
from itertools import combinations
from typing import Tuple

import networkx as nx
import numpy as np

from ..core.exceptions import (
    DegenerateGraphError,
    DisconnectedGraphError,
    InfeasibleParametersError,
    NotRegularError,
    NotStronglyRegularError,
    SrgVerificationError,
)
from ..core.types import Graph, SrgParams

# ------------------------------------------------------------------------------------------------
# Validation class and functions
# ------------------------------------------------------------------------------------------------

logger = logging.getLogger(__name__)

class SrgValidator:
    """Class to handle strongly regular graph verification"""

    @staticmethod
    def check_nondegenerate(graph: Graph) -> None:
        """
        Reject complete and edgeless graphs.

        Raises:
            DegenerateGraphError: If the graph has no edges or every pair is adjacent.
        """
        n = graph.n
        if graph.edge_count == 0:
            raise DegenerateGraphError(f"Edgeless graph on {n} vertices is not strongly regular")
        if graph.edge_count == n * (n - 1) // 2:
            raise DegenerateGraphError(f"Complete graph K{n} is not strongly regular")

    @staticmethod
    def check_connected(graph: Graph) -> None:
        """
        Raises:
            DisconnectedGraphError: If the graph has more than one component.
        """
        if not nx.is_connected(graph.to_networkx()):
            raise DisconnectedGraphError("Graph is not connected")

    @staticmethod
    def check_regular(graph: Graph) -> int:
        """
        Return the common degree.

        Raises:
            NotRegularError: If two vertices have different degrees.
        """
        degrees = graph.degrees
        if not np.all(degrees == degrees[0]):
            raise NotRegularError(
                f"Vertex degrees range from {int(degrees.min())} to {int(degrees.max())}"
            )
        return int(degrees[0])

    @staticmethod
    def count_common_neighbours(graph: Graph) -> Tuple[int, int]:
        """
        Count common neighbours pair by pair.

        Returns:
            Tuple[int, int]: (lambda, mu), the constant counts for adjacent and
            non-adjacent pairs.

        Raises:
            NotStronglyRegularError: If either count varies.
        """
        neighbours = [set(np.flatnonzero(row).tolist()) for row in graph.adjacency]
        adjacent_counts, nonadjacent_counts = set(), set()
        for u, v in combinations(range(graph.n), 2):
            shared = len(neighbours[u] & neighbours[v])
            if graph.adjacency[u, v]:
                adjacent_counts.add(shared)
            else:
                nonadjacent_counts.add(shared)

        if len(adjacent_counts) != 1:
            raise NotStronglyRegularError(
                f"Adjacent pairs share {sorted(adjacent_counts)} common neighbours (lambda not constant)"
            )
        if len(nonadjacent_counts) != 1:
            raise NotStronglyRegularError(
                f"Non-adjacent pairs share {sorted(nonadjacent_counts)} common neighbours (mu not constant)"
            )
        return adjacent_counts.pop(), nonadjacent_counts.pop()

    @staticmethod
    def check_identity(graph: Graph, params: SrgParams) -> None:
        """
        Check A^2 = (kappa - mu) I + mu J + (lambda - mu) A entrywise over the integers.

        Raises:
            NotStronglyRegularError: If any entry differs.
        """
        a = graph.adjacency
        n = graph.n
        expected = (
            (params.kappa - params.mu) * np.eye(n, dtype=np.int64)
            + params.mu * np.ones((n, n), dtype=np.int64)
            + (params.lam - params.mu) * a
        )
        mismatches = int(np.count_nonzero(a @ a != expected))
        if mismatches:
            raise NotStronglyRegularError(
                f"A^2 identity fails on {mismatches} entries for {params}"
            )

    @staticmethod
    def check_feasible(params: SrgParams) -> None:
        """
        Check the parameter inequalities and the counting identities.

        Raises:
            InfeasibleParametersError: If any condition fails.
        """
        n, kappa, lam, mu = params.as_tuple()
        if not (n - 1 > kappa >= mu > 0):
            raise InfeasibleParametersError(f"{params}: need n-1 > kappa >= mu > 0")
        if not (kappa - 1 > lam >= 0):
            raise InfeasibleParametersError(f"{params}: need kappa-1 > lambda >= 0")
        if kappa * (kappa - lam - 1) != (n - kappa - 1) * mu:
            raise InfeasibleParametersError(f"{params}: kappa(kappa-lambda-1) != (n-kappa-1)mu")
        if kappa * kappa != (kappa - mu) + mu * n + (lam - mu) * kappa:
            raise InfeasibleParametersError(
                f"{params}: kappa^2 != (kappa-mu) + mu n + (lambda-mu) kappa"
            )

    def verify(self, graph: Graph) -> SrgParams:
        """
        Verify that a graph is strongly regular and return its parameters.

        Args:
            graph: Candidate graph.

        Returns:
            SrgParams: The verified parameter tuple.

        Raises:
            DegenerateGraphError, DisconnectedGraphError, NotRegularError,
            NotStronglyRegularError, InfeasibleParametersError.
        """
        self.check_nondegenerate(graph)
        self.check_connected(graph)
        kappa = self.check_regular(graph)
        lam, mu = self.count_common_neighbours(graph)
        params = SrgParams(graph.n, kappa, lam, mu)
        self.check_identity(graph, params)
        self.check_feasible(params)
        logger.debug(f"Verified {params}")
        return params

def srg_params(graph: Graph) -> SrgParams:
    """
    Verify a graph and return its SRG parameters.

    This is the main entry point for SRG verification.

    Args:
        graph: Candidate graph.

    Returns:
        SrgParams: The verified (n, kappa, lambda, mu).
    """
    return SrgValidator().verify(graph)

def validate_srg_params(params: SrgParams) -> SrgParams:
    """Check a parameter tuple for feasibility and return it unchanged."""
    SrgValidator.check_feasible(params)
    return params

def is_strongly_regular(graph: Graph) -> bool:
    """True if `srg_params` succeeds."""
    try:
        srg_params(graph)
    except SrgVerificationError:
        return False
    except DisconnectedGraphError:
        return False
    return True
