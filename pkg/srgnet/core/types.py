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
Type definitions for the SRG network analysis toolkit.

This module defines the two value types shared by every other module (the
simple undirected `Graph` and the `SrgParams` tuple), the small enumerations
used on the command line, and TypedDict shapes of the JSON payloads.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Any, List, Optional, Sequence, Tuple, Iterable

import networkx as nx
import numpy as np

from .exceptions import InvalidGraphError

# Try to import TypedDict from typing, or fall back to typing_extensions
try:
    from typing import TypedDict
except ImportError:
    from typing_extensions import TypedDict

# ------------------------------------------------------------------------------------------------
# Enumerations
# ------------------------------------------------------------------------------------------------

class Partition(str, Enum):
    """Bipartitions of the three strata Γ0 (root), Γ1 (neighbours) and Γ2 (non-neighbours)."""
    S1_VS_S23 = "1:23"
    S12_VS_S3 = "12:3"
    S13_VS_S2 = "13:2"

    @classmethod
    def parse(cls, label: "str | Partition") -> "Partition":
        if isinstance(label, cls):
            return label
        for member in cls:
            if label in (member.value, member.name):
                return member
        raise ValueError(f"Unknown partition label '{label}' (expected one of 1:23, 12:3, 13:2)")


class LogBase(str, Enum):
    NATURAL = "natural"
    BASE2 = "base2"


class Convention(str, Enum):
    """Ground-state exponent: W = V ('paper') or W = V^(1/2) ('physical')."""
    PAPER = "paper"
    PHYSICAL = "physical"


class Outcome(str, Enum):
    DISTINGUISHED = "Distinguished"
    INDISTINGUISHABLE = "Indistinguishable"
    PARAMETER_MISMATCH = "ParameterMismatch"

# ------------------------------------------------------------------------------------------------
# Value types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Graph:
    """
    Simple undirected loopless graph stored as a dense, read-only 0/1 adjacency matrix.

    Args:
        adjacency: Square array-like. Copied and frozen on construction.

    Raises:
        InvalidGraphError: If the matrix is not square, not 0/1, not symmetric or has loops.
    """
    adjacency: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.adjacency, dtype=np.int64, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidGraphError(f"Adjacency must be a square matrix, got shape {matrix.shape}")
        if matrix.shape[0] < 1:
            raise InvalidGraphError("A graph needs at least one vertex")
        if not np.isin(matrix, (0, 1)).all():
            raise InvalidGraphError("Adjacency entries must be 0 or 1")
        if np.any(np.diag(matrix)):
            raise InvalidGraphError("Adjacency diagonal must be zero (loops are not allowed)")
        if not np.array_equal(matrix, matrix.T):
            raise InvalidGraphError("Adjacency must be symmetric")
        matrix.setflags(write=False)
        object.__setattr__(self, "adjacency", matrix)

    @property
    def n(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum() // 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Return the isomorphic copy in which old vertex i becomes vertex permutation[i].
        """
        perm = np.asarray(permutation, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise InvalidGraphError("Relabeling must be a permutation of the vertex set")
        inverse = np.argsort(perm)
        return Graph(self.adjacency[np.ix_(inverse, inverse)])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        rows, cols = np.nonzero(np.triu(self.adjacency))
        graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        return cls(nx.to_numpy_array(graph, nodelist=nodes, dtype=np.int64, weight=None))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        matrix = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(f"Loop at vertex {u}")
            matrix[u, v] = matrix[v, u] = 1
        return cls(matrix)


@dataclass(frozen=True)
class SrgParams:
    """Parameter tuple (n, kappa, lambda, mu) of a strongly regular graph."""
    n: int
    kappa: int
    lam: int
    mu: int

    @property
    def nonadjacent(self) -> int:
        """Size n - kappa - 1 of the third stratum."""
        return self.n - self.kappa - 1

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n, self.kappa, self.lam, self.mu)

    def to_dict(self) -> "SrgParamsPayload":
        return {'n': self.n, 'kappa': self.kappa, 'lambda': self.lam, 'mu': self.mu}

    def __str__(self) -> str:
        return f"SRG({self.n},{self.kappa},{self.lam},{self.mu})"

# ------------------------------------------------------------------------------------------------
# JSON payload shapes
# ------------------------------------------------------------------------------------------------

# 'lambda' is a keyword, hence the functional form
SrgParamsPayload = TypedDict(
    'SrgParamsPayload', {'n': int, 'kappa': int, 'lambda': int, 'mu': int}
)


class PairPayload(TypedDict):
    lambda1: float
    lambda2: float
    lambda12: float
    multiplicity: int


class BlockDiagonalizationPayload(TypedDict):
    params: Dict[str, int]
    first: List[List[float]]
    pairs: List[PairPayload]
    singlets2: List[List[float]]
    singlets3: List[List[float]]


class ModePayload(TypedDict):
    d: float
    gamma: float
    entropy: float


class EntanglementReportPayload(TypedDict):
    partition: str
    g: float
    log_base: str
    convention: str
    modes: List[ModePayload]
    total_entropy: float


class SignaturePayload(TypedDict):
    params: Dict[str, int]
    root: int
    values: List[List[float]]


class ScanClassPayload(TypedDict):
    signature: List[List[List[float]]]
    members: List[int]


class ScanReportPayload(TypedDict):
    params: Dict[str, int]
    classes: List[ScanClassPayload]


class DiscrepancyRow(TypedDict):
    equation: str
    family: str
    partition: str
    printed_value: float
    general_value: float
    discrepancy: float
    consistent: bool
    exceeds_unity: bool
    note: Optional[str]


JsonDict = Dict[str, Any]
