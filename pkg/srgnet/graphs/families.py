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
Deterministic generators for the strongly regular graph families.

Vertex orderings are fixed so that outputs are reproducible byte for byte:
  - product constructions (lattice, Latin square, Shrikhande) are row-major,
    vertex (a, b) has index a * nu + b;
  - subset constructions (triangular, Kneser, Petersen) list 2-subsets in
    lexicographic order;
  - multipartite constructions put vertex v in part v // part_size.

Every generated graph is verified against the family's parameter formula
before it is returned.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from ..core.exceptions import FamilyError, SizeTooSmallError
from ..core.types import Graph, SrgParams
from ..data.validators import srg_params

logger = logging.getLogger(__name__)

# ------------------------------------------------------------------------------------------------
# Family descriptions
# ------------------------------------------------------------------------------------------------

class Family(str, Enum):
    COMPLETE_BIPARTITE = "complete-bipartite"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    COCKTAIL_PARTY = "cocktail-party"
    TRIANGULAR = "triangular"
    LATTICE = "lattice"
    LATIN_SQUARE_CYCLIC = "latin-square"
    KNESER62 = "kneser62"
    PETERSEN = "petersen"
    SHRIKHANDE = "shrikhande"


# Size arguments of each family, with their minimum values
SIZE_ARGUMENTS: Mapping[Family, Tuple[Tuple[str, int], ...]] = {
    Family.COMPLETE_BIPARTITE: (('m', 2),),
    Family.COMPLETE_MULTIPARTITE: (('parts', 2), ('part_size', 2)),
    Family.COCKTAIL_PARTY: (('q', 2),),
    Family.TRIANGULAR: (('nu', 4),),
    Family.LATTICE: (('nu', 2),),
    Family.LATIN_SQUARE_CYCLIC: (('nu', 3),),
    Family.KNESER62: (),
    Family.PETERSEN: (),
    Family.SHRIKHANDE: (),
}


@dataclass(frozen=True)
class FamilySpec:
    """
    A family member, e.g. ``FamilySpec(Family.TRIANGULAR, (8,))``.

    Raises:
        SizeTooSmallError: If the size tuple has the wrong length or violates a minimum.
    """
    family: Family
    size: Tuple[int, ...] = ()

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, 'family', family)
        object.__setattr__(self, 'size', tuple(int(value) for value in self.size))

        arguments = SIZE_ARGUMENTS[family]
        if len(self.size) != len(arguments):
            names = ", ".join(name for name, _ in arguments) or "no size arguments"
            raise SizeTooSmallError(f"{family.value} takes {names}, got {self.size}")
        for (name, minimum), value in zip(arguments, self.size):
            if value < minimum:
                raise SizeTooSmallError(f"{family.value} needs {name} >= {minimum}, got {value}")

    @classmethod
    def from_arguments(cls, family: "Family | str", **sizes: int) -> "FamilySpec":
        """Build a spec from keyword sizes, e.g. ``from_arguments('triangular', nu=8)``."""
        family = Family(family)
        missing = [name for name, _ in SIZE_ARGUMENTS[family] if sizes.get(name) is None]
        if missing:
            raise SizeTooSmallError(f"{family.value} needs {', '.join(missing)}")
        return cls(family, tuple(sizes[name] for name, _ in SIZE_ARGUMENTS[family]))

    @property
    def sizes(self) -> Dict[str, int]:
        return {name: value for (name, _), value in zip(SIZE_ARGUMENTS[self.family], self.size)}

    @property
    def label(self) -> str:
        args = ",".join(str(value) for value in self.size)
        return f"{self.family.value}({args})" if args else self.family.value

    @property
    def expected_params(self) -> SrgParams:
        """Parameters given by the family formula."""
        family, size = self.family, self.size
        if family is Family.COMPLETE_BIPARTITE:
            (m,) = size
            return SrgParams(2 * m, m, 0, m)
        if family is Family.COMPLETE_MULTIPARTITE:
            t, s = size
            return SrgParams(t * s, (t - 1) * s, (t - 2) * s, (t - 1) * s)
        if family is Family.COCKTAIL_PARTY:
            (q,) = size
            return SrgParams(2 * q, 2 * q - 2, 2 * q - 4, 2 * q - 2)
        if family is Family.TRIANGULAR:
            (nu,) = size
            return SrgParams(nu * (nu - 1) // 2, 2 * (nu - 2), nu - 2, 4)
        if family is Family.LATTICE:
            (nu,) = size
            return SrgParams(nu * nu, 2 * (nu - 1), nu - 2, 2)
        if family is Family.LATIN_SQUARE_CYCLIC:
            (nu,) = size
            return SrgParams(nu * nu, 3 * (nu - 1), nu, 6)
        if family is Family.KNESER62:
            # generalized quadrangle GQ(2,2): ((st+1)(s+1), s(t+1), s-1, t+1)
            return SrgParams(15, 6, 1, 3)
        if family is Family.PETERSEN:
            return SrgParams(10, 3, 0, 1)
        return SrgParams(16, 6, 2, 2)

# ------------------------------------------------------------------------------------------------
# Builders
# ------------------------------------------------------------------------------------------------

def complete_multipartite_graph(parts: int, part_size: int) -> Graph:
    """K_{part_size, ..., part_size}: vertices in different parts are adjacent."""
    labels = np.arange(parts * part_size) // part_size
    return Graph((labels[:, None] != labels[None, :]).astype(np.int64))

def complete_bipartite_graph(m: int) -> Graph:
    return complete_multipartite_graph(2, m)

def cocktail_party_graph(q: int) -> Graph:
    """K_{q x 2}: vertices 2i and 2i+1 are the only non-adjacent pairs."""
    return complete_multipartite_graph(q, 2)

def triangular_graph(nu: int) -> Graph:
    """T(nu): 2-subsets of {0..nu-1}, adjacent when they share an element."""
    pairs = list(combinations(range(nu), 2))
    return Graph.from_edges(
        len(pairs),
        ((i, j) for (i, p), (j, q) in combinations(enumerate(pairs), 2) if set(p) & set(q)),
    )

def kneser_graph(ground: int, subset: int) -> Graph:
    """K(ground, subset): subsets in lexicographic order, adjacent when disjoint."""
    subsets = list(combinations(range(ground), subset))
    return Graph.from_edges(
        len(subsets),
        ((i, j) for (i, p), (j, q) in combinations(enumerate(subsets), 2) if not set(p) & set(q)),
    )

def lattice_graph(nu: int) -> Graph:
    """Rook's graph nu x nu: A = I (x) (J - I) + (J - I) (x) I."""
    identity = np.eye(nu, dtype=np.int64)
    off = np.ones((nu, nu), dtype=np.int64) - identity
    return Graph(np.kron(identity, off) + np.kron(off, identity))

def latin_square_graph(square: Sequence[Sequence[int]]) -> Graph:
    """
    Latin square graph: cells (row, column) adjacent when they share a row, a
    column or a symbol.

    Raises:
        FamilyError: If ``square`` is not a Latin square.
    """
    cells = np.asarray(square, dtype=np.int64)
    nu = cells.shape[0]
    if cells.ndim != 2 or cells.shape != (nu, nu):
        raise FamilyError("A Latin square must be a square array")
    symbols = sorted(set(cells[0].tolist()))
    if len(symbols) != nu or any(sorted(row) != symbols for row in cells.tolist()) \
            or any(sorted(col) != symbols for col in cells.T.tolist()):
        raise FamilyError("Every row and column must be a permutation of the same symbols")

    rows, cols = np.divmod(np.arange(nu * nu), nu)
    values = cells.ravel()
    same = (
        (rows[:, None] == rows[None, :])
        | (cols[:, None] == cols[None, :])
        | (values[:, None] == values[None, :])
    )
    np.fill_diagonal(same, False)
    return Graph(same.astype(np.int64))

def cyclic_latin_square(nu: int) -> np.ndarray:
    """Cayley table of Z_nu: cell (a, b) holds (a + b) mod nu."""
    index = np.arange(nu)
    return (index[:, None] + index[None, :]) % nu

def shrikhande_graph() -> Graph:
    """Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    steps = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    vertices = [(a, b) for a in range(4) for b in range(4)]
    return Graph.from_edges(
        16,
        (
            (i, j)
            for (i, (a, b)), (j, (c, d)) in combinations(enumerate(vertices), 2)
            if ((c - a) % 4, (d - b) % 4) in steps
        ),
    )

def _build(spec: FamilySpec) -> Graph:
    family, size = spec.family, spec.size
    if family is Family.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(*size)
    if family is Family.COMPLETE_MULTIPARTITE:
        return complete_multipartite_graph(*size)
    if family is Family.COCKTAIL_PARTY:
        return cocktail_party_graph(*size)
    if family is Family.TRIANGULAR:
        return triangular_graph(*size)
    if family is Family.LATTICE:
        return lattice_graph(*size)
    if family is Family.LATIN_SQUARE_CYCLIC:
        return latin_square_graph(cyclic_latin_square(*size))
    if family is Family.KNESER62:
        return kneser_graph(6, 2)
    if family is Family.PETERSEN:
        return kneser_graph(5, 2)
    return shrikhande_graph()

# ------------------------------------------------------------------------------------------------
# Public entry point
# ------------------------------------------------------------------------------------------------

def generate(spec: FamilySpec) -> Graph:
    """
    Generate a family member and verify its parameters.

    Args:
        spec: Family and size.

    Returns:
        Graph: The generated graph, with ``srg_params(graph) == spec.expected_params``.

    Raises:
        FamilyError: If the generated graph does not have the expected parameters.
    """
    graph = _build(spec)
    params = srg_params(graph)
    if params != spec.expected_params:
        raise FamilyError(f"{spec.label} produced {params}, expected {spec.expected_params}")
    logger.info(f"Generated {spec.label}: {params}")
    return graph
