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
A12 singular-value signatures of strongly regular graphs.

The block A12 between the neighbours and the non-neighbours of a root vertex
has singular values that depend on the graph and not only on its parameters.
Their multiset with multiplicities is an isomorphism invariant once it is
taken over all roots, so two SRGs with equal parameters but different
signatures are not isomorphic. Equal signatures prove nothing.

Every signature satisfies two identities that double as integrity checks:
the top value is μ sqrt((n-κ-1)/κ), and Σ value² · multiplicity = μ(n-κ-1).
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
import math
from dataclasses import dataclass
from functools import partial
from types import ModuleType
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from ..core.exceptions import MixedParametersError, SignatureError
from ..core.types import (
    Graph,
    Outcome,
    ScanClassPayload,
    ScanReportPayload,
    SignaturePayload,
    SrgParams,
)
from ..data.validators import srg_params
from ..spectral.stratification import extract_blocks, group_descending, stratify
from ..utils.config_loader import config_value
from ..utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Entry = Tuple[float, int]
Witness = Tuple[Optional[Entry], Optional[Entry]]

# ------------------------------------------------------------------------------------------------
# Types
# ------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class A12Signature:
    """Descending (singular value, multiplicity) pairs of A12 seen from ``root``."""
    values: Tuple[Entry, ...]
    params: SrgParams
    root: int

    @property
    def key(self) -> Tuple[Entry, ...]:
        # rounded so that sorting is stable under SVD noise
        return tuple((round(value, 9), mult) for value, mult in self.values)

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.values)

    def to_dict(self) -> SignaturePayload:
        return {
            'params': self.params.to_dict(),
            'root': self.root,
            'values': [[value, mult] for value, mult in self.values],
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a signature comparison, with the first differing entries when distinguished."""
    outcome: Outcome
    witness: Optional[Witness] = None

    def describe(self) -> str:
        if self.outcome is Outcome.INDISTINGUISHABLE:
            return f"{self.outcome.value} (not distinguished by A12 spectrum)"
        if self.outcome is Outcome.DISTINGUISHED and self.witness is not None:
            left, right = (_format_entry(entry) for entry in self.witness)
            return f"{self.outcome.value}: {left} vs {right}"
        return self.outcome.value

    def to_dict(self) -> dict:
        return {
            'outcome': self.outcome.value,
            'witness': None if self.witness is None else [
                None if entry is None else [entry[0], entry[1]] for entry in self.witness
            ],
        }


@dataclass(frozen=True)
class SignatureClass:
    """Catalog graphs (by index) sharing one canonical signature list."""
    signature: Tuple[A12Signature, ...]
    members: Tuple[int, ...]

    def to_dict(self) -> ScanClassPayload:
        return {
            'signature': [[[value, mult] for value, mult in sig.values] for sig in self.signature],
            'members': list(self.members),
        }


@dataclass(frozen=True)
class ScanReport:
    params: SrgParams
    classes: Tuple[SignatureClass, ...]

    def to_dict(self) -> ScanReportPayload:
        return {'params': self.params.to_dict(), 'classes': [cls.to_dict() for cls in self.classes]}

# ------------------------------------------------------------------------------------------------
# Signatures
# ------------------------------------------------------------------------------------------------

def _format_entry(entry: Optional[Entry]) -> str:
    if entry is None:
        return "(missing)"
    return f"{entry[0]:.12g}:{entry[1]}"

def _check_identities(signature: A12Signature, config: Optional[ModuleType] = None) -> None:
    params = signature.params
    far = params.nonadjacent
    expected_top = params.mu * math.sqrt(far / params.kappa)
    frobenius = sum(value * value * mult for value, mult in signature.values)
    top_residual = abs(signature.values[0][0] - expected_top)
    frobenius_residual = abs(frobenius - params.mu * far)
    logger.debug(f"Signature of {params} at root {signature.root}: top residual {top_residual:.3e}, "
                 f"Frobenius residual {frobenius_residual:.3e}")
    if (top_residual > config_value(config, 'TOLERANCES', 'signature_top_value')
            or frobenius_residual > config_value(config, 'TOLERANCES', 'signature_frobenius')):
        raise SignatureError(
            f"A12 spectrum of {params} at root {signature.root} violates the top-value or Frobenius identity"
        )
    if signature.total_multiplicity != min(params.kappa, far):
        raise SignatureError(f"A12 spectrum of {params} has {signature.total_multiplicity} values, "
                             f"expected {min(params.kappa, far)}")

def a12_signature(graph: Graph, root: int = 0, tol: Optional[float] = None,
                  config: Optional[ModuleType] = None, params: Optional[SrgParams] = None) -> A12Signature:
    """
    Singular values of A12 with multiplicities.

    Args:
        graph: The SRG.
        root: Reference vertex.
        tol: Relative gap below which consecutive values form one multiplet;
            ``multiplicity_grouping`` from the configuration when omitted.
        config: Optional numerical configuration module.
        params: SRG parameters, verified from the graph when omitted.

    Returns:
        A12Signature: Values in descending order, zeros included.

    Raises:
        SrgVerificationError: If the graph is not an SRG.
        StratificationError: If the blocks violate the SRG identities.
        SignatureError: If the spectrum breaks the top-value or Frobenius identity.
    """
    if tol is None:
        tol = config_value(config, 'TOLERANCES', 'multiplicity_grouping')
    blocks = extract_blocks(graph, stratify(graph, root), params or srg_params(graph))

    sigma = linalg.svdvals(blocks.a12.astype(float))
    sigma[sigma < config_value(config, 'TOLERANCES', 'kernel_relative') * max(sigma[0], 1.0)] = 0.0

    values = tuple(
        (float(np.mean(sigma[group])), len(group)) for group in group_descending(sigma, tol)
    )
    signature = A12Signature(values=values, params=blocks.params, root=int(root))
    _check_identities(signature, config)
    return signature

def signatures_match(a: Union[A12Signature, Sequence[Entry]], b: Union[A12Signature, Sequence[Entry]],
                     tol: float) -> bool:
    return compare_signatures(a, b, tol) is None

def compare_signatures(a: Union[A12Signature, Sequence[Entry]], b: Union[A12Signature, Sequence[Entry]],
                       tol: float = 1e-6) -> Optional[Witness]:
    """
    Compare two signatures entry by entry.

    Accepts `A12Signature` objects or plain (value, multiplicity) sequences,
    e.g. lists transcribed from printed tables.

    Returns:
        None when every multiplicity agrees and every value agrees within ``tol``;
        otherwise the first differing pair of entries (None where one list ran out).
    """
    left = list(a.values if isinstance(a, A12Signature) else a)
    right = list(b.values if isinstance(b, A12Signature) else b)
    for index in range(max(len(left), len(right))):
        x = tuple(left[index]) if index < len(left) else None
        y = tuple(right[index]) if index < len(right) else None
        if x is None or y is None or x[1] != y[1] or abs(x[0] - y[0]) > tol:
            return (x, y)
    return None

def canonical_signature(graph: Graph, tol: Optional[float] = None, config: Optional[ModuleType] = None,
                        workers: Optional[int] = None) -> List[A12Signature]:
    """
    Distinct A12 signatures over every root, in descending order.

    Args:
        graph: The SRG.
        tol: Absolute value tolerance for treating two signatures as equal;
            ``signature_compare`` from the configuration when omitted.
        config: Optional numerical configuration module.
        workers: Worker threads for the per-root computations.

    Returns:
        List[A12Signature]: One entry per distinct signature, labelled with the
        first root that produced it. Vertex-transitive graphs give a single entry.
    """
    if tol is None:
        tol = config_value(config, 'TOLERANCES', 'signature_compare')
    params = srg_params(graph)
    per_root = ordered_map(partial(a12_signature, graph, config=config, params=params),
                           range(graph.n), workers)

    distinct: List[A12Signature] = []
    for signature in per_root:
        if not any(signatures_match(signature, seen, tol) for seen in distinct):
            distinct.append(signature)
    distinct.sort(key=lambda sig: sig.key, reverse=True)
    logger.info(f"{params}: {len(distinct)} distinct A12 signature(s) over {graph.n} roots")
    return distinct

def _lists_witness(a: Sequence[A12Signature], b: Sequence[A12Signature], tol: float) -> Optional[Witness]:
    for index in range(max(len(a), len(b))):
        if index >= len(a) or index >= len(b):
            present = a[index] if index < len(a) else b[index]
            entry = present.values[0]
            return (entry, None) if index < len(a) else (None, entry)
        witness = compare_signatures(a[index], b[index], tol)
        if witness is not None:
            return witness
    return None

def distinguish(a: Graph, b: Graph, tol: Optional[float] = None, config: Optional[ModuleType] = None,
                workers: Optional[int] = None) -> Verdict:
    """
    Try to tell two SRGs apart by their canonical A12 signatures.

    Returns:
        Verdict: ParameterMismatch when the SRG parameters differ; Distinguished
        (which proves non-isomorphism) when the signature lists differ; otherwise
        Indistinguishable, which proves nothing.
    """
    if tol is None:
        tol = config_value(config, 'TOLERANCES', 'signature_compare')
    params_a, params_b = srg_params(a), srg_params(b)
    if params_a != params_b:
        logger.info(f"Parameter mismatch: {params_a} vs {params_b}")
        return Verdict(Outcome.PARAMETER_MISMATCH)

    witness = _lists_witness(canonical_signature(a, tol, config, workers),
                             canonical_signature(b, tol, config, workers), tol)
    if witness is None:
        return Verdict(Outcome.INDISTINGUISHABLE)
    return Verdict(Outcome.DISTINGUISHED, witness)

# ------------------------------------------------------------------------------------------------
# Catalog scans
# ------------------------------------------------------------------------------------------------

def scan_catalog(graphs: Sequence[Graph], tol: Optional[float] = None, config: Optional[ModuleType] = None,
                 workers: Optional[int] = None) -> ScanReport:
    """
    Partition a catalog of SRGs into classes of equal canonical signatures.

    Args:
        graphs: Catalog graphs, all with the same parameters.
        tol: Signature comparison tolerance.
        config: Optional numerical configuration module.
        workers: Worker threads, one graph per task.

    Returns:
        ScanReport: Classes sorted by descending signature, members by catalog index.

    Raises:
        MixedParametersError: If the graphs do not share one parameter set.
        SignatureError: If the catalog is empty.
    """
    if not graphs:
        raise SignatureError("Cannot scan an empty catalog")
    if tol is None:
        tol = config_value(config, 'TOLERANCES', 'signature_compare')

    params = [srg_params(graph) for graph in graphs]
    if len(set(params)) != 1:
        raise MixedParametersError(f"Catalog mixes parameter sets: {', '.join(sorted(set(map(str, params))))}")

    canonical = ordered_map(partial(canonical_signature, tol=tol, config=config, workers=1), graphs, workers)

    classes: List[Tuple[List[A12Signature], List[int]]] = []
    for index, signatures in enumerate(canonical):
        for representative, members in classes:
            if _lists_witness(representative, signatures, tol) is None:
                members.append(index)
                break
        else:
            classes.append((signatures, [index]))

    classes.sort(key=lambda item: tuple(sig.key for sig in item[0]), reverse=True)
    report = ScanReport(
        params=params[0],
        classes=tuple(SignatureClass(tuple(sigs), tuple(members)) for sigs, members in classes),
    )
    logger.info(f"Scanned {len(graphs)} graph(s) with {params[0]}: {len(report.classes)} signature class(es)")
    return report
