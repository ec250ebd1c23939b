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
This module writes CSV reports for coupling sweeps, signature scans and printed-formula checks.

Entropy columns of sweep reports are always in nats, whatever log base the
reports were computed with.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import csv
import math
from types import ModuleType
from typing import Dict, Iterable, List, Optional, Sequence, TextIO

from .core.constants import DISCREPANCY_CSV_COLUMNS, SIGNATURE_CSV_COLUMNS, SWEEP_CSV_COLUMNS
from .core.types import DiscrepancyRow
from .entanglement.schmidt import EntanglementReport, entropy_from_gamma
from .signature.a12 import A12Signature, ScanReport
from .utils.formatting import format_number

# ------------------------------------------------------------------------------------------------
# Functions
# ------------------------------------------------------------------------------------------------

def sweep_rows(reports: Iterable[EntanglementReport]) -> List[Dict[str, object]]:
    """One row per (g, mode), sorted by g ascending, then by mode index."""
    rows = []
    for report in sorted(reports, key=lambda r: r.g):
        nats = [entropy_from_gamma(mode.gamma) for mode in report.modes]
        total = math.fsum(nats)
        for index, (mode, entropy) in enumerate(zip(report.modes, nats)):
            rows.append({
                'g': report.g,
                'partition': report.partition,
                'mode_index': index,
                'd': mode.d,
                'gamma': mode.gamma,
                'entropy_nats': entropy,
                'total_entropy': total,
            })
    return rows

def signature_rows(signatures: Sequence[A12Signature], graph: str = "0", class_index: int = 0) -> List[Dict[str, object]]:
    return [
        {'graph': graph, 'class': class_index, 'value': value, 'multiplicity': mult}
        for signature in signatures
        for value, mult in signature.values
    ]

def scan_rows(report: ScanReport, labels: Optional[Sequence[str]] = None) -> List[Dict[str, object]]:
    """One row per (graph, value, multiplicity), graphs named by ``labels`` or catalog index."""
    rows = []
    for class_index, signature_class in enumerate(report.classes):
        for member in signature_class.members:
            name = labels[member] if labels is not None else str(member)
            rows.extend(signature_rows(signature_class.signature, name, class_index))
    return rows

def _write(stream: TextIO, columns: Sequence[str], rows: Iterable[Dict[str, object]],
           config: Optional[ModuleType]) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({
            key: "" if value is None else (value if isinstance(value, str) else format_number(value, config))
            for key, value in row.items()
        })

def write_sweep_csv(stream: TextIO, reports: Iterable[EntanglementReport],
                    config: Optional[ModuleType] = None) -> None:
    _write(stream, SWEEP_CSV_COLUMNS, sweep_rows(reports), config)

def write_signature_csv(stream: TextIO, signatures: Sequence[A12Signature],
                        config: Optional[ModuleType] = None) -> None:
    _write(stream, SIGNATURE_CSV_COLUMNS, signature_rows(signatures), config)

def write_scan_csv(stream: TextIO, report: ScanReport, labels: Optional[Sequence[str]] = None,
                   config: Optional[ModuleType] = None) -> None:
    _write(stream, SIGNATURE_CSV_COLUMNS, scan_rows(report, labels), config)

def write_discrepancy_csv(stream: TextIO, rows: Iterable[DiscrepancyRow],
                          config: Optional[ModuleType] = None) -> None:
    _write(stream, DISCREPANCY_CSV_COLUMNS, rows, config)
