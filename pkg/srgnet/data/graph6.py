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
graph6 codec.

graph6 stores one undirected graph per ASCII line: a vertex-count header
followed by the upper triangle of the adjacency matrix, read column by column
(x[0][1], x[0][2], x[1][2], x[0][3], ...), packed big-endian into 6-bit groups
offset by 63. The last group is padded with zero bits.

The decoder is strict: wrong data lengths and non-zero padding are rejected
instead of silently repaired, so ``write_graph6(parse_graph6(line)[0]) == line``
holds for every line it accepts in canonical form.
"""

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

import logging
from typing import List, Tuple, Union, Iterable

import numpy as np

from ..core.constants import (
    GRAPH6_HEADER,
    GRAPH6_OFFSET,
    GRAPH6_LONG_MARKER,
    GRAPH6_SHORT_LIMIT,
    GRAPH6_MEDIUM_LIMIT,
)
from ..core.exceptions import (
    Graph6Error,
    MalformedHeaderError,
    TruncatedBitstreamError,
    NonCanonicalPaddingError,
)
from ..core.types import Graph

logger = logging.getLogger(__name__)

_BIT_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)

# ------------------------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------------------------

def _column_major_upper(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Row and column indices of the strict upper triangle in graph6 bit order."""
    rows, cols = np.triu_indices(n, k=1)
    order = np.lexsort((rows, cols))
    return rows[order], cols[order]

def _six_bit_values(payload: bytes) -> np.ndarray:
    values = np.frombuffer(payload, dtype=np.uint8).astype(np.int64) - GRAPH6_OFFSET
    if values.size and (values.min() < 0 or values.max() > 63):
        raise Graph6Error("graph6 data bytes must lie in the printable range 63..126")
    return values

def _decode_size(line: bytes) -> Tuple[int, int]:
    """Return (vertex count, offset of the first data byte)."""
    if not line:
        raise MalformedHeaderError("Empty graph6 line")

    first = line[0]
    if first in (ord(':'), ord('&')):
        raise MalformedHeaderError("sparse6 and digraph6 lines are not supported")
    if first < GRAPH6_OFFSET or first > GRAPH6_LONG_MARKER:
        raise MalformedHeaderError(f"Invalid graph6 header byte {first}")

    if first != GRAPH6_LONG_MARKER:
        n, offset = first - GRAPH6_OFFSET, 1
    else:
        wide = len(line) > 1 and line[1] == GRAPH6_LONG_MARKER
        start, width = (2, 6) if wide else (1, 3)
        size_bytes = line[start:start + width]
        if len(size_bytes) != width:
            raise MalformedHeaderError("graph6 long-form header is truncated")
        try:
            digits = _six_bit_values(size_bytes)
        except Graph6Error as e:
            raise MalformedHeaderError(str(e)) from e
        n = 0
        for digit in digits.tolist():
            n = (n << 6) | digit
        offset = start + width

    if n == 0:
        raise MalformedHeaderError("graph6 graphs must have at least one vertex")
    return n, offset

def _encode_size(n: int) -> bytes:
    if n <= GRAPH6_SHORT_LIMIT:
        return bytes([n + GRAPH6_OFFSET])
    if n <= GRAPH6_MEDIUM_LIMIT:
        shifts, prefix = (12, 6, 0), bytes([GRAPH6_LONG_MARKER])
    else:
        shifts, prefix = (30, 24, 18, 12, 6, 0), bytes([GRAPH6_LONG_MARKER, GRAPH6_LONG_MARKER])
    return prefix + bytes(((n >> s) & 63) + GRAPH6_OFFSET for s in shifts)

def _strip_line(line: bytes) -> bytes:
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):].strip()
    return line

# ------------------------------------------------------------------------------------------------
# Codec
# ------------------------------------------------------------------------------------------------

def parse_graph6_line(line: Union[bytes, str]) -> Graph:
    """
    Decode a single graph6 line.

    Args:
        line: One encoded graph, with or without the optional ``>>graph6<<`` prefix.

    Returns:
        Graph: The decoded graph.

    Raises:
        MalformedHeaderError: If the vertex-count header is invalid.
        TruncatedBitstreamError: If the data length does not match the header.
        NonCanonicalPaddingError: If the padding bits are not zero.
        Graph6Error: If a data byte is outside 63..126.
    """
    if isinstance(line, str):
        line = line.encode('ascii')
    line = _strip_line(line)

    n, offset = _decode_size(line)
    payload = line[offset:]
    bit_count = n * (n - 1) // 2
    expected = -(-bit_count // 6)
    if len(payload) != expected:
        raise TruncatedBitstreamError(
            f"graph6 line for n={n} needs {expected} data bytes, got {len(payload)}"
        )

    values = _six_bit_values(payload)
    bits = np.unpackbits(values.astype(np.uint8)[:, None], axis=1)[:, 2:].ravel()
    if bits[bit_count:].any():
        raise NonCanonicalPaddingError("graph6 padding bits must be zero")

    rows, cols = _column_major_upper(n)
    adjacency = np.zeros((n, n), dtype=np.int64)
    adjacency[rows, cols] = bits[:bit_count]
    adjacency[cols, rows] = bits[:bit_count]
    return Graph(adjacency)

def parse_graph6(text: Union[bytes, str]) -> List[Graph]:
    """
    Decode every graph in a graph6 document (one graph per line, blank lines ignored).

    Raises:
        Graph6Error: Any decoding failure; the message names the offending line.
    """
    if isinstance(text, str):
        text = text.encode('ascii')

    graphs = []
    for number, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        try:
            graphs.append(parse_graph6_line(raw))
        except Graph6Error as e:
            raise type(e)(f"line {number}: {e}") from e
    logger.debug(f"Decoded {len(graphs)} graph6 lines")
    return graphs

def write_graph6(graph: Graph, header: bool = False) -> bytes:
    """
    Encode a graph as a canonical graph6 line (minimal header, zero padding, no newline).

    Args:
        graph: The graph to encode.
        header: Prepend the optional ``>>graph6<<`` marker.
    """
    n = graph.n
    rows, cols = _column_major_upper(n)
    bits = graph.adjacency[rows, cols]
    padded = np.zeros(-(-bits.size // 6) * 6, dtype=np.int64)
    padded[:bits.size] = bits
    data = bytes((padded.reshape(-1, 6) @ _BIT_WEIGHTS + GRAPH6_OFFSET).tolist())
    line = _encode_size(n) + data
    return GRAPH6_HEADER + line if header else line

def write_graph6_lines(graphs: Iterable[Graph]) -> bytes:
    """Encode several graphs, one line each, newline terminated."""
    return b"".join(write_graph6(graph) + b"\n" for graph in graphs)
