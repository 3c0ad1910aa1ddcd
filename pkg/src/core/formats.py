# src/core/formats.py

"""
Graph interchange formats: graph6 and DOT.

graph6 packs the upper triangle of the adjacency matrix, column by column,
six bits per byte with offset 63, behind a 1, 4 or 8 byte vertex-count
header. The bit packing itself is networkx's; this module validates input
first so each kind of malformed string raises its own error.
"""

from typing import Optional

import networkx as nx

from src.core.errors import (
    Graph6EmitError,
    InvalidByteError,
    LabelMismatchError,
    MalformedHeaderError,
    TrailingDataError,
    TruncatedPayloadError,
)
from src.core.graph import Graph
from src.models.roles import RoleLabels

GRAPH6_OFFSET = 63
GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_VERTICES = (1 << 36) - 1


# =============================================================================
# graph6
# =============================================================================


def emit_graph6(g: Graph) -> bytes:
    """Encode g as a graph6 body (no `>>graph6<<` header, no newline)."""
    if g.vertex_count > GRAPH6_MAX_VERTICES:
        raise Graph6EmitError(
            f"vertex count {g.vertex_count} outside graph6 range 0..{GRAPH6_MAX_VERTICES}"
        )
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def _decode_groups(data: bytes, what: str) -> int:
    value = 0
    for byte in data:
        if not GRAPH6_OFFSET <= byte <= 126:
            raise MalformedHeaderError(f"invalid byte {byte} in {what}")
        value = (value << 6) | (byte - GRAPH6_OFFSET)
    return value


def _decode_count(data: bytes) -> tuple[int, int]:
    """Return (vertex count, header length)."""
    if not data:
        raise MalformedHeaderError("empty graph6 string")
    first = data[0]
    if first < GRAPH6_OFFSET or first > 126:
        raise MalformedHeaderError(f"invalid header byte {first}")
    if first != 126:
        return first - GRAPH6_OFFSET, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeaderError("long vertex-count header is truncated")
        return _decode_groups(data[2:8], "vertex-count header"), 8
    if len(data) < 4:
        raise MalformedHeaderError("medium vertex-count header is truncated")
    return _decode_groups(data[1:4], "vertex-count header"), 4


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, bytes):
        return text
    try:
        return text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise InvalidByteError(
            f"non-ASCII character {exc.object[exc.start]!r} at offset {exc.start}"
        ) from exc


def parse_graph6(text: bytes | str) -> Graph:
    """
    Decode one graph6 string.

    An optional `>>graph6<<` prefix and surrounding whitespace are accepted.

    Raises:
        MalformedHeaderError: missing or invalid vertex-count header
        InvalidByteError: payload byte outside 63..126, or a non-ASCII character
        TruncatedPayloadError: fewer payload bytes than the header requires
        TrailingDataError: more payload bytes than the header allows
    """
    data = _as_bytes(text).strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]

    n, header_length = _decode_count(data)
    payload = data[header_length:]
    needed = (n * (n - 1) // 2 + 5) // 6

    for position, byte in enumerate(payload):
        if not GRAPH6_OFFSET <= byte <= 126:
            raise InvalidByteError(f"invalid payload byte {byte} at offset {header_length + position}")
    if len(payload) < needed:
        raise TruncatedPayloadError(f"payload has {len(payload)} bytes, {needed} required for n={n}")
    if len(payload) > needed:
        raise TrailingDataError(f"payload has {len(payload)} bytes, only {needed} allowed for n={n}")

    return Graph.from_networkx(nx.from_graph6_bytes(data))


def parse_graph6_lines(blob: bytes) -> list[Graph]:
    """Decode a graph6 file holding one graph per non-empty line."""
    return [parse_graph6(line) for line in blob.splitlines() if line.strip()]


# =============================================================================
# DOT
# =============================================================================


def emit_dot(g: Graph, labels: Optional[RoleLabels] = None, name: str = "G") -> str:
    """
    Render g as an undirected DOT graph.

    One node statement per vertex (with `role` and `owner` attributes when
    labels are given), then one edge statement per edge in canonical order.
    """
    lines = [f"graph {name} {{"]
    if labels is not None and labels.vertex_count != g.vertex_count:
        raise LabelMismatchError(
            f"labels describe {labels.vertex_count} vertices, graph has {g.vertex_count}"
        )

    for v in g.vertices():
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [role="{labels.roles[v].value}", owner={labels.owner[v]}];')
    for edge in g.edges():
        lines.append(f"  {edge.u} -- {edge.v};")

    lines.append("}")
    return "\n".join(lines) + "\n"
