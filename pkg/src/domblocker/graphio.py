"""Graph serialization: graph6, DOT, and edge-list JSON.

graph6 follows the standard format (short form for n <= 62, the 4-byte long
form up to n < 258048, and the 8-byte form beyond): upper-triangle adjacency
bits in column-major order, packed 6 bits per printable byte (offset 63).
Labels do not survive graph6; the edge-list JSON form carries them losslessly.
"""

from __future__ import annotations

import json
from typing import Optional

from .graphs import LabeledGraph, VertexLabel, PLAIN

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed serialized graph, reported with the offending position."""


def _encode_n(n: int) -> str:
    if n < 0:
        raise FormatError(f"negative vertex count {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) + chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    raise FormatError(f"vertex count {n} too large for graph6")


def _decode_n(data: str) -> tuple[int, int]:
    """Returns (n, number of bytes consumed)."""
    if not data:
        raise FormatError("empty graph6 string")
    c = ord(data[0]) - 63
    if c < 0 or c > 63:
        raise FormatError(f"byte 0 out of graph6 range: {data[0]!r}")
    if c != 63:
        return c, 1
    if len(data) < 2 or data[1] != chr(126):
        if len(data) < 4:
            raise FormatError("truncated long-form vertex count at byte 1")
        n = 0
        for i in (1, 2, 3):
            b = ord(data[i]) - 63
            if b < 0 or b > 63:
                raise FormatError(f"byte {i} out of graph6 range: {data[i]!r}")
            n = (n << 6) | b
        return n, 4
    if len(data) < 8:
        raise FormatError("truncated 8-byte vertex count at byte 2")
    n = 0
    for i in range(2, 8):
        b = ord(data[i]) - 63
        if b < 0 or b > 63:
            raise FormatError(f"byte {i} out of graph6 range: {data[i]!r}")
        n = (n << 6) | b
    return n, 8


def emit_graph6(g: LabeledGraph, header: bool = False) -> str:
    """Encode the adjacency structure (labels are dropped)."""
    out = [_encode_n(g.n)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = (word << 1) | b
        out.append(chr(word + 63))
    text = "".join(out)
    return GRAPH6_HEADER + text if header else text


def parse_graph6(text: str) -> LabeledGraph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise FormatError("empty graph6 string")
    n, consumed = _decode_n(data)
    payload = data[consumed:]
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(payload) < need_bytes:
        raise FormatError(
            f"truncated graph6 payload: need {need_bytes} bytes for n={n}, "
            f"got {len(payload)} (at byte {consumed + len(payload)})"
        )
    if len(payload) > need_bytes:
        raise FormatError(f"trailing data after graph6 payload at byte {consumed + need_bytes}")
    bits = []
    for pos, ch in enumerate(payload):
        b = ord(ch) - 63
        if b < 0 or b > 63:
            raise FormatError(f"byte {consumed + pos} out of graph6 range: {ch!r}")
        for s in range(5, -1, -1):
            bits.append((b >> s) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return LabeledGraph.from_edges(n, edges)


# -- edge-list JSON ----------------------------------------------------------


def graph_to_json_dict(g: LabeledGraph) -> dict:
    d = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if any(lbl != PLAIN for lbl in g.labels):
        d["labels"] = [lbl.to_dict() for lbl in g.labels]
    return d


def emit_edge_list_json(g: LabeledGraph, indent: Optional[int] = None) -> str:
    return json.dumps(graph_to_json_dict(g), indent=indent, sort_keys=True)


def graph_from_json_dict(d: dict) -> LabeledGraph:
    try:
        n = d["n"]
        raw_edges = d["edges"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"edge-list JSON missing field: {exc}") from exc
    if not isinstance(n, int) or n < 0:
        raise FormatError(f"bad vertex count {n!r}")
    edges = []
    for pos, e in enumerate(raw_edges):
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise FormatError(f"edge #{pos} is not a pair: {e!r}")
        edges.append((e[0], e[1]))
    labels = None
    if "labels" in d:
        raw = d["labels"]
        if len(raw) != n:
            raise FormatError(f"labels array has length {len(raw)}, expected {n}")
        labels = [VertexLabel.from_dict(x) for x in raw]
    try:
        return LabeledGraph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_edge_list_json(text: str) -> LabeledGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return graph_from_json_dict(d)


# -- DOT ----------------------------------------------------------------------

_KIND_COLOR = {
    "true": "palegreen",
    "false": "lightcoral",
    "cycle_u": "lightgray",
    "clause": "lightskyblue",
    "variable": "orange",
    "l": "plum",
    "port": "cyan",
    "gadget_u": "wheat",
    "gadget_w": "khaki",
    "gadget_a": "mistyrose",
    "gadget_b": "thistle",
    "gadget_c": "lightcyan",
    "pos_literal": "palegreen",
    "neg_literal": "lightcoral",
    "triangle_u": "lightgray",
}

_KIND_NAME = {
    "true": "T",
    "false": "F",
    "cycle_u": "u",
    "clause": "c",
    "variable": "x",
    "l": "l",
    "port": "v",
    "gadget_u": "u",
    "gadget_w": "w",
    "gadget_a": "a",
    "gadget_b": "b",
    "gadget_c": "c",
    "pos_literal": "x",
    "neg_literal": "~x",
    "triangle_u": "u",
}


def _label_text(v: int, lbl: VertexLabel) -> str:
    if lbl.kind == "plain":
        return str(v)
    base = _KIND_NAME[lbl.kind]
    parts = []
    if lbl.var is not None:
        parts.append(f"x{lbl.var}")
    if lbl.clause is not None:
        parts.append(f"c{lbl.clause}")
    if lbl.source is not None:
        parts.append(f"s{lbl.source}")
    if lbl.index is not None:
        parts.append(str(lbl.index))
    return f"{base}[{','.join(parts)}] #{v}"


def emit_dot(g: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for v in range(g.n):
        lbl = g.labels[v]
        color = _KIND_COLOR.get(lbl.kind, "white")
        lines.append(f'  {v} [label="{_label_text(v, lbl)}", fillcolor="{color}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
