"""Edge-list text format, DOT export and JSON helpers."""
from __future__ import annotations

import json
import logging
import math
from typing import Iterable, Mapping

from .errors import ParseError
from .graph import Edge, Graph, LineGraph, edge_id

log = logging.getLogger(__name__)

PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown",
    "magenta", "cyan", "olive", "navy", "gold", "teal",
)


def from_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, ``#`` comments and an optional ``n <count>`` header."""
    n_header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"bad header {line!r}", lineno)
            if n_header is not None:
                raise ParseError("duplicate 'n' header", lineno)
            n_header = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected two non-negative integers, got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = edge_id(u, v)
        if e in seen:
            log.warning("line %d: duplicate edge %s ignored", lineno, e)
            continue
        seen.add(e)
        edges.append(e)
    top = max((v for e in edges for v in e), default=-1) + 1
    if n_header is None:
        n = top
    elif n_header < top:
        raise ParseError(f"header says n={n_header} but vertex {top - 1} appears")
    else:
        n = n_header
    return Graph(n, edges)


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def to_edge_list(g: Graph, labels: Iterable[Edge] | None = None) -> str:
    lines = [f"n {g.n}"]
    if labels is not None:
        lines.extend(f"# {i} = {u} {v}" for i, (u, v) in enumerate(labels))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(
    g: Graph,
    edge_colors: Mapping[Edge, str] | None = None,
    vertex_colors: Mapping[int, str] | None = None,
    names: Mapping[int, str] | None = None,
) -> str:
    edge_colors = edge_colors or {}
    vertex_colors = vertex_colors or {}
    out = ["graph G {"]
    for v in range(g.n):
        attrs = []
        if names and v in names:
            attrs.append(f'label="{names[v]}"')
        if v in vertex_colors:
            attrs.append(f'color="{vertex_colors[v]}"')
        out.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for e in g.edges:
        color = edge_colors.get(e)
        out.append(f"  {e[0]} -- {e[1]}" + (f' [color="{color}"]' if color else "") + ";")
    out.append("}")
    return "\n".join(out) + "\n"


def line_names(lg: LineGraph) -> dict[int, str]:
    return {i: f"{u}{v}" if lg.base.n <= 10 else f"{u}-{v}" for i, (u, v) in enumerate(lg.labels)}


def encode_inf(x: float | int) -> int | str:
    return "inf" if x == math.inf else int(x)


def decode_inf(x: int | str) -> float | int:
    return math.inf if x == "inf" else int(x)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
