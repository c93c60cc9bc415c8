"""Reading and writing signed graphs.

Text format, one item per line::

    # comment
    1 2 +          edge between vertices 1 and 2, positive
    2 3 -          edge ids are 0, 1, 2, ... in file order
    v 7            isolated vertex

JSON format: ``{"vertices": [...], "edges": [{"id", "u", "v", "sign"}]}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import ParseError
from .graph import NEG, POS, Edge, SignedGraph, sign_symbol

_SIGNS = {"+": POS, "-": NEG}


def _parse_vertex(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"vertex id {token!r} is not an integer", lineno) from None
    if value < 0:
        raise ParseError(f"vertex id {value} is negative", lineno)
    return value


def _parse_sign(token: str, lineno: int | None) -> int:
    try:
        return _SIGNS[token]
    except KeyError:
        raise ParseError(f"unknown sign token {token!r}", lineno) from None


def parse_graph(text: str) -> SignedGraph:
    vertices: set[int] = set()
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise ParseError("vertex line must be 'v <id>'", lineno)
            vertices.add(_parse_vertex(parts[1], lineno))
            continue
        if len(parts) != 3:
            raise ParseError(f"expected 'u v sign', got {line!r}", lineno)
        u = _parse_vertex(parts[0], lineno)
        v = _parse_vertex(parts[1], lineno)
        sign = _parse_sign(parts[2], lineno)
        edges.append(Edge(len(edges), u, v, sign))
        vertices.update((u, v))
    return SignedGraph(vertices, edges)


def serialize_graph(g: SignedGraph) -> str:
    """Canonical text form: edges in id order, then isolated vertices.

    The text format numbers edges by position, so a graph whose ids are not
    ``0..m-1`` comes back relabelled; use JSON to keep arbitrary ids.
    """
    lines = [f"{e.u} {e.v} {sign_symbol(e.sign)}" for e in g.edges]
    touched = {x for e in g.edges for x in (e.u, e.v)}
    lines += [f"v {x}" for x in sorted(g.vertices - touched)]
    return "".join(line + "\n" for line in lines)


def graph_to_dict(g: SignedGraph) -> dict[str, Any]:
    return {
        "vertices": sorted(g.vertices),
        "edges": [{"id": e.id, "u": e.u, "v": e.v, "sign": sign_symbol(e.sign)} for e in g.edges],
    }


def graph_from_dict(data: Mapping[str, Any]) -> SignedGraph:
    try:
        vertices = {int(x) for x in data.get("vertices", [])}
        edges = []
        seen: set[int] = set()
        for item in data["edges"]:
            eid = int(item["id"])
            if eid in seen:
                raise ParseError(f"duplicate edge id {eid}")
            seen.add(eid)
            edge = Edge(eid, int(item["u"]), int(item["v"]), _parse_sign(str(item["sign"]), None))
            if edge.u < 0 or edge.v < 0:
                raise ParseError(f"edge {eid}: negative vertex id")
            edges.append(edge)
            vertices.update((edge.u, edge.v))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed JSON graph: {exc}") from None
    return SignedGraph(vertices, edges)


def load_graph(path: str | Path) -> SignedGraph:
    """Load a graph file, choosing JSON when the content starts with ``{``."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return graph_from_dict(data)
    return parse_graph(text)


def format_switching(zeta: Mapping[int, int]) -> str:
    return "".join(f"{v} {sign_symbol(s)}\n" for v, s in sorted(zeta.items()))


def parse_switching(text: str) -> dict[int, int]:
    zeta: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'v sign', got {line!r}", lineno)
        zeta[_parse_vertex(parts[0], lineno)] = _parse_sign(parts[1], lineno)
    return zeta
