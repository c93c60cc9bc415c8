"""Signed multigraphs, circles, subdivision and suppression.

Signs are stored as the integers ``+1`` and ``-1``.  Edges carry explicit,
stable integer ids; a circle is identified by its set of edge ids so that
parallel edges stay unambiguous.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import GraphError, PreconditionError

POS = 1
NEG = -1


def sign_symbol(sign: int) -> str:
    return "+" if sign > 0 else "-"


def sign_product(signs: Iterable[int]) -> int:
    result = POS
    for s in signs:
        result *= s
    return result


@dataclass(frozen=True, order=True)
class Edge:
    id: int
    u: int
    v: int
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an endpoint of edge {self.id}")

    def with_sign(self, sign: int) -> Edge:
        return Edge(self.id, self.u, self.v, sign)


class SignedGraph:
    """An immutable signed multigraph.

    Loops and parallel edges are allowed.  ``edges`` is always ordered by id.
    """

    __slots__ = ("vertices", "edges", "_by_id", "_incident")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge | tuple]) -> None:
        verts = frozenset(vertices)
        built: list[Edge] = []
        for item in edges:
            edge = item if isinstance(item, Edge) else Edge(*item)
            if edge.sign not in (POS, NEG):
                raise GraphError(f"edge {edge.id}: sign must be +1 or -1, got {edge.sign!r}")
            built.append(edge)
        built.sort(key=lambda e: e.id)
        by_id: dict[int, Edge] = {}
        incident: dict[int, list[int]] = {v: [] for v in verts}
        for edge in built:
            if edge.id in by_id:
                raise GraphError(f"duplicate edge id {edge.id}")
            for x in (edge.u, edge.v):
                if x not in verts:
                    raise GraphError(f"edge {edge.id}: endpoint {x} is not a vertex")
            by_id[edge.id] = edge
            incident[edge.u].append(edge.id)
            if not edge.is_loop:
                incident[edge.v].append(edge.id)
        self.vertices: frozenset[int] = verts
        self.edges: tuple[Edge, ...] = tuple(built)
        self._by_id = by_id
        self._incident = {v: tuple(ids) for v, ids in incident.items()}

    @classmethod
    def from_edges(cls, triples: Iterable[tuple[int, int, int]], vertices: Iterable[int] = ()) -> SignedGraph:
        """Build a graph from ``(u, v, sign)`` triples numbered 0, 1, 2, ..."""
        edges = [Edge(i, u, v, s) for i, (u, v, s) in enumerate(triples)]
        verts = set(vertices)
        for e in edges:
            verts.update((e.u, e.v))
        return cls(verts, edges)

    def __repr__(self) -> str:
        body = ", ".join(f"{e.id}:{e.u}{sign_symbol(e.sign)}{e.v}" for e in self.edges)
        return f"SignedGraph(n={len(self.vertices)}, [{body}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    # -- queries -----------------------------------------------------------

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of edges incident with ``v``; a loop is listed once."""
        try:
            return self._incident[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int, within: Iterable[int] | None = None) -> int:
        """Degree of ``v``, counting a loop twice, optionally inside an edge subset."""
        allowed = None if within is None else set(within)
        total = 0
        for eid in self.incident(v):
            if allowed is not None and eid not in allowed:
                continue
            total += 2 if self._by_id[eid].is_loop else 1
        return total

    def signs(self) -> dict[int, int]:
        return {e.id: e.sign for e in self.edges}

    def next_edge_id(self) -> int:
        return self.edges[-1].id + 1 if self.edges else 0

    def next_vertex_id(self) -> int:
        return max(self.vertices) + 1 if self.vertices else 0

    def same_underlying(self, other: SignedGraph) -> bool:
        return self.vertices == other.vertices and [
            (e.id, e.u, e.v) for e in self.edges
        ] == [(e.id, e.u, e.v) for e in other.edges]

    # -- derived graphs ----------------------------------------------------

    def with_signs(self, signs: Mapping[int, int]) -> SignedGraph:
        return SignedGraph(self.vertices, [e.with_sign(signs.get(e.id, e.sign)) for e in self.edges])

    def subgraph(self, edge_ids: Iterable[int], vertices: Iterable[int] = ()) -> SignedGraph:
        """The subgraph formed by ``edge_ids`` and their endpoints, plus ``vertices``."""
        chosen = [self.edge(eid) for eid in sorted(set(edge_ids))]
        verts = set(vertices)
        for e in chosen:
            verts.update((e.u, e.v))
        return SignedGraph(verts, chosen)

    def delete_edges(self, edge_ids: Iterable[int]) -> SignedGraph:
        drop = set(edge_ids)
        for eid in drop:
            self.edge(eid)
        return SignedGraph(self.vertices, [e for e in self.edges if e.id not in drop])

    def circle(self, edge_ids: Iterable[int]) -> Circle:
        """Validate ``edge_ids`` as a circle of this graph and return it."""
        ids = frozenset(edge_ids)
        if not is_circle(self, ids):
            raise GraphError(f"edge set {sorted(ids)} is not a circle")
        verts: set[int] = set()
        for eid in ids:
            e = self._by_id[eid]
            verts.update((e.u, e.v))
        return Circle(ids, frozenset(verts), sign_product(self._by_id[eid].sign for eid in ids))


@dataclass(frozen=True)
class Circle:
    edges: frozenset[int]
    vertices: frozenset[int]
    sign: int

    @property
    def length(self) -> int:
        return len(self.edges)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.edges), tuple(sorted(self.edges)))

    def __contains__(self, eid: object) -> bool:
        return eid in self.edges

    def to_dict(self) -> dict:
        return {"edges": sorted(self.edges), "sign": sign_symbol(self.sign)}


def is_circle(g: SignedGraph, edge_ids: Iterable[int]) -> bool:
    """True iff the edges form a connected subgraph with every vertex of degree 2."""
    ids = set(edge_ids)
    if not ids:
        return False
    deg: dict[int, int] = defaultdict(int)
    adj: dict[int, list[int]] = defaultdict(list)
    for eid in ids:
        e = g.edge(eid)
        deg[e.u] += 1
        deg[e.v] += 1
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def circle_sign(g: SignedGraph, c: Circle | Iterable[int]) -> int:
    ids = c.edges if isinstance(c, Circle) else frozenset(c)
    return g.circle(ids).sign


def symmetric_difference(c1: Circle | Iterable[int], c2: Circle | Iterable[int]) -> frozenset[int]:
    a = c1.edges if isinstance(c1, Circle) else frozenset(c1)
    b = c2.edges if isinstance(c2, Circle) else frozenset(c2)
    return a ^ b


def sorted_circles(circles: Iterable[Circle]) -> list[Circle]:
    return sorted(circles, key=Circle.sort_key)


def cyclic_order(g: SignedGraph, c: Circle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical traversal ``(vertices, edges)`` of a circle.

    Starts at the least vertex and leaves it along its least-id circle edge;
    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % len]``.
    """
    start = min(c.vertices)
    if c.length == 1:
        return (start,), tuple(c.edges)
    at: dict[int, list[int]] = defaultdict(list)
    for eid in sorted(c.edges):
        e = g.edge(eid)
        at[e.u].append(eid)
        at[e.v].append(eid)
    verts = [start]
    order = [at[start][0]]
    current = g.edge(order[0]).other(start)
    while current != start:
        verts.append(current)
        a, b = at[current]
        nxt = b if a == order[-1] else a
        order.append(nxt)
        current = g.edge(nxt).other(current)
    return tuple(verts), tuple(order)


def subdivide_edge(g: SignedGraph, eid: int, part_signs: Sequence[int]) -> SignedGraph:
    """Replace edge ``eid`` by a path whose edge signs are ``part_signs``.

    The first path edge keeps id ``eid``; further edges and the interior
    vertices receive fresh ids above the current maxima.
    """
    edge = g.edge(eid)
    if not part_signs:
        raise GraphError("part_signs must be nonempty")
    if sign_product(part_signs) != edge.sign:
        raise GraphError(f"part signs {list(part_signs)} do not multiply to the sign of edge {eid}")
    k = len(part_signs)
    v0 = g.next_vertex_id()
    interior = list(range(v0, v0 + k - 1))
    path = [edge.u, *interior, edge.v]
    e0 = g.next_edge_id()
    ids = [eid] + list(range(e0, e0 + k - 1))
    new_edges = [e for e in g.edges if e.id != eid]
    new_edges += [Edge(ids[i], path[i], path[i + 1], part_signs[i]) for i in range(k)]
    return SignedGraph(g.vertices | set(interior), new_edges)


def suppress_vertex(g: SignedGraph, v: int) -> tuple[SignedGraph, int]:
    """Suppress a degree-2 vertex, returning the new graph and the id of ``e_v``.

    The two edges at ``v`` are replaced by one edge joining the other
    endpoints, signed with the product of the two signs.  If both edges go to
    the same neighbour the result is a loop there.
    """
    inc = g.incident(v)
    if any(g.edge(eid).is_loop for eid in inc):
        raise PreconditionError(f"vertex {v} carries a loop")
    if len(inc) != 2:
        raise PreconditionError(f"vertex {v} has degree {len(inc)}, expected 2")
    e1, e2 = (g.edge(eid) for eid in inc)
    new_id = g.next_edge_id()
    merged = Edge(new_id, e1.other(v), e2.other(v), e1.sign * e2.sign)
    rest = [e for e in g.edges if e.id not in inc]
    return SignedGraph(g.vertices - {v}, rest + [merged]), new_id


def components(g: SignedGraph, edge_ids: Iterable[int] | None = None) -> Iterator[frozenset[int]]:
    """Vertex sets of the connected components (restricted to ``edge_ids`` if given)."""
    allowed = None if edge_ids is None else set(edge_ids)
    seen: set[int] = set()
    for root in sorted(g.vertices):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for eid in g.incident(x):
                if allowed is not None and eid not in allowed:
                    continue
                y = g.edge(eid).other(x)
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        yield frozenset(comp)
