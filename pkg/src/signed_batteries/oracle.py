"""Brute-force circle enumeration, the ground truth for every structural check.

Each circle is produced exactly once: it is found from its smallest edge
``e = uv`` as ``e`` plus a simple ``v``-``u`` path that only uses edges with
larger ids.  This needs no block structure, so it stays independent of the
code paths it is used to check.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import CircleCapExceeded
from .graph import NEG, Circle, SignedGraph, sign_product, sorted_circles

DEFAULT_CAP = 1_000_000
WITNESS_LIMIT = 2


@dataclass(frozen=True)
class CircleTally:
    """Signed circle counts through one edge or vertex, with a few witnesses."""

    negative: int = 0
    positive: int = 0
    negative_witnesses: tuple[Circle, ...] = ()
    positive_witnesses: tuple[Circle, ...] = ()

    @property
    def total(self) -> int:
        return self.negative + self.positive

    def count(self, sign: int) -> int:
        return self.negative if sign == NEG else self.positive

    def unique(self, sign: int) -> Circle | None:
        """The only circle of the given sign, or None when there are 0 or >= 2."""
        if sign == NEG:
            return self.negative_witnesses[0] if self.negative == 1 else None
        return self.positive_witnesses[0] if self.positive == 1 else None

    def to_dict(self) -> dict:
        return {"negative": self.negative, "positive": self.positive}


def _tally(circles: list[Circle]) -> CircleTally:
    neg = [c for c in circles if c.sign == NEG]
    pos = [c for c in circles if c.sign != NEG]
    return CircleTally(len(neg), len(pos), tuple(neg[:WITNESS_LIMIT]), tuple(pos[:WITNESS_LIMIT]))


@dataclass(frozen=True)
class CircleCensus:
    circles: tuple[Circle, ...]
    _by_edge: dict[int, list[Circle]] = field(repr=False, compare=False)
    _by_vertex: dict[int, list[Circle]] = field(repr=False, compare=False)

    def edge_tally(self, eid: int) -> CircleTally:
        return _tally(self._by_edge.get(eid, []))

    def vertex_tally(self, v: int) -> CircleTally:
        return _tally(self._by_vertex.get(v, []))

    def through_edge(self, eid: int) -> list[Circle]:
        return list(self._by_edge.get(eid, []))

    def through_vertex(self, v: int) -> list[Circle]:
        return list(self._by_vertex.get(v, []))

    @property
    def positive(self) -> frozenset[frozenset[int]]:
        return frozenset(c.edges for c in self.circles if c.sign != NEG)

    @property
    def negative(self) -> frozenset[frozenset[int]]:
        return frozenset(c.edges for c in self.circles if c.sign == NEG)


def _circle_edge_sets(g: SignedGraph, cap: int) -> list[frozenset[int]]:
    adjacency: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in g.edges:
        if not e.is_loop:
            adjacency[e.u].append((e.id, e.v))
            adjacency[e.v].append((e.id, e.u))

    found: list[frozenset[int]] = []

    def record(edges: frozenset[int]) -> None:
        found.append(edges)
        if len(found) > cap:
            raise CircleCapExceeded(cap)

    for pivot in g.edges:
        if pivot.is_loop:
            record(frozenset([pivot.id]))
            continue
        target = pivot.u
        on_path = {pivot.v}
        path = [pivot.id]
        # iterative DFS over (vertex, index into its adjacency)
        stack = [(pivot.v, 0)]
        while stack:
            x, i = stack[-1]
            nbrs = adjacency[x]
            if i >= len(nbrs):
                stack.pop()
                path.pop()
                on_path.discard(x)
                continue
            stack[-1] = (x, i + 1)
            eid, y = nbrs[i]
            if eid <= pivot.id:
                continue
            if y == target:
                record(frozenset(path[1:] + [eid, pivot.id]))
            elif y not in on_path:
                on_path.add(y)
                path.append(eid)
                stack.append((y, 0))
    return found


def enumerate_circles(g: SignedGraph, cap: int = DEFAULT_CAP) -> CircleCensus:
    if cap <= 0:
        raise ValueError("cap must be positive")
    circles = []
    for edges in _circle_edge_sets(g, cap):
        verts = set()
        for eid in edges:
            e = g.edge(eid)
            verts.update((e.u, e.v))
        circles.append(Circle(edges, frozenset(verts), sign_product(g.edge(eid).sign for eid in edges)))
    circles = sorted_circles(circles)
    by_edge: dict[int, list[Circle]] = defaultdict(list)
    by_vertex: dict[int, list[Circle]] = defaultdict(list)
    for c in circles:
        for eid in sorted(c.edges):
            by_edge[eid].append(c)
        for v in sorted(c.vertices):
            by_vertex[v].append(c)
    return CircleCensus(tuple(circles), dict(by_edge), dict(by_vertex))


def oracle_classify_edge(g: SignedGraph, eid: int, cap: int = DEFAULT_CAP) -> CircleTally:
    g.edge(eid)
    return enumerate_circles(g, cap).edge_tally(eid)


def oracle_classify_vertex(g: SignedGraph, v: int, cap: int = DEFAULT_CAP) -> CircleTally:
    g.incident(v)
    return enumerate_circles(g, cap).vertex_tally(v)
