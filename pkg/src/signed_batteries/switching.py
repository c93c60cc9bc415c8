"""Switching, balance testing and balancing edges.

A switching function is a plain mapping from vertex id to sign; vertices it
does not mention are treated as ``+``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import GraphError
from .graph import NEG, POS, Circle, SignedGraph

SwitchingFunction = Mapping[int, int]


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    switching: dict[int, int] | None = None
    negative_circle: Circle | None = None

    def __post_init__(self) -> None:
        if self.balanced != (self.negative_circle is None) or self.balanced != (self.switching is not None):
            raise ValueError("a balance report carries exactly one witness matching its verdict")


def apply_switching(g: SignedGraph, zeta: SwitchingFunction) -> SignedGraph:
    signs = {}
    for e in g.edges:
        if e.is_loop:
            signs[e.id] = e.sign
        else:
            signs[e.id] = zeta.get(e.u, POS) * e.sign * zeta.get(e.v, POS)
    return g.with_signs(signs)


def _spanning_forest(g: SignedGraph) -> tuple[dict[int, int], dict[int, tuple[int, int] | None], dict[int, int]]:
    """BFS forest: potential ``zeta``, parent links ``(edge, vertex)`` and depths."""
    zeta: dict[int, int] = {}
    parent: dict[int, tuple[int, int] | None] = {}
    depth: dict[int, int] = {}
    for root in sorted(g.vertices):
        if root in zeta:
            continue
        zeta[root] = POS
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for eid in g.incident(x):
                e = g.edge(eid)
                if e.is_loop:
                    continue
                y = e.other(x)
                if y not in zeta:
                    zeta[y] = zeta[x] * e.sign
                    parent[y] = (eid, x)
                    depth[y] = depth[x] + 1
                    queue.append(y)
    return zeta, parent, depth


def _tree_path(parent, depth, a: int, b: int) -> set[int]:
    edges: set[int] = set()
    while depth[a] > depth[b]:
        eid, a = parent[a]
        edges.add(eid)
    while depth[b] > depth[a]:
        eid, b = parent[b]
        edges.add(eid)
    while a != b:
        ea, a = parent[a]
        eb, b = parent[b]
        edges.update((ea, eb))
    return edges


def is_balanced(g: SignedGraph) -> BalanceReport:
    """Spanning-forest sign propagation; a disagreeing edge yields a negative circle."""
    zeta, parent, depth = _spanning_forest(g)
    for e in g.edges:
        if e.is_loop:
            if e.sign == NEG:
                return BalanceReport(False, negative_circle=g.circle([e.id]))
            continue
        if zeta[e.u] * e.sign * zeta[e.v] == NEG:
            cycle = _tree_path(parent, depth, e.u, e.v)
            cycle.add(e.id)
            return BalanceReport(False, negative_circle=g.circle(cycle))
    return BalanceReport(True, switching=zeta)


def balancing_edges(g: SignedGraph) -> frozenset[int]:
    """Edges ``b`` for which some switching leaves ``b`` as the only negative edge."""
    found = set()
    for b in g.edges:
        rest = g.delete_edges([b.id])
        report = is_balanced(rest)
        if not report.balanced:
            continue
        if b.is_loop:
            if b.sign == NEG:
                found.add(b.id)
            continue
        zeta, parent, _ = _spanning_forest(rest)
        if _root(parent, b.u) != _root(parent, b.v):
            # b joins two components of g - b; switching one side flips it freely
            found.add(b.id)
        elif zeta[b.u] * b.sign * zeta[b.v] == NEG:
            found.add(b.id)
    return frozenset(found)


def _root(parent, x: int) -> int:
    while parent[x] is not None:
        x = parent[x][1]
    return x


def find_switching(g1: SignedGraph, g2: SignedGraph) -> dict[int, int] | None:
    """A switching function taking the signature of ``g1`` to that of ``g2``, if any."""
    if not g1.same_underlying(g2):
        raise GraphError("switching equivalence needs identical underlying graphs")
    product = g1.with_signs({e.id: e.sign * g2.edge(e.id).sign for e in g1.edges})
    report = is_balanced(product)
    return report.switching


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    return find_switching(g1, g2) is not None
