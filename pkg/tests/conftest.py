from __future__ import annotations

import itertools

from hypothesis import strategies as st

from signed_batteries.graph import NEG, POS, Edge, SignedGraph, is_circle

P, N = POS, NEG


def brute_circles(g: SignedGraph) -> list[frozenset[int]]:
    """Every edge subset that is a circle; independent of the DFS enumerator."""
    ids = g.edge_ids
    return [
        frozenset(s)
        for r in range(1, len(ids) + 1)
        for s in itertools.combinations(ids, r)
        if is_circle(g, s)
    ]


def brute_counts(g: SignedGraph, *, edge: int | None = None, vertex: int | None = None) -> tuple[int, int]:
    """(negative, positive) circle counts through an edge or a vertex."""
    neg = pos = 0
    for c in brute_circles(g):
        circle = g.circle(c)
        if edge is not None and edge not in c:
            continue
        if vertex is not None and vertex not in circle.vertices:
            continue
        if circle.sign == NEG:
            neg += 1
        else:
            pos += 1
    return neg, pos


def graph(*triples, vertices=()) -> SignedGraph:
    return SignedGraph.from_edges(triples, vertices)


@st.composite
def signed_multigraphs(draw, max_vertices: int = 6, max_edges: int = 9, loops: bool = True) -> SignedGraph:
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    edges = []
    for i in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u == v and not loops:
            continue
        edges.append(Edge(len(edges), u, v, draw(st.sampled_from([P, N]))))
    return SignedGraph(range(n), edges)


@st.composite
def switchings(draw, g: SignedGraph) -> dict[int, int]:
    return {v: draw(st.sampled_from([P, N])) for v in sorted(g.vertices)}
