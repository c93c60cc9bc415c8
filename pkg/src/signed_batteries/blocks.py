"""Cutpoints and blocks of a multigraph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import SignedGraph, is_circle


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as edge-id sets, ordered by their smallest edge id."""

    blocks: tuple[frozenset[int], ...]
    cutpoints: frozenset[int]
    block_of_edge: dict[int, int] = field(hash=False)
    blocks_of_vertex: dict[int, frozenset[int]] = field(hash=False)

    def degree_in_block(self, g: SignedGraph, v: int, index: int) -> int:
        return g.degree(v, within=self.blocks[index])

    def block_graph(self, g: SignedGraph, index: int) -> SignedGraph:
        return g.subgraph(self.blocks[index])

    def is_isthmus_block(self, g: SignedGraph, index: int) -> bool:
        block = self.blocks[index]
        return len(block) == 1 and not g.edge(next(iter(block))).is_loop

    def is_circle_block(self, g: SignedGraph, index: int) -> bool:
        return is_circle(g, self.blocks[index])


def decompose_blocks(g: SignedGraph) -> BlockDecomposition:
    """Biconnected decomposition by iterative DFS; loops and isthmi are blocks of their own."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[frozenset[int]] = []
    links = {v: [eid for eid in g.incident(v) if not g.edge(eid).is_loop] for v in g.vertices}
    clock = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, None, iter(links[root]))]
        edge_stack: list[int] = []
        while stack:
            v, via, it = stack[-1]
            descended = False
            for eid in it:
                if eid == via:
                    continue
                w = g.edge(eid).other(v)
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(eid)
                    stack.append((w, eid, iter(links[w])))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append(eid)
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                comp = []
                while True:
                    eid = edge_stack.pop()
                    comp.append(eid)
                    if eid == via:
                        break
                found.append(frozenset(comp))
    found.extend(frozenset([e.id]) for e in g.edges if e.is_loop)
    found.sort(key=min)

    block_of_edge = {eid: i for i, block in enumerate(found) for eid in block}
    member: dict[int, set[int]] = {}
    for i, block in enumerate(found):
        for eid in block:
            e = g.edge(eid)
            member.setdefault(e.u, set()).add(i)
            member.setdefault(e.v, set()).add(i)
    blocks_of_vertex = {v: frozenset(member.get(v, ())) for v in sorted(g.vertices)}
    cutpoints = frozenset(v for v, bs in blocks_of_vertex.items() if len(bs) >= 2)
    return BlockDecomposition(tuple(found), cutpoints, block_of_edge, blocks_of_vertex)
