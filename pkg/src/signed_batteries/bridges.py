"""Bridges of a circle, chordification and the layering analysis.

Given a circle ``C`` of a graph, every edge outside ``C`` belongs to exactly
one bridge: either a chord, or a connected component of ``G - V(C)``
together with the edges joining it to ``C``.  When every bridge has exactly
two attachment vertices we replace each by a chord (the graph ``C*``) and
look at the segments of ``C`` cut out by chord endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import CircleCapExceeded
from .graph import POS, Circle, Edge, SignedGraph, cyclic_order, sign_product
from .oracle import DEFAULT_CAP

CHORD = "chord"
COMPONENT = "component"

FAIL_ATTACHMENTS = "bridge-attachments"
FAIL_CROSSING = "crossing-chords"
FAIL_HANDLES = "handle-count"


@dataclass(frozen=True)
class Bridge:
    kind: str
    edges: frozenset[int]
    attachments: frozenset[int]
    core: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "edges": sorted(self.edges),
            "attachments": sorted(self.attachments),
            "core": sorted(self.core),
        }


@dataclass(frozen=True)
class BridgePath:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    sign: int

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class Segment:
    """A maximal path of the circle between consecutive chord endpoints."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges)}


@dataclass(frozen=True)
class LayeringReport:
    circle: Circle
    cycle_vertices: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    bridges: tuple[Bridge, ...]
    chordified: SignedGraph | None = None
    chord_bridge: dict[int, int] = field(default_factory=dict, compare=False)
    attachment_set: frozenset[int] = frozenset()
    segments: tuple[Segment, ...] = ()
    handles: tuple[int, ...] = ()
    crossing_pairs: tuple[tuple[int, int], ...] = ()
    two_handled: bool = False
    c_layered: bool = False
    failure: str | None = None
    failing_bridge: int | None = None

    def segment_of(self, eid: int) -> int | None:
        for i, seg in enumerate(self.segments):
            if eid in seg.edges:
                return i
        return None

    def handle_of(self, eid: int) -> int | None:
        """Index (into ``segments``) of the handle containing ``eid``, if any."""
        i = self.segment_of(eid)
        return i if i is not None and i in self.handles else None

    def other_handle(self, index: int) -> int:
        a, b = self.handles
        return b if index == a else a

    def to_dict(self) -> dict:
        from .fileformat import graph_to_dict

        return {
            "circle": self.circle.to_dict(),
            "cycle_vertices": list(self.cycle_vertices),
            "cycle_edges": list(self.cycle_edges),
            "bridges": [b.to_dict() for b in self.bridges],
            "chordified": None if self.chordified is None else graph_to_dict(self.chordified),
            "chord_bridge": {str(k): v for k, v in sorted(self.chord_bridge.items())},
            "attachment_set": sorted(self.attachment_set),
            "segments": [s.to_dict() for s in self.segments],
            "handles": list(self.handles),
            "crossing_pairs": [list(p) for p in self.crossing_pairs],
            "two_handled": self.two_handled,
            "c_layered": self.c_layered,
            "failure": self.failure,
            "failing_bridge": self.failing_bridge,
        }


def _as_circle(g: SignedGraph, c: Circle | Iterable[int]) -> Circle:
    return g.circle(c.edges if isinstance(c, Circle) else c)


def bridges_of_circle(g: SignedGraph, c: Circle | Iterable[int]) -> list[Bridge]:
    """All bridges of ``c``, ordered by smallest edge id.

    A loop hanging at a vertex of ``c`` fits neither textbook kind; it is
    reported as a component bridge with an empty core and one attachment.
    """
    circle = _as_circle(g, c)
    on_circle = circle.vertices
    bridges: list[Bridge] = []
    seen: set[int] = set()
    for e in g.edges:
        if e.id in circle.edges or e.id in seen:
            continue
        if e.u in on_circle and e.v in on_circle:
            seen.add(e.id)
            kind = CHORD if not e.is_loop else COMPONENT
            bridges.append(Bridge(kind, frozenset([e.id]), frozenset((e.u, e.v))))
            continue
        # grow the component of G - V(C) that this edge touches
        start = e.u if e.u not in on_circle else e.v
        core = {start}
        edges: set[int] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for eid in g.incident(x):
                edges.add(eid)
                y = g.edge(eid).other(x)
                if y not in on_circle and y not in core:
                    core.add(y)
                    stack.append(y)
        attach = frozenset(
            x for eid in edges for x in (g.edge(eid).u, g.edge(eid).v) if x in on_circle
        )
        seen |= edges
        bridges.append(Bridge(COMPONENT, frozenset(edges), attach, frozenset(core)))
    bridges.sort(key=lambda b: min(b.edges))
    return bridges


def paths_through_bridge(g: SignedGraph, bridge: Bridge, cap: int = DEFAULT_CAP) -> list[BridgePath]:
    """Paths inside ``bridge`` joining two different attachments, interior off the circle."""
    adjacency: dict[int, list[Edge]] = {}
    for eid in sorted(bridge.edges):
        e = g.edge(eid)
        if e.is_loop:
            continue
        adjacency.setdefault(e.u, []).append(e)
        adjacency.setdefault(e.v, []).append(e)
    found: list[BridgePath] = []
    for a in sorted(bridge.attachments):
        verts = [a]
        edges: list[int] = []
        stack = [iter(adjacency.get(a, ()))]
        while stack:
            x = verts[-1]
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                verts.pop()
                if edges:
                    edges.pop()
                continue
            y = step.other(x)
            if y in bridge.attachments:
                if y > a:
                    path_edges = (*edges, step.id)
                    found.append(BridgePath((*verts, y), path_edges, sign_product(g.edge(i).sign for i in path_edges)))
                    if len(found) > cap:
                        raise CircleCapExceeded(cap)
                continue
            if y in bridge.core and y not in verts:
                verts.append(y)
                edges.append(step.id)
                stack.append(iter(adjacency.get(y, ())))
    found.sort(key=lambda p: (len(p.edges), p.edges))
    return found


def _interleave(position: dict[int, int], p: tuple[int, int], q: tuple[int, int]) -> bool:
    a, b = sorted((position[p[0]], position[p[1]]))
    c, d = position[q[0]], position[q[1]]
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def chordify(g: SignedGraph, c: Circle | Iterable[int]) -> LayeringReport:
    """Build ``C*``, or record the first bridge without exactly two attachments."""
    circle = _as_circle(g, c)
    verts, order = cyclic_order(g, circle)
    bridges = tuple(bridges_of_circle(g, circle))
    base = LayeringReport(circle, verts, order, bridges)
    for i, bridge in enumerate(bridges):
        if len(bridge.attachments) != 2:
            return replace(base, failure=FAIL_ATTACHMENTS, failing_bridge=i)
    circle_edges = [g.edge(eid) for eid in order]
    next_id = g.next_edge_id()
    chords = []
    chord_bridge = {}
    for i, bridge in enumerate(bridges):
        a, b = sorted(bridge.attachments)
        # chords in C* are structural only; the sign is a placeholder
        chords.append(Edge(next_id + i, a, b, POS))
        chord_bridge[next_id + i] = i
    chordified = SignedGraph(circle.vertices, circle_edges + chords)
    attachment_set = frozenset(x for b in bridges for x in b.attachments)
    return replace(base, chordified=chordified, chord_bridge=chord_bridge, attachment_set=attachment_set)


def analyze_layering(g: SignedGraph, c: Circle | Iterable[int]) -> LayeringReport:
    """Full layering report: segments, handles, crossings and the two verdicts."""
    report = chordify(g, c)
    if report.failure is not None:
        return report
    verts, order = report.cycle_vertices, report.cycle_edges
    position = {v: i for i, v in enumerate(verts)}
    pairs = [tuple(sorted(b.attachments)) for b in report.bridges]

    crossing = tuple(
        (i, j)
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
        if _interleave(position, pairs[i], pairs[j])
    )

    segments: list[Segment] = []
    if report.attachment_set:
        n = len(verts)
        first = min(position[x] for x in report.attachment_set)
        seg_verts = [verts[first]]
        seg_edges: list[int] = []
        for step in range(n):
            i = (first + step) % n
            seg_edges.append(order[i])
            nxt = verts[(i + 1) % n]
            seg_verts.append(nxt)
            if nxt in report.attachment_set:
                segments.append(Segment(tuple(seg_verts), tuple(seg_edges)))
                seg_verts = [nxt]
                seg_edges = []

    chord_pairs = {frozenset(p) for p in pairs}
    handles = tuple(i for i, s in enumerate(segments) if frozenset(s.ends) in chord_pairs)
    two_handled = not crossing and len(handles) == 2
    failure = None
    if crossing:
        failure = FAIL_CROSSING
    elif len(handles) != 2:
        failure = FAIL_HANDLES
    return replace(
        report,
        segments=tuple(segments),
        handles=handles,
        crossing_pairs=crossing,
        two_handled=two_handled,
        c_layered=two_handled,
        failure=failure,
    )


def circle_halves(report: LayeringReport, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two edge sequences of the circle between vertices ``a`` and ``b``."""
    verts, order = report.cycle_vertices, report.cycle_edges
    i, j = sorted((verts.index(a), verts.index(b)))
    return order[i:j], order[j:] + order[:i]
