"""Edge batteries: edges lying in exactly one negative or one positive circle.

Discovery goes through the circle oracle; every verdict is then re-derived
from the structural characterization (layered block, handle membership,
balancing handle or negative bridge paths).  Any disagreement between the
two routes raises :class:`InvariantViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockDecomposition, decompose_blocks
from .bridges import LayeringReport, analyze_layering, paths_through_bridge
from .errors import GraphError, InvariantViolation
from .graph import NEG, POS, Circle, SignedGraph, is_circle, sign_symbol
from .oracle import DEFAULT_CAP, CircleCensus, CircleTally, enumerate_circles
from .switching import balancing_edges, is_balanced

TRIVIAL = "trivial-circle-block"
LAYERING = "layering"


@dataclass(frozen=True)
class BatteryEvidence:
    kind: str
    layering: LayeringReport | None = None
    handle: int | None = None
    balancing_handle: int | None = None
    # positive case: (bridge index, path edges, path sign after switching C all-positive)
    bridge_paths: tuple[tuple[int, tuple[int, ...], int], ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.layering is not None:
            out["handle"] = self.handle
            if self.balancing_handle is not None:
                out["balancing_handle"] = self.balancing_handle
            if self.bridge_paths:
                out["bridge_paths"] = [
                    {"bridge": b, "edges": list(p), "switched_sign": sign_symbol(s)} for b, p, s in self.bridge_paths
                ]
            out["layering"] = self.layering.to_dict()
        return out


@dataclass(frozen=True)
class BatteryWitness:
    circle: Circle
    evidence: BatteryEvidence

    def to_dict(self) -> dict:
        return {"circle": self.circle.to_dict(), "evidence": self.evidence.to_dict()}


@dataclass(frozen=True)
class EdgeBatteryCertificate:
    edge: int
    counts: CircleTally
    block: int | None = None
    negative: BatteryWitness | None = None
    positive: BatteryWitness | None = None

    @property
    def is_negative_battery(self) -> bool:
        return self.negative is not None

    @property
    def is_positive_battery(self) -> bool:
        return self.positive is not None

    def verdict(self) -> tuple:
        """Sign-independent summary: verdicts and witness circles."""
        return (
            self.edge,
            None if self.negative is None else tuple(sorted(self.negative.circle.edges)),
            None if self.positive is None else tuple(sorted(self.positive.circle.edges)),
            self.counts.negative,
            self.counts.positive,
        )

    def to_dict(self) -> dict:
        return {
            "edge": self.edge,
            "block": self.block,
            "counts": self.counts.to_dict(),
            "negative": None if self.negative is None else self.negative.to_dict(),
            "positive": None if self.positive is None else self.positive.to_dict(),
        }


class BlockAnalyzer:
    """Structural battery tests inside one block, cached per circle."""

    def __init__(self, block: SignedGraph, cap: int = DEFAULT_CAP) -> None:
        self.graph = block
        self.cap = cap
        self._layering: dict[frozenset[int], LayeringReport] = {}
        self._balancing: frozenset[int] | None = None
        self._positive: dict[frozenset[int], tuple | None] = {}

    @property
    def balancing(self) -> frozenset[int]:
        if self._balancing is None:
            self._balancing = balancing_edges(self.graph)
        return self._balancing

    def layering(self, c: Circle) -> LayeringReport:
        report = self._layering.get(c.edges)
        if report is None:
            report = analyze_layering(self.graph, c)
            self._layering[c.edges] = report
        return report

    def _positive_paths(self, c: Circle, report: LayeringReport) -> tuple | None:
        """Bridge paths after switching ``c`` all-positive, or None if one stays positive."""
        if c.edges in self._positive:
            return self._positive[c.edges]
        result = None
        if c.sign == POS:
            # switching that makes C all-positive, propagated along the cyclic order
            zeta = {report.cycle_vertices[0]: POS}
            for i, eid in enumerate(report.cycle_edges[:-1]):
                zeta[report.cycle_vertices[i + 1]] = zeta[report.cycle_vertices[i]] * self.graph.edge(eid).sign
            paths = []
            for bi, bridge in enumerate(report.bridges):
                for p in paths_through_bridge(self.graph, bridge, self.cap):
                    a, b = p.ends
                    paths.append((bi, p.edges, zeta[a] * p.sign * zeta[b]))
            if all(s == NEG for _, _, s in paths):
                result = tuple(paths)
        self._positive[c.edges] = result
        return result

    def evidence(self, eid: int, c: Circle, sign: int) -> BatteryEvidence | None:
        """Evidence that ``[eid, c, sign]`` holds structurally, else None."""
        report = self.layering(c)
        if not report.c_layered:
            return None
        handle = report.handle_of(eid)
        if handle is None:
            return None
        if sign == NEG:
            other = report.other_handle(handle)
            if self.balancing.isdisjoint(report.segments[other].edges):
                return None
            return BatteryEvidence(LAYERING, report, handle, balancing_handle=other)
        paths = self._positive_paths(c, report)
        if paths is None:
            return None
        return BatteryEvidence(LAYERING, report, handle, bridge_paths=paths)


def verify_edge_battery(
    g: SignedGraph, eid: int, c: Circle, sign: int, cap: int = DEFAULT_CAP
) -> tuple[bool, BatteryEvidence | None]:
    """Check ``[eid, c, sign]`` against the structural characterization.

    The analysis runs on the block containing ``eid``, which must be neither
    an isthmus nor a bare circle.
    """
    if eid not in c.edges:
        raise GraphError(f"edge {eid} is not on the circle")
    g.circle(c.edges)
    dec = decompose_blocks(g)
    block = dec.blocks[dec.block_of_edge[eid]]
    if not c.edges <= block:
        raise GraphError("circle leaves the block of the edge")
    if is_circle(g, block):
        raise GraphError("the block is a bare circle; every edge is trivially a battery")
    analyzer = BlockAnalyzer(g.subgraph(block), cap)
    evidence = analyzer.evidence(eid, c, sign)
    return evidence is not None, evidence


class EdgeBatteryAnalysis:
    """Battery classification for all edges of one graph, sharing work across edges."""

    def __init__(self, g: SignedGraph, cap: int = DEFAULT_CAP, census: CircleCensus | None = None) -> None:
        self.graph = g
        self.cap = cap
        self.census = census if census is not None else enumerate_circles(g, cap)
        self.blocks: BlockDecomposition = decompose_blocks(g)
        self._analyzers: dict[int, BlockAnalyzer] = {}
        self._balanced: dict[int, bool] = {}
        self._certs: dict[int, EdgeBatteryCertificate] = {}

    def analyzer(self, index: int) -> BlockAnalyzer:
        if index not in self._analyzers:
            self._analyzers[index] = BlockAnalyzer(self.blocks.block_graph(self.graph, index), self.cap)
        return self._analyzers[index]

    def block_balanced(self, index: int) -> bool:
        if index not in self._balanced:
            self._balanced[index] = is_balanced(self.blocks.block_graph(self.graph, index)).balanced
        return self._balanced[index]

    def certificate(self, eid: int) -> EdgeBatteryCertificate:
        cert = self._certs.get(eid)
        if cert is None:
            cert = self._classify(eid)
            self._certs[eid] = cert
        return cert

    def certificates(self) -> list[EdgeBatteryCertificate]:
        return [self.certificate(e.id) for e in self.graph.edges]

    def _classify(self, eid: int) -> EdgeBatteryCertificate:
        g = self.graph
        g.edge(eid)
        tally = self.census.edge_tally(eid)
        index = self.blocks.block_of_edge[eid]
        block = self.blocks.blocks[index]
        if self.blocks.is_isthmus_block(g, index):
            if tally.total:
                raise InvariantViolation(f"isthmus {eid} lies on {tally.total} circles")
            return EdgeBatteryCertificate(eid, tally, index)
        if is_circle(g, block):
            c = g.circle(block)
            if (tally.negative, tally.positive) != ((1, 0) if c.sign == NEG else (0, 1)):
                raise InvariantViolation(f"edge {eid} of a circle block has counts {tally.to_dict()}")
            witness = BatteryWitness(c, BatteryEvidence(TRIVIAL))
            if c.sign == NEG:
                return EdgeBatteryCertificate(eid, tally, index, negative=witness)
            return EdgeBatteryCertificate(eid, tally, index, positive=witness)

        analyzer = self.analyzer(index)
        through = self.census.through_edge(eid)
        witnesses: dict[int, BatteryWitness | None] = {}
        for sign in (NEG, POS):
            structural = []
            for c in through:
                ev = analyzer.evidence(eid, c, sign)
                if ev is not None:
                    structural.append(BatteryWitness(c, ev))
            unique = tally.unique(sign)
            label = sign_symbol(sign)
            if structural:
                if len(structural) != 1 or unique is None or structural[0].circle.edges != unique.edges:
                    raise InvariantViolation(
                        f"edge {eid}: structure certifies [{label}] on "
                        f"{[sorted(w.circle.edges) for w in structural]} but oracle counts {tally.to_dict()}"
                    )
                if structural[0].circle.sign != sign:
                    raise InvariantViolation(f"edge {eid}: certified circle has the wrong sign")
                witnesses[sign] = structural[0]
            else:
                if unique is not None:
                    raise InvariantViolation(
                        f"edge {eid}: oracle finds a unique {label} circle {sorted(unique.edges)} "
                        "but the structure certifies none"
                    )
                witnesses[sign] = None
        return EdgeBatteryCertificate(eid, tally, index, negative=witnesses[NEG], positive=witnesses[POS])


def classify_edge(g: SignedGraph, eid: int, cap: int = DEFAULT_CAP) -> EdgeBatteryCertificate:
    return EdgeBatteryAnalysis(g, cap).certificate(eid)


def classify_edges(g: SignedGraph, cap: int = DEFAULT_CAP) -> list[EdgeBatteryCertificate]:
    return EdgeBatteryAnalysis(g, cap).certificates()


def _witness_block(g: SignedGraph, cert: EdgeBatteryCertificate) -> SignedGraph:
    dec = decompose_blocks(g)
    return g.subgraph(dec.blocks[dec.block_of_edge[cert.edge]])


def negative_batteries_from(g: SignedGraph, cert: EdgeBatteryCertificate, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """All negative batteries of the block, located from one certified negative battery.

    Circle edges qualify exactly when they share the handle of the certified
    edge; an edge ``f`` off the circle qualifies iff exactly one path through
    its bridge contains ``f``.
    """
    if cert.negative is None:
        raise GraphError(f"certificate for edge {cert.edge} carries no negative evidence")
    ev = cert.negative.evidence
    if ev.kind == TRIVIAL:
        return cert.negative.circle.edges
    block = _witness_block(g, cert)
    report = ev.layering
    found = set(report.segments[ev.handle].edges)
    for bridge in report.bridges:
        uses: dict[int, int] = {}
        for p in paths_through_bridge(block, bridge, cap):
            for f in p.edges:
                uses[f] = uses.get(f, 0) + 1
        found.update(f for f, n in uses.items() if n == 1)
    return frozenset(found)


def positive_batteries_from(g: SignedGraph, cert: EdgeBatteryCertificate, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """All positive batteries of the block, located from one certified positive battery.

    Both handles qualify.  Off the circle: nothing with three or more
    bridges; with two bridges, all bridge edges iff both bridges are paths;
    with one bridge, the edges lying on exactly one circle inside it.
    """
    if cert.positive is None:
        raise GraphError(f"certificate for edge {cert.edge} carries no positive evidence")
    ev = cert.positive.evidence
    if ev.kind == TRIVIAL:
        return cert.positive.circle.edges
    block = _witness_block(g, cert)
    report = ev.layering
    found: set[int] = set()
    for h in report.handles:
        found.update(report.segments[h].edges)
    for bridge in report.bridges:
        if not is_balanced(block.subgraph(bridge.edges)).balanced:
            raise InvariantViolation(f"bridge {sorted(bridge.edges)} of a positive battery circle is unbalanced")
    bridges = report.bridges
    if len(bridges) == 2:
        def is_path(bridge) -> bool:
            paths = paths_through_bridge(block, bridge, cap)
            return len(paths) == 1 and set(paths[0].edges) == bridge.edges

        if all(is_path(b) for b in bridges):
            for b in bridges:
                found.update(b.edges)
    elif len(bridges) == 1:
        inner = enumerate_circles(block.subgraph(bridges[0].edges), cap)
        found.update(f for f in bridges[0].edges if inner.edge_tally(f).total == 1)
    return frozenset(found)


def lift_through_suppression(c: Circle, merged: int, pair: tuple[int, int], original: SignedGraph) -> Circle:
    """Map a circle through a suppressed edge back to the graph before suppression."""
    if merged not in c.edges:
        return original.circle(c.edges)
    return original.circle((c.edges - {merged}) | set(pair))


__all__ = [
    "BatteryEvidence",
    "BatteryWitness",
    "BlockAnalyzer",
    "EdgeBatteryAnalysis",
    "EdgeBatteryCertificate",
    "classify_edge",
    "classify_edges",
    "lift_through_suppression",
    "negative_batteries_from",
    "positive_batteries_from",
    "verify_edge_battery",
]
