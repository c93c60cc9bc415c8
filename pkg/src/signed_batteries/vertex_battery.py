"""Vertex batteries, reduced to edge batteries by suppressing degree-2 vertices.

A vertex can sit in several blocks.  It is a negative battery when exactly
one block through it is unbalanced, it has degree 2 there, and the
suppressed edge is a negative edge battery.  It is a positive battery when
exactly one block gives it a unique positive circle and in every other
block it lies only on negative circles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .edge_battery import EdgeBatteryAnalysis, EdgeBatteryCertificate, lift_through_suppression
from .errors import GraphError, InvariantViolation
from .graph import NEG, POS, Circle, SignedGraph, suppress_vertex
from .oracle import DEFAULT_CAP, CircleTally
from .switching import balancing_edges

BALANCED = "balanced"
ONLY_NEGATIVE = "v-only-negative"
CASE_CIRCLE = "v-unique-positive-case-1"
CASE_SUPPRESSED = "v-unique-positive-case-2"
CASE_ONE_BRIDGE = "v-unique-positive-case-3"
OTHER = "other"

UNIQUE_POSITIVE = (CASE_CIRCLE, CASE_SUPPRESSED, CASE_ONE_BRIDGE)


@dataclass(frozen=True)
class BlockFinding:
    block: int
    category: str
    degree: int
    balanced: bool
    suppressed_edge: int | None = None
    suppressed_certificate: EdgeBatteryCertificate | None = None
    # unique positive circle through v in this block (case tags only), in the original ids
    positive_circle: Circle | None = None

    def to_dict(self) -> dict:
        out = {"block": self.block, "category": self.category, "degree": self.degree, "balanced": self.balanced}
        if self.suppressed_certificate is not None:
            cert = self.suppressed_certificate
            out["suppressed_edge"] = {
                "edge": self.suppressed_edge,
                "negative_battery": cert.is_negative_battery,
                "positive_battery": cert.is_positive_battery,
                "counts": cert.counts.to_dict(),
            }
        if self.positive_circle is not None:
            out["positive_circle"] = self.positive_circle.to_dict()
        return out


@dataclass(frozen=True)
class VertexWitness:
    circle: Circle
    block: int
    case: str

    def to_dict(self) -> dict:
        return {"circle": self.circle.to_dict(), "block": self.block, "case": self.case}


@dataclass(frozen=True)
class VertexBatteryCertificate:
    vertex: int
    counts: CircleTally
    findings: tuple[BlockFinding, ...] = ()
    negative: VertexWitness | None = None
    positive: VertexWitness | None = None

    @property
    def is_negative_battery(self) -> bool:
        return self.negative is not None

    @property
    def is_positive_battery(self) -> bool:
        return self.positive is not None

    def verdict(self) -> tuple:
        return (
            self.vertex,
            None if self.negative is None else tuple(sorted(self.negative.circle.edges)),
            None if self.positive is None else tuple(sorted(self.positive.circle.edges)),
            self.counts.negative,
            self.counts.positive,
        )

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "counts": self.counts.to_dict(),
            "negative": None if self.negative is None else self.negative.to_dict(),
            "positive": None if self.positive is None else self.positive.to_dict(),
            "blocks": [f.to_dict() for f in self.findings],
        }


class VertexBatteryAnalysis:
    """Per-graph vertex classification on top of an :class:`EdgeBatteryAnalysis`."""

    def __init__(self, g: SignedGraph, cap: int = DEFAULT_CAP, edges: EdgeBatteryAnalysis | None = None) -> None:
        self.graph = g
        self.cap = cap
        self.edges = edges if edges is not None else EdgeBatteryAnalysis(g, cap)
        self._suppressed: dict[tuple[int, int], tuple[SignedGraph, int, EdgeBatteryCertificate, tuple[int, int]]] = {}
        self._findings: dict[tuple[int, int], BlockFinding] = {}
        self._certs: dict[int, VertexBatteryCertificate] = {}

    @property
    def blocks(self):
        return self.edges.blocks

    def cyclic_blocks(self, v: int) -> list[int]:
        """Blocks containing ``v`` that contain a circle."""
        self.graph.incident(v)
        return [
            i for i in sorted(self.blocks.blocks_of_vertex.get(v, ())) if not self.blocks.is_isthmus_block(self.graph, i)
        ]

    def _check_block(self, v: int, index: int) -> None:
        if index < 0 or index >= len(self.blocks.blocks) or index not in self.blocks.blocks_of_vertex.get(v, ()):
            raise GraphError(f"block {index} does not contain vertex {v}")
        if self.blocks.is_isthmus_block(self.graph, index):
            raise GraphError(f"block {index} contains no circle")

    def suppressed(self, v: int, index: int):
        """``(B↓v, e_v, certificate of e_v, original edge pair)`` for a degree-2 vertex."""
        key = (v, index)
        if key not in self._suppressed:
            block = self.blocks.block_graph(self.graph, index)
            pair = tuple(sorted(block.incident(v)))
            reduced, merged = suppress_vertex(block, v)
            cert = EdgeBatteryAnalysis(reduced, self.cap).certificate(merged)
            self._suppressed[key] = (reduced, merged, cert, pair)
        return self._suppressed[key]

    def only_negative(self, v: int, index: int) -> bool:
        self._check_block(v, index)
        return self.finding(v, index).category == ONLY_NEGATIVE

    def unique_positive(self, v: int, index: int) -> tuple[bool, str | None]:
        self._check_block(v, index)
        category = self.finding(v, index).category
        return (True, category) if category in UNIQUE_POSITIVE else (False, None)

    def finding(self, v: int, index: int) -> BlockFinding:
        key = (v, index)
        if key not in self._findings:
            self._findings[key] = self._find(v, index)
        return self._findings[key]

    def _find(self, v: int, index: int) -> BlockFinding:
        g = self.graph
        edges = self.blocks.blocks[index]
        degree = g.degree(v, within=edges)
        balanced = self.edges.block_balanced(index)
        if self.blocks.is_circle_block(g, index):
            c = g.circle(edges)
            if c.sign == POS:
                return BlockFinding(index, CASE_CIRCLE, degree, balanced, positive_circle=c)
            # a negative loop cannot be suppressed but is only-negative outright
            if c.length == 1:
                return BlockFinding(index, ONLY_NEGATIVE, degree, balanced)
        if balanced:
            return BlockFinding(index, BALANCED, degree, balanced)
        if degree == 2:
            reduced, merged, cert, pair = self.suppressed(v, index)
            if merged in balancing_edges(reduced):
                return BlockFinding(index, ONLY_NEGATIVE, degree, balanced, merged, cert)
            if cert.positive is not None:
                lifted = lift_through_suppression(cert.positive.circle, merged, pair, g)
                return BlockFinding(index, CASE_SUPPRESSED, degree, balanced, merged, cert, lifted)
            return BlockFinding(index, OTHER, degree, balanced, merged, cert)
        if degree == 3:
            c = self._one_bridge_circle(v, index)
            if c is not None:
                return BlockFinding(index, CASE_ONE_BRIDGE, degree, balanced, positive_circle=c)
        return BlockFinding(index, OTHER, degree, balanced)

    def _one_bridge_circle(self, v: int, index: int) -> Circle | None:
        """The positive circle ``C`` through ``v`` for which the block is C-layered with
        one bridge attached at ``v`` and every edge of ``C`` is a positive battery."""
        analyzer = self.edges.analyzer(index)
        block = self.blocks.blocks[index]
        matches = []
        for c in self.edges.census.through_vertex(v):
            if not c.edges <= block:
                continue
            report = analyzer.layering(c)
            if not report.c_layered or len(report.bridges) != 1 or v not in report.bridges[0].attachments:
                continue
            if all(analyzer.evidence(f, c, POS) is not None for f in c.edges):
                matches.append(c)
        if len(matches) > 1:
            raise InvariantViolation(f"vertex {v}: several circles satisfy the one-bridge case in block {index}")
        return matches[0] if matches else None

    def negative_verdict(self, v: int) -> tuple[bool, VertexWitness | None]:
        unbalanced = [i for i in self.cyclic_blocks(v) if not self.edges.block_balanced(i)]
        if len(unbalanced) != 1:
            return False, None
        index = unbalanced[0]
        edges = self.blocks.blocks[index]
        if self.graph.degree(v, within=edges) != 2:
            return False, None
        if self.blocks.is_circle_block(self.graph, index) and len(edges) == 1:
            return True, VertexWitness(self.graph.circle(edges), index, "loop")
        _, merged, cert, pair = self.suppressed(v, index)
        if cert.negative is None:
            return False, None
        circle = lift_through_suppression(cert.negative.circle, merged, pair, self.graph)
        return True, VertexWitness(circle, index, "suppressed-negative-battery")

    def positive_verdict(self, v: int) -> tuple[bool, VertexWitness | None]:
        findings = [self.finding(v, i) for i in self.cyclic_blocks(v)]
        unique = [f for f in findings if f.category in UNIQUE_POSITIVE]
        if len(unique) != 1:
            return False, None
        if any(f.category != ONLY_NEGATIVE for f in findings if f is not unique[0]):
            return False, None
        return True, VertexWitness(unique[0].positive_circle, unique[0].block, unique[0].category)

    def certificate(self, v: int) -> VertexBatteryCertificate:
        cert = self._certs.get(v)
        if cert is None:
            cert = self._classify(v)
            self._certs[v] = cert
        return cert

    def certificates(self) -> list[VertexBatteryCertificate]:
        return [self.certificate(v) for v in sorted(self.graph.vertices)]

    def _classify(self, v: int) -> VertexBatteryCertificate:
        tally = self.edges.census.vertex_tally(v)
        neg_ok, neg = self.negative_verdict(v)
        pos_ok, pos = self.positive_verdict(v)
        for sign, ok, witness in ((NEG, neg_ok, neg), (POS, pos_ok, pos)):
            unique = tally.unique(sign)
            label = "negative" if sign == NEG else "positive"
            if ok != (unique is not None):
                raise InvariantViolation(
                    f"vertex {v}: structural {label} verdict {ok} but oracle counts {tally.to_dict()}"
                )
            if ok and (witness.circle.edges != unique.edges or witness.circle.sign != sign):
                raise InvariantViolation(
                    f"vertex {v}: structural {label} circle {sorted(witness.circle.edges)} "
                    f"differs from oracle circle {sorted(unique.edges)}"
                )
        findings = tuple(self.finding(v, i) for i in self.cyclic_blocks(v))
        return VertexBatteryCertificate(v, tally, findings, neg, pos)


def classify_vertex_negative(g: SignedGraph, v: int, cap: int = DEFAULT_CAP) -> tuple[bool, VertexWitness | None]:
    return VertexBatteryAnalysis(g, cap).negative_verdict(v)


def vertex_only_negative_in_block(g: SignedGraph, v: int, block: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff ``v`` lies on at least one circle of the block and all of them are negative."""
    return VertexBatteryAnalysis(g, cap).only_negative(v, block)


def vertex_unique_positive_in_block(
    g: SignedGraph, v: int, block: int, cap: int = DEFAULT_CAP
) -> tuple[bool, str | None]:
    return VertexBatteryAnalysis(g, cap).unique_positive(v, block)


def classify_vertex(g: SignedGraph, v: int, cap: int = DEFAULT_CAP) -> VertexBatteryCertificate:
    return VertexBatteryAnalysis(g, cap).certificate(v)


def classify_vertices(g: SignedGraph, cap: int = DEFAULT_CAP) -> list[VertexBatteryCertificate]:
    return VertexBatteryAnalysis(g, cap).certificates()
