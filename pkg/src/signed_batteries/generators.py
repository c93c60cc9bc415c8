"""Deterministic constructors for test corpora.

Randomness comes from SplitMix64 so that a seed names the same graph on any
platform and in any implementation:

    state  <- state + 0x9E3779B97F4A7C15           (mod 2**64)
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2**64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB (mod 2**64)
    output <- z ^ (z >> 31)

An integer below ``n`` is ``(output * n) >> 64``; a float in [0, 1) is
``(output >> 11) / 2**53``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence, Union

from .bridges import analyze_layering
from .errors import GraphError
from .graph import NEG, POS, Edge, SignedGraph

_MASK = (1 << 64) - 1

NEGATIVE_MODE = "negative-battery"
POSITIVE_MODE = "positive-battery"
CUSTOM_MODE = "custom"

BridgeSpec = Union[str, int, Sequence[tuple]]


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        return (self.next() * n) >> 64

    def random(self) -> float:
        return (self.next() >> 11) / float(1 << 53)

    def sign(self, p_neg: float = 0.5) -> int:
        return NEG if self.random() < p_neg else POS


def _check_signs(signs: Sequence[int] | None, m: int) -> list[int]:
    if signs is None:
        return [POS] * m
    signs = [parse_sign_token(s) for s in signs]
    if len(signs) != m:
        raise GraphError(f"expected {m} signs, got {len(signs)}")
    return signs


def parse_sign_token(s) -> int:
    if s in (POS, NEG):
        return s
    if s == "+":
        return POS
    if s == "-":
        return NEG
    raise GraphError(f"unknown sign {s!r}")


def _paths_between(ends: Sequence[tuple[int, int]], lengths: Sequence[int], signs: Sequence[int] | None, first_free: int) -> SignedGraph:
    total = sum(lengths)
    signs = _check_signs(signs, total)
    edges = []
    verts = {x for pair in ends for x in pair}
    nxt = first_free
    for (a, b), length in zip(ends, lengths):
        if length < 1:
            raise GraphError("path lengths must be at least 1")
        chain = [a] + list(range(nxt, nxt + length - 1)) + [b]
        nxt += length - 1
        for i in range(length):
            edges.append(Edge(len(edges), chain[i], chain[i + 1], signs[len(edges)]))
        verts.update(chain)
    return SignedGraph(verts, edges)


def gen_theta(len1: int, len2: int, len3: int, signs: Sequence[int] | None = None) -> SignedGraph:
    """Three paths between vertices 0 and 1; edge ids run along path 1, then 2, then 3."""
    return _paths_between([(0, 1)] * 3, (len1, len2, len3), signs, 2)


K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def gen_k4_subdivision(lengths: Sequence[int], signs: Sequence[int] | None = None) -> SignedGraph:
    """Subdivision of K4 on branch vertices 0..3, edges subdivided in ``K4_EDGES`` order."""
    if len(lengths) != 6:
        raise GraphError("a K4 subdivision needs 6 path lengths")
    return _paths_between(K4_EDGES, lengths, signs, 4)


def gen_layered(
    handle_lengths: Sequence[int] = (1, 1),
    segment_lengths: Sequence[int] | None = None,
    bridges: Sequence[BridgeSpec] = ("chord",),
    mode: str = NEGATIVE_MODE,
    signs: Sequence[int] | None = None,
) -> SignedGraph:
    """A C-layered block built as a ladder.

    The circle ``C`` has edge ids ``0 .. L-1`` in cyclic order starting at
    vertex 0: first handle 1 (ids ``0 .. h1-1``), then the right side, then
    handle 2, then the left side.  Bridge ``i`` joins rung endpoints
    ``a_i`` (left) and ``b_i`` (right); rung 1 spans handle 1 and the last
    rung spans handle 2.  ``segment_lengths`` holds the ``k-1`` left gaps
    followed by the ``k-1`` right gaps between consecutive rungs (0 lets
    neighbouring rungs share an endpoint; default 1).

    A bridge spec is ``"chord"``, a path length ``L >= 1``, or a sequence of
    ``(x, y)`` edges whose ends are ``"a"``, ``"b"`` or core labels.

    Modes: ``negative-battery`` puts one negative edge in the middle of
    handle 2; ``positive-battery`` keeps ``C`` positive and negates every
    bridge edge at ``b_i`` so each path through a bridge is negative.
    """
    k = len(bridges)
    if k < 1:
        raise GraphError("a layered block needs at least one bridge")
    h1, h2 = handle_lengths
    if h1 < 1 or h2 < 1:
        raise GraphError("handle lengths must be at least 1")
    if segment_lengths is None:
        segment_lengths = [1] * (2 * (k - 1))
    if len(segment_lengths) != 2 * (k - 1) or any(x < 0 for x in segment_lengths):
        raise GraphError(f"expected {2 * (k - 1)} non-negative segment lengths")
    left, right = list(segment_lengths[: k - 1]), list(segment_lengths[k - 1 :])

    b_pos = [h1]
    for gap in right:
        b_pos.append(b_pos[-1] + gap)
    a_pos = [b_pos[-1] + h2]
    for gap in reversed(left):
        a_pos.append(a_pos[-1] + gap)
    size = a_pos[-1]
    a_pos.reverse()
    a_pos = [p % size for p in a_pos]

    edges = [Edge(i, i, (i + 1) % size, POS) for i in range(size)]
    verts = set(range(size))
    at_b: set[int] = set()
    free = size
    for i, spec in enumerate(bridges):
        a, b = a_pos[i], b_pos[i]
        if spec == "chord":
            spec = 1
        if isinstance(spec, int):
            if spec < 1:
                raise GraphError("bridge path length must be at least 1")
            spec = [(("a" if j == 0 else j - 1), ("b" if j == spec - 1 else j)) for j in range(spec)]
        labels: dict = {"a": a, "b": b}
        for x, y in spec:
            for z in (x, y):
                if z not in labels:
                    labels[z] = free
                    free += 1
            eid = len(edges)
            edges.append(Edge(eid, labels[x], labels[y], POS))
            if b in (labels[x], labels[y]):
                at_b.add(eid)
        verts.update(labels.values())

    if mode == NEGATIVE_MODE:
        target = h1 + sum(right) + h2 // 2
        edges[target] = edges[target].with_sign(NEG)
    elif mode == POSITIVE_MODE:
        edges = [e.with_sign(NEG) if e.id in at_b else e for e in edges]
    elif mode == CUSTOM_MODE:
        chosen = _check_signs(signs, len(edges))
        edges = [e.with_sign(s) for e, s in zip(edges, chosen)]
    else:
        raise GraphError(f"unknown signature mode {mode!r}")

    g = SignedGraph(verts, edges)
    report = analyze_layering(g, range(size))
    if not report.c_layered:
        raise GraphError(f"bridge specification does not give a C-layered block ({report.failure})")
    return g


def gen_random(n: int, m: int, p_neg: float = 0.5, seed: int = 0, simple: bool = False) -> SignedGraph:
    """``m`` edges with endpoints drawn uniformly with replacement on vertices ``0..n-1``.

    With ``simple`` loops and repeated pairs are redrawn.
    """
    if m < 0 or not 0.0 <= p_neg <= 1.0:
        raise GraphError("need m >= 0 and 0 <= p_neg <= 1")
    if m and n < 1:
        raise GraphError("edges need at least one vertex")
    if simple and m > n * (n - 1) // 2:
        raise GraphError(f"a simple graph on {n} vertices has at most {n * (n - 1) // 2} edges")
    rng = SplitMix64(seed)
    edges = []
    used: set[frozenset[int]] = set()
    for i in range(m):
        while True:
            u, v = rng.below(n), rng.below(n)
            if not simple or (u != v and frozenset((u, v)) not in used):
                break
        used.add(frozenset((u, v)))
        edges.append(Edge(i, u, v, rng.sign(p_neg)))
    return SignedGraph(range(n), edges)


def random_switching(g: SignedGraph, seed: int) -> dict[int, int]:
    rng = SplitMix64(seed)
    return {v: rng.sign() for v in sorted(g.vertices)}


def random_signs(m: int, seed: int, p_neg: float = 0.5) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.sign(p_neg) for _ in range(m)]


def all_signatures(g: SignedGraph) -> Iterator[SignedGraph]:
    """Every one of the ``2**m`` signatures on the underlying graph of ``g``."""
    ids = g.edge_ids
    for bits in range(1 << len(ids)):
        yield g.with_signs({eid: NEG if bits >> i & 1 else POS for i, eid in enumerate(ids)})


def connected_simple_graphs(max_vertices: int, max_edges: int, labeled: bool = False) -> list[SignedGraph]:
    """All-positive connected simple graphs on vertex sets ``0..n-1``.

    By default one representative per isomorphism class; with ``labeled``
    every labelled graph is returned.
    """
    found: list[SignedGraph] = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        perms = list(itertools.permutations(range(n)))
        classes: set[tuple] = set()
        for m in range(0, min(max_edges, len(pairs)) + 1):
            for chosen in itertools.combinations(pairs, m):
                if not _connected(n, chosen):
                    continue
                if labeled:
                    found.append(SignedGraph.from_edges([(a, b, POS) for a, b in chosen], range(n)))
                    continue
                canon = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in chosen)) for p in perms)
                if canon in classes:
                    continue
                classes.add(canon)
                found.append(SignedGraph.from_edges([(a, b, POS) for a, b in canon], range(n)))
    return found


def _connected(n: int, pairs: Sequence[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(x) for x in range(n)}) == 1


def hexagon_instance(mode: str) -> SignedGraph:
    """Hexagon 1..6 with chords 1-3 and 4-6 (ids 0..5 around, 6 and 7 the chords).

    Negative mode: edge 4-5 negative, all else positive.  Positive mode:
    hexagon positive, both chords negative.
    """
    if mode == NEGATIVE_MODE:
        signs = [POS, POS, POS, NEG, POS, POS, POS, POS]
    elif mode == POSITIVE_MODE:
        signs = [POS] * 6 + [NEG, NEG]
    else:
        raise GraphError(f"unknown mode {mode!r}")
    pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 3), (4, 6)]
    return SignedGraph.from_edges([(a, b, s) for (a, b), s in zip(pairs, signs)])


def builtin_corpus(seed: int = 0) -> list[tuple[str, SignedGraph]]:
    """Small named corpus used by ``verify`` when no files are given."""
    corpus = [
        ("hexagon-negative", hexagon_instance(NEGATIVE_MODE)),
        ("hexagon-positive", hexagon_instance(POSITIVE_MODE)),
        ("k4-positive", gen_k4_subdivision([1] * 6)),
        ("theta-1-2-2", gen_theta(1, 2, 2, random_signs(5, seed))),
        ("theta-1-1-1", gen_theta(1, 1, 1, [POS, POS, NEG])),
        ("layered-path-bridge", gen_layered((2, 2), None, [3], NEGATIVE_MODE)),
        ("layered-three-bridges", gen_layered((2, 1), [1, 0, 1, 1], ["chord", 2, [("a", 0), (0, "b"), (0, 1), (1, "b")]], POSITIVE_MODE)),
    ]
    for i in range(24):
        rng = SplitMix64(seed * 1000 + i)
        n = 1 + rng.below(8)
        m = rng.below(15)
        corpus.append((f"random-{i}", gen_random(n, m, 0.5, seed * 1000 + i)))
    return corpus
