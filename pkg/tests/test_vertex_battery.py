import pytest
from hypothesis import given, settings

from conftest import N, P, brute_counts, graph, signed_multigraphs
from signed_batteries.errors import GraphError
from signed_batteries.generators import POSITIVE_MODE, gen_k4_subdivision, gen_theta, hexagon_instance
from signed_batteries.vertex_battery import (
    BALANCED,
    CASE_CIRCLE,
    CASE_ONE_BRIDGE,
    CASE_SUPPRESSED,
    ONLY_NEGATIVE,
    OTHER,
    VertexBatteryAnalysis,
    classify_vertex,
    classify_vertex_negative,
    classify_vertices,
    vertex_only_negative_in_block,
    vertex_unique_positive_in_block,
)

UNBALANCED_TRIANGLE = graph((0, 1, P), (1, 2, P), (2, 0, N))


def test_square_suppression():
    sq = graph((0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P))
    ok, witness = classify_vertex_negative(sq, 2)
    assert ok and witness.circle.edges == {0, 1, 2, 3}
    assert brute_counts(sq, vertex=2) == (1, 0)


def test_triangle_vertex_is_negative_battery():
    cert = classify_vertex(UNBALANCED_TRIANGLE, 0)
    assert (cert.counts.negative, cert.counts.positive) == (1, 0)
    assert cert.is_negative_battery and not cert.is_positive_battery
    assert vertex_only_negative_in_block(UNBALANCED_TRIANGLE, 0, 0)


def test_two_unbalanced_blocks_at_a_vertex():
    g = graph((0, 1, P), (1, 2, P), (2, 0, N), (0, 3, P), (3, 4, P), (4, 0, N))
    assert brute_counts(g, vertex=0) == (2, 0)
    cert = classify_vertex(g, 0)
    assert not cert.is_negative_battery and not cert.is_positive_battery
    # each block still sees v only on negative circles
    assert vertex_only_negative_in_block(g, 0, 0) and vertex_only_negative_in_block(g, 0, 1)


def test_all_negative_k4():
    g = gen_k4_subdivision([1] * 6, [N] * 6)
    assert brute_counts(g, vertex=0) == (3, 3)
    cert = classify_vertex(g, 0)
    assert not cert.is_negative_battery and not cert.is_positive_battery
    assert cert.findings[0].category == OTHER


def test_positive_k4_is_balanced():
    cert = classify_vertex(gen_k4_subdivision([1] * 6), 0)
    assert cert.findings[0].category == BALANCED
    assert (cert.counts.negative, cert.counts.positive) == (0, 6)


def test_hexagon_degree_two_vertex_is_positive_battery():
    g = hexagon_instance(POSITIVE_MODE)
    assert brute_counts(g, vertex=2) == (2, 1)
    cert = classify_vertex(g, 2)
    assert cert.is_positive_battery and cert.positive.case == CASE_SUPPRESSED
    assert cert.positive.circle.edges == set(range(6))
    assert vertex_unique_positive_in_block(g, 2, 0) == (True, CASE_SUPPRESSED)


def test_cut_vertex_of_triangle_and_square():
    g = graph((0, 1, P), (1, 2, P), (2, 0, N), (0, 3, P), (3, 4, P), (4, 5, P), (5, 0, P))
    assert brute_counts(g, vertex=0) == (1, 1)
    cert = classify_vertex(g, 0)
    assert cert.negative.circle.edges == {0, 1, 2}
    assert cert.positive.circle.edges == {3, 4, 5, 6}
    assert cert.positive.case == CASE_CIRCLE
    assert [f.category for f in cert.findings] == [ONLY_NEGATIVE, CASE_CIRCLE]


def test_theta_junction_one_bridge_case():
    # paths 0-1 (+) | 0-2-1 (+,+) | 0-3-1 (+,-): only the first two form a positive circle
    g = gen_theta(1, 2, 2, [P, P, P, P, N])
    assert brute_counts(g, vertex=0) == (2, 1)
    cert = classify_vertex(g, 0)
    assert cert.is_positive_battery and cert.positive.case == CASE_ONE_BRIDGE
    assert cert.positive.circle.edges == {0, 1, 2}
    assert vertex_unique_positive_in_block(g, 0, 0) == (True, CASE_ONE_BRIDGE)


def test_theta_with_all_circles_positive():
    g = gen_theta(1, 2, 2, [P, P, P, N, N])
    assert brute_counts(g, vertex=0) == (0, 3)
    cert = classify_vertex(g, 0)
    assert not cert.is_positive_battery
    assert cert.findings[0].category == BALANCED


def test_negative_loop_vertex():
    g = graph((0, 0, N), (0, 1, P))
    cert = classify_vertex(g, 0)
    assert cert.is_negative_battery and cert.negative.circle.edges == {0}


def test_isolated_and_acyclic_vertices():
    g = graph((0, 1, P), vertices=[7])
    for v in (0, 1, 7):
        cert = classify_vertex(g, v)
        assert cert.findings == () and cert.negative is None and cert.positive is None


def test_block_argument_checked():
    with pytest.raises(GraphError):
        vertex_only_negative_in_block(UNBALANCED_TRIANGLE, 0, 3)
    with pytest.raises(GraphError):
        vertex_unique_positive_in_block(graph((0, 1, P)), 0, 0)
    with pytest.raises(GraphError):
        classify_vertex(UNBALANCED_TRIANGLE, 9)


def test_to_dict_shape():
    d = classify_vertex(hexagon_instance(POSITIVE_MODE), 2).to_dict()
    assert set(d) == {"vertex", "counts", "negative", "positive", "blocks"}
    assert d["blocks"][0]["suppressed_edge"]["positive_battery"] is True


@settings(max_examples=150, deadline=None)
@given(signed_multigraphs(max_vertices=6, max_edges=10))
def test_vertex_verdicts_match_brute_force(g):
    for cert in classify_vertices(g):
        neg, pos = brute_counts(g, vertex=cert.vertex)
        assert cert.is_negative_battery == (neg == 1)
        assert cert.is_positive_battery == (pos == 1)


@settings(max_examples=100, deadline=None)
@given(signed_multigraphs(max_vertices=6, max_edges=10))
def test_only_negative_matches_block_counts(g):
    analysis = VertexBatteryAnalysis(g)
    for v in sorted(g.vertices):
        for i in analysis.cyclic_blocks(v):
            block = analysis.blocks.block_graph(g, i)
            neg, pos = brute_counts(block, vertex=v)
            assert analysis.only_negative(v, i) == (neg >= 1 and pos == 0)
            assert analysis.unique_positive(v, i)[0] == (pos == 1)
