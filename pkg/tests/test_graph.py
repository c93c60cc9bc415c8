import pytest
from hypothesis import given

from conftest import N, P, brute_circles, brute_counts, graph, signed_multigraphs
from signed_batteries.errors import GraphError, ParseError, PreconditionError
from signed_batteries.fileformat import (
    graph_from_dict,
    graph_to_dict,
    parse_graph,
    parse_switching,
    format_switching,
    serialize_graph,
)
from signed_batteries.graph import (
    circle_sign,
    cyclic_order,
    is_circle,
    subdivide_edge,
    suppress_vertex,
    symmetric_difference,
)
from signed_batteries.generators import gen_k4_subdivision

K4 = gen_k4_subdivision([1] * 6)


def test_parse_triangle():
    g = parse_graph("1 2 +\n2 3 -\n3 1 +")
    assert [(e.id, e.u, e.v, e.sign) for e in g.edges] == [(0, 1, 2, P), (1, 2, 3, N), (2, 3, 1, P)]
    assert g.vertices == {1, 2, 3}


def test_parse_loop_and_digon():
    loop = parse_graph("1 1 -")
    assert loop.edges[0].is_loop and loop.edges[0].sign == N
    digon = parse_graph("1 2 +\n1 2 -")
    assert [e.sign for e in digon.edges] == [P, N]
    assert is_circle(digon, [0, 1])


def test_parse_comments_and_isolated_vertices():
    g = parse_graph("# header\n\n0 1 +\nv 5\n")
    assert g.vertices == {0, 1, 5}
    assert serialize_graph(g) == "0 1 +\nv 5\n"


@pytest.mark.parametrize(
    "text, line",
    [("1 2 +\n1 2", 2), ("1 2 *", 1), ("a 2 +", 1), ("0 1 +\n-1 2 +", 2), ("v", 1)],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_json_duplicate_edge_id():
    data = {"vertices": [0, 1], "edges": [{"id": 3, "u": 0, "v": 1, "sign": "+"}, {"id": 3, "u": 1, "v": 0, "sign": "-"}]}
    with pytest.raises(ParseError, match="duplicate"):
        graph_from_dict(data)


def test_json_keeps_ids():
    g, _ = suppress_vertex(graph((0, 1, P), (1, 2, N), (2, 0, P)), 1)
    assert graph_from_dict(graph_to_dict(g)) == g


@given(signed_multigraphs())
def test_text_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g
    assert serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g)


def test_switching_lines_round_trip():
    zeta = {0: P, 3: N}
    assert parse_switching(format_switching(zeta)) == zeta


def test_is_circle_examples():
    tri = graph((0, 1, P), (1, 2, P), (2, 0, P))
    assert is_circle(tri, [0, 1, 2])
    assert not is_circle(tri, [0, 1])
    assert is_circle(graph((3, 3, N)), [0])
    assert not is_circle(tri, [])
    with pytest.raises(GraphError):
        is_circle(tri, [7])


def test_two_disjoint_triangles_are_not_one_circle():
    g = graph((0, 1, P), (1, 2, P), (2, 0, P), (3, 4, P), (4, 5, P), (5, 3, P))
    assert not is_circle(g, range(6))


@pytest.mark.parametrize(
    "signs, expected",
    [((P, P, N), N), ((P, N, N), P)],
)
def test_circle_sign_triangle(signs, expected):
    g = graph((0, 1, signs[0]), (1, 2, signs[1]), (2, 0, signs[2]))
    assert circle_sign(g, [0, 1, 2]) == expected


def test_circle_sign_digon_and_errors():
    assert circle_sign(graph((0, 1, P), (0, 1, N)), [0, 1]) == N
    with pytest.raises(GraphError):
        circle_sign(graph((0, 1, P), (1, 2, P)), [0, 1])


def test_symmetric_difference_identity():
    c = K4.circle([0, 1, 3])
    assert symmetric_difference(c, c) == frozenset()


def test_symmetric_difference_k4_triangles():
    # triangles 0-1-2 and 0-1-3 share edge 0 (0-1); brute force lists the 4-circle {1,2,3,4}
    t1, t2 = K4.circle([0, 1, 3]), K4.circle([0, 2, 4])
    d = symmetric_difference(t1, t2)
    assert d == frozenset({1, 2, 3, 4})
    assert d in brute_circles(K4)


def test_symmetric_difference_theta_sign():
    # theta with paths 0-1 | 0-2-1 | 0-3-1; the third circle carries the product sign
    g = graph((0, 1, P), (0, 2, N), (2, 1, P), (0, 3, P), (3, 1, P))
    c1, c2 = g.circle([0, 1, 2]), g.circle([0, 3, 4])
    third = symmetric_difference(c1, c2)
    assert third == frozenset({1, 2, 3, 4})
    assert circle_sign(g, third) == c1.sign * c2.sign


@given(signed_multigraphs(max_vertices=5, max_edges=7))
def test_theta_third_circle_sign(g):
    circles = [g.circle(c) for c in brute_circles(g)]
    for c1 in circles:
        for c2 in circles:
            shared = c1.edges & c2.edges
            if not shared or c1 == c2:
                continue
            # intersection is a single path iff it is connected and acyclic with two ends
            sub = g.subgraph(shared)
            if len(sub.vertices) != len(shared) + 1 or any(sub.degree(v) > 2 for v in sub.vertices):
                continue
            if c1.vertices & c2.vertices != sub.vertices:
                continue
            d = symmetric_difference(c1, c2)
            assert is_circle(g, d)
            assert circle_sign(g, d) == c1.sign * c2.sign


def test_subdivide_identity_for_single_part():
    g = graph((0, 1, N), (1, 2, P))
    assert subdivide_edge(g, 0, [N]) == g


def test_subdivide_keeps_circle_signs():
    g = graph((0, 1, N), (1, 2, P), (2, 0, P))
    h = subdivide_edge(g, 0, [P, N])
    assert len(h.edges) == 4 and len(h.vertices) == 4
    assert [h.circle(c).sign for c in brute_circles(h)] == [N]


def test_subdivide_rejects_wrong_product():
    g = graph((0, 1, N))
    with pytest.raises(GraphError):
        subdivide_edge(g, 0, [P, P])
    with pytest.raises(GraphError):
        subdivide_edge(g, 0, [])


def test_subdivided_k4_counts():
    h = K4
    for eid in K4.edge_ids:
        h = subdivide_edge(h, eid, [P, P])
    assert len(h.edges) == 12
    # brute force: every edge of the subdivided K4 lies on 4 positive circles
    for eid in h.edge_ids:
        assert brute_counts(h, edge=eid) == (0, 4)


@given(signed_multigraphs(max_vertices=5, max_edges=7))
def test_subdivide_preserves_sign_census(g):
    if not g.edges:
        return
    e = g.edges[0]
    h = subdivide_edge(g, e.id, [N, N * e.sign, P])
    before = sorted(g.circle(c).sign for c in brute_circles(g))
    after = sorted(h.circle(c).sign for c in brute_circles(h))
    assert before == after


@pytest.mark.parametrize("signs, expected", [((N, N), P), ((P, N), N)])
def test_suppress_product_rule(signs, expected):
    g = graph((1, 0, signs[0]), (0, 2, signs[1]), (1, 2, P))
    h, ev = suppress_vertex(g, 0)
    assert h.edge(ev).sign == expected
    assert {h.edge(ev).u, h.edge(ev).v} == {1, 2}
    assert 0 not in h.vertices


def test_suppress_square():
    sq = graph((0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P))
    tri, ev = suppress_vertex(sq, 2)
    assert brute_counts(sq, vertex=2) == brute_counts(tri, edge=ev) == (1, 0)
    assert [tri.circle(c).sign for c in brute_circles(tri)] == [N]


def test_suppress_digon_makes_loop():
    h, ev = suppress_vertex(graph((0, 1, P), (0, 1, N)), 0)
    assert h.edge(ev).is_loop and h.edge(ev).sign == N


def test_suppress_preconditions():
    with pytest.raises(PreconditionError):
        suppress_vertex(K4, 0)
    with pytest.raises(PreconditionError):
        suppress_vertex(graph((0, 0, P)), 0)


def test_cyclic_order_canonical():
    g = graph((5, 2, P), (2, 9, P), (9, 5, P))
    verts, edges = cyclic_order(g, g.circle([0, 1, 2]))
    assert verts == (2, 5, 9)
    assert edges == (0, 2, 1)
