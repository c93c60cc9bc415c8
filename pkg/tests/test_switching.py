import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import N, P, brute_circles, graph, signed_multigraphs
from signed_batteries.errors import GraphError
from signed_batteries.generators import gen_k4_subdivision
from signed_batteries.switching import (
    BalanceReport,
    apply_switching,
    balancing_edges,
    find_switching,
    is_balanced,
    switching_equivalent,
)


def brute_balanced(g) -> bool:
    return all(g.circle(c).sign == P for c in brute_circles(g))


def brute_balancing(g) -> set[int]:
    """Edges left as the only negative edge by some switching (all 2^n tried)."""
    verts = sorted(g.vertices)
    found = set()
    for choice in itertools.product((P, N), repeat=len(verts)):
        h = apply_switching(g, dict(zip(verts, choice)))
        neg = [e.id for e in h.edges if e.sign == N]
        if len(neg) == 1:
            found.add(neg[0])
    return found


def test_switching_triangle():
    g = graph((1, 2, P), (2, 3, N), (3, 1, P))
    h = apply_switching(g, {2: N})
    assert [e.sign for e in h.edges] == [N, P, P]


def test_switching_leaves_loops_alone():
    g = graph((0, 0, N), (0, 1, P))
    h = apply_switching(g, {0: N})
    assert [e.sign for e in h.edges] == [N, N]


def test_balanced_triangle_witness():
    g = graph((1, 2, P), (2, 3, N), (3, 1, N))
    report = is_balanced(g)
    assert report.balanced
    switched = apply_switching(g, report.switching)
    assert all(e.sign == P for e in switched.edges)


def test_unbalanced_witness_is_negative_circle():
    g = graph((1, 2, P), (2, 3, P), (3, 1, N))
    report = is_balanced(g)
    assert not report.balanced
    assert report.negative_circle.edges == {0, 1, 2}
    assert report.negative_circle.sign == N


def test_negative_loop_is_unbalanced():
    report = is_balanced(graph((0, 1, P), (1, 1, N)))
    assert report.negative_circle.edges == {1}


def test_report_rejects_inconsistent_witness():
    with pytest.raises(ValueError):
        BalanceReport(True)


@pytest.mark.parametrize(
    "g, expected",
    [
        (graph((0, 1, P), (1, 2, P), (2, 0, N)), {0, 1, 2}),
        (gen_k4_subdivision([1] * 6, [P, P, P, N, P, P]), {3}),
        (graph((0, 1, P), (1, 2, P), (2, 0, P)), set()),
        # isthmus: switching one side makes it the lone negative edge
        (graph((0, 1, P)), {0}),
    ],
)
def test_balancing_edges_examples(g, expected):
    assert balancing_edges(g) == expected
    assert brute_balancing(g) == expected


@given(signed_multigraphs(max_vertices=5, max_edges=7))
def test_balancing_edges_match_brute_force(g):
    assert balancing_edges(g) == brute_balancing(g)


@given(signed_multigraphs(), st.data())
def test_switching_preserves_circle_signs(g, data):
    zeta = {v: data.draw(st.sampled_from([P, N])) for v in sorted(g.vertices)}
    h = apply_switching(g, zeta)
    for c in brute_circles(g):
        assert g.circle(c).sign == h.circle(c).sign


@given(signed_multigraphs(max_vertices=5, max_edges=8))
def test_balance_matches_circle_signs(g):
    report = is_balanced(g)
    assert report.balanced == brute_balanced(g)
    if report.balanced:
        assert all(e.sign == P for e in apply_switching(g, report.switching).edges)
    else:
        assert report.negative_circle.sign == N


def test_switching_equivalent_triangles():
    g1 = graph((0, 1, N), (1, 2, P), (2, 0, P))
    g2 = graph((0, 1, P), (1, 2, N), (2, 0, P))
    zeta = find_switching(g1, g2)
    # brute force: the two solutions are (+,-,+) and (-,+,-)
    assert tuple(zeta[v] for v in (0, 1, 2)) in {(P, N, P), (N, P, N)}
    assert apply_switching(g1, zeta) == g2


def test_not_switching_equivalent():
    g1 = graph((0, 1, N), (1, 2, P), (2, 0, P))
    g2 = graph((0, 1, P), (1, 2, P), (2, 0, P))
    assert not switching_equivalent(g1, g2)


def test_equivalence_needs_same_graph():
    with pytest.raises(GraphError):
        find_switching(graph((0, 1, P)), graph((0, 2, P)))


@given(signed_multigraphs(max_vertices=5, max_edges=7), st.data())
def test_equivalence_relation(g, data):
    draw = lambda: {v: data.draw(st.sampled_from([P, N])) for v in sorted(g.vertices)}
    h = apply_switching(g, draw())
    k = apply_switching(h, draw())
    assert switching_equivalent(g, g)
    assert switching_equivalent(g, h) and switching_equivalent(h, g)
    assert switching_equivalent(g, k)
    flipped = g.with_signs({e.id: -e.sign for e in g.edges})
    same_circles = all(g.circle(c).sign == flipped.circle(c).sign for c in brute_circles(g))
    assert switching_equivalent(g, flipped) == same_circles
