"""Graph surgeries: pendant addition, edge deltas, cycle edges, reduction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from harmrad.graphs import (
    GraphError,
    build_graph,
    classify,
    complete_graph,
    cycle_graph,
    cyclomatic_number,
    distance_profile,
    is_connected,
    path_graph,
    star_graph,
)
from harmrad.indices import harmonic_index
from harmrad.transforms import (
    EdgeDelta,
    add_pendant,
    find_bridges,
    find_cycle_edge,
    harmonic_edge_delta,
    pendant_delta_bound,
    unicyclic_reduction,
)

from helpers import harmonic_oracle

from test_graphs import connected_graph


class TestAddPendant:
    def test_p2_to_p3(self):
        g = add_pendant(path_graph(2), 1)
        assert classify(g).kind.value == "odd_path"
        assert g.degrees == (1, 2, 1)

    def test_p3_center_to_star(self):
        g = add_pendant(path_graph(3), 1)
        assert g.degrees == (1, 3, 1, 1)

    def test_c3_to_paw(self):
        g = add_pendant(cycle_graph(3), 0)
        assert g.n == 4 and g.m == 4
        assert cyclomatic_number(g) == 1

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            add_pendant(path_graph(3), 3)


class TestPendantDeltaBound:
    def test_values(self):
        assert pendant_delta_bound(1) == Fraction(1, 3)
        assert pendant_delta_bound(2) == Fraction(1, 6)
        assert pendant_delta_bound(4) == Fraction(1, 15)

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            pendant_delta_bound(0)

    def test_tight_at_d1_p2_to_p3(self):
        g = path_graph(2)
        delta = harmonic_index(add_pendant(g, 1)) - harmonic_index(g)
        assert delta == Fraction(1, 3) == pendant_delta_bound(1)

    def test_tight_at_d2_p3_center(self):
        g = path_graph(3)
        delta = harmonic_index(add_pendant(g, 1)) - harmonic_index(g)
        assert delta == Fraction(1, 6) == pendant_delta_bound(2)

    def test_stronger_2d_form_is_not_a_bound(self):
        # The tempting simplification 2d/((d+1)(d+2)) fails at d=2: it
        # claims 1/3, but attaching to the center of P_3 gains only 1/6.
        d = 2
        claimed = Fraction(2 * d, (d + 1) * (d + 2))
        g = path_graph(3)
        actual = harmonic_index(add_pendant(g, 1)) - harmonic_index(g)
        assert actual < claimed
        assert actual == Fraction(1, 6) and claimed == Fraction(1, 3)

    def test_both_forms_agree_at_d1(self):
        assert pendant_delta_bound(1) == Fraction(2 * 1, 2 * 3)

    def test_end_adjacent_attachment_on_p5(self):
        # degree-2 vertex next to an end: gain is exactly 7/30 >= 1/6
        g = path_graph(5)
        delta = harmonic_index(add_pendant(g, 1)) - harmonic_index(g)
        assert delta == Fraction(7, 30)
        assert delta >= pendant_delta_bound(2)

    def test_interior_attachment_on_p5(self):
        # degree-2 vertex with both neighbors interior: gain is exactly 3/10
        g = path_graph(5)
        delta = harmonic_index(add_pendant(g, 2)) - harmonic_index(g)
        assert delta == Fraction(3, 10)
        assert delta >= pendant_delta_bound(2)

    def test_bound_holds_exhaustively(self, small_connected_graphs):
        for graphs in small_connected_graphs.values():
            for g in graphs:
                h = harmonic_index(g)
                for v in range(g.n):
                    delta = harmonic_index(add_pendant(g, v)) - h
                    assert delta >= pendant_delta_bound(max(g.degrees[v], 1))


# Each row: (n, edges, edge-to-delete, exact delta).  These realize the
# rational constants that arise when re-attaching or detaching cycle and
# pendant edges around a longest path, each verified from scratch.
EDGE_DELTA_FIXTURES = [
    # pendant edge at the center of P_5 (interior, not end-adjacent)
    (6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], (2, 5), Fraction(3, 10)),
    # pendant edge next to an end of P_5
    (6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)], (1, 5), Fraction(7, 30)),
    # chord closing a triangle on the 2nd..4th vertices of P_5 (net graph)
    (6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (1, 3)], (1, 3), Fraction(-2, 15)),
    # same chord pattern one step further from the far end (on P_6)
    (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (1, 3)], (1, 3), Fraction(-1, 15)),
    # chord fully interior on P_7: the two corrections cancel exactly
    (8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7), (2, 4)], (2, 4), Fraction(0)),
    # pendant attached to a pendant hanging off a degree-3 vertex
    (7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)], (5, 6), Fraction(17, 30)),
    # end edge of P_4
    (4, [(0, 1), (1, 2), (2, 3)], (2, 3), Fraction(1, 2)),
    # closing a triangle at the end of a 2-edge tail off a path
    (7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)], (4, 6), Fraction(1, 30)),
    # closing a triangle hanging off the center of P_5
    (7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (2, 6)], (2, 6), Fraction(-1, 30)),
    # cycle edge of a triangle carrying two pendants on one corner
    (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)], (0, 1), Fraction(-1, 10)),
]


class TestHarmonicEdgeDelta:
    def test_c3_edge(self):
        assert harmonic_edge_delta(cycle_graph(3), (0, 1)) == Fraction(1, 6)

    def test_p4_middle_edge_disconnects(self):
        g = path_graph(4)
        assert harmonic_edge_delta(g, (1, 2)) == Fraction(-1, 6)

    def test_triangle_closure_symmetric_with_deletion(self):
        # re-adding the closing edge of C_3 gains what deleting it loses
        g = cycle_graph(3)
        assert harmonic_edge_delta(g, (0, 2)) == Fraction(1, 6)

    def test_rejects_absent_edge(self):
        with pytest.raises(GraphError):
            harmonic_edge_delta(path_graph(3), (0, 2))

    @pytest.mark.parametrize("n,edges,edge,expected", EDGE_DELTA_FIXTURES)
    def test_fixture_constants(self, n, edges, edge, expected):
        g = build_graph(n, edges)
        delta = harmonic_edge_delta(g, edge)
        assert delta == expected
        # and the from-scratch difference agrees
        assert EdgeDelta.compute(g, edge).verify_from_scratch()

    def test_worst_case_bound_on_fixture_closures(self):
        for n, edges, edge, expected in EDGE_DELTA_FIXTURES:
            assert expected >= Fraction(-31, 105)
        # -1/10 appears as the worst case of its configuration family
        assert min(x for *_, x in EDGE_DELTA_FIXTURES) == Fraction(-2, 15)

    def test_incremental_equals_scratch_exhaustive(self, small_connected_graphs):
        for graphs in small_connected_graphs.values():
            for g in graphs:
                for e in g.edges():
                    assert EdgeDelta.compute(g, e).verify_from_scratch()


class TestFindCycleEdge:
    def test_trees_have_none(self):
        assert find_cycle_edge(path_graph(5)) is None
        assert find_cycle_edge(star_graph(4)) is None

    def test_paw_never_returns_pendant_edge(self):
        paw = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        e = find_cycle_edge(paw)
        assert e in {(0, 1), (0, 2), (1, 2)}
        assert e == (0, 1)  # lexicographically smallest

    def test_k4_returns_01(self):
        assert find_cycle_edge(complete_graph(4)) == (0, 1)

    def test_bridges_of_paw(self):
        paw = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        assert find_bridges(paw) == {(0, 3)}

    def test_bridge_oracle_exhaustive(self, small_connected_graphs):
        # an edge is a bridge iff deleting it disconnects the graph
        from harmrad.graphs import delete_edge

        for graphs in small_connected_graphs.values():
            for g in graphs:
                bridges = find_bridges(g)
                for e in g.edges():
                    assert (e in bridges) == (not is_connected(delete_edge(g, *e)))


class TestUnicyclicReduction:
    def test_k4(self):
        out = unicyclic_reduction(complete_graph(4))
        assert len(out) == 2
        last = out[-1]
        assert last.n == 4 and last.m == 4
        assert cyclomatic_number(last) == 1

    def test_c4_plus_chord(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        out = unicyclic_reduction(g)
        assert len(out) == 1
        assert cyclomatic_number(out[0]) == 1

    def test_rejects_unicyclic_input(self):
        with pytest.raises(GraphError):
            unicyclic_reduction(cycle_graph(5))

    def test_rejects_trees(self):
        with pytest.raises(GraphError):
            unicyclic_reduction(path_graph(4))

    def test_stays_connected_and_radius_monotone(self, small_connected_graphs):
        for graphs in small_connected_graphs.values():
            for g in graphs:
                if g.m - g.n + 1 < 2:
                    continue
                r_prev = distance_profile(g).radius
                for step in unicyclic_reduction(g):
                    assert is_connected(step)
                    assert step.n == g.n
                    r_now = distance_profile(step).radius
                    assert r_now >= r_prev
                    r_prev = r_now


@given(g=connected_graph(max_n=6))
@settings(max_examples=100, deadline=None)
def test_pendant_delta_positive_property(g):
    h0 = harmonic_index(g)
    for v in range(g.n):
        d = g.degrees[v]
        delta = harmonic_index(add_pendant(g, v)) - h0
        assert delta > 0
        if d >= 1:
            assert delta >= Fraction(2, (d + 1) * (d + 2))


@given(g=connected_graph(max_n=6))
@settings(max_examples=100, deadline=None)
def test_edge_delta_incremental_property(g):
    for e in g.edge_list():
        assert EdgeDelta.compute(g, e).verify_from_scratch()
