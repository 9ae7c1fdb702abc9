"""Tests for graphs, cycles, embeddings, drawings and their validators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from intrinsiclinks.errors import DrawingNotGeneral, GeneralPositionViolation, PointsNotOnRoute
from intrinsiclinks.geometry import Point2, Point3, gp_points3
from intrinsiclinks.graphs import (
    Cycle,
    bipartition,
    complete_bipartite,
    complete_graph,
    crossings_between_polylines,
    cycle_route,
    enumerate_cycles,
    enumerate_disjoint_cycle_pairs,
    extract_crossings,
    is_complete,
    is_complete_bipartite,
    make_cycle,
    make_drawing,
    make_embedding,
    make_graph,
    planar_polyline,
    smooth,
    subdivide,
    validate_drawing,
    validate_embedding,
)


def P2(x, y):
    return Point2(Fraction(x), Fraction(y))


def P3(x, y, z):
    return Point3(Fraction(x), Fraction(y), Fraction(z))


def moment_positions(n):
    return {f"v{i}": P3(i, i * i, i * i * i) for i in range(1, n + 1)}


K6 = complete_graph(6)
K44 = complete_bipartite(4, 4)
K33 = complete_bipartite(3, 3)
K5 = complete_graph(5)
K4 = complete_graph(4)

PENTAGON = {
    "v1": P2(0, 2),
    "v2": P2(2, 1),
    "v3": P2(1, -2),
    "v4": P2(-1, -2),
    "v5": P2(-2, 1),
}


class TestGraphBasics:
    def test_complete_graph_sizes(self):
        assert len(K6.vertices) == 6
        assert len(K6.edges) == 15
        assert is_complete(K6)

    def test_complete_bipartite_sizes(self):
        assert len(K44.vertices) == 8
        assert len(K44.edges) == 16
        assert len(K33.edges) == 9
        assert is_complete_bipartite(K44, 4, 4)
        assert not is_complete_bipartite(K44, 3, 3)
        assert not is_complete(K44)

    def test_edge_key_uses_vertex_order(self):
        assert K6.edge_key("v5", "v2") == ("v2", "v5")
        assert K44.edge_key("b1", "a3") == ("a3", "b1")

    def test_neighbors_and_degree(self):
        assert K44.neighbors("a1") == ("b1", "b2", "b3", "b4")
        assert K44.degree("b2") == 4
        assert not K44.has_edge("a1", "a2")
        assert K6.has_edge("v6", "v1")

    def test_make_graph_rejects_bad_input(self):
        with pytest.raises(ValueError):
            make_graph(["a", "a"], [])
        with pytest.raises(ValueError):
            make_graph(["a", "b"], [("a", "c")])
        with pytest.raises(ValueError):
            make_graph(["a", "b"], [("a", "a")])

    def test_bipartition(self):
        assert bipartition(K44) == (("a1", "a2", "a3", "a4"), ("b1", "b2", "b3", "b4"))
        with pytest.raises(ValueError):
            bipartition(K6)  # odd cycles


class TestCycles:
    def test_canonical_form(self):
        c = make_cycle(K6, ("v3", "v2", "v1"))
        assert c.vertices == ("v1", "v2", "v3")
        d = make_cycle(K6, ("v4", "v6", "v5"))
        assert d.vertices == ("v4", "v5", "v6")
        # all rotations and reflections collapse to one object
        reps = {make_cycle(K44, seq) for seq in [
            ("a1", "b1", "a2", "b2"),
            ("b1", "a2", "b2", "a1"),
            ("a1", "b2", "a2", "b1"),
            ("b2", "a2", "b1", "a1"),
        ]}
        assert len(reps) == 1

    def test_make_cycle_rejects_non_cycles(self):
        with pytest.raises(ValueError):
            make_cycle(K6, ("v1", "v2"))
        with pytest.raises(ValueError):
            make_cycle(K6, ("v1", "v2", "v1"))
        with pytest.raises(ValueError):
            make_cycle(K44, ("a1", "a2", "b1"))  # a1a2 not an edge

    def test_triangle_counts(self):
        assert len(enumerate_cycles(K6, 3)) == 20
        assert len(enumerate_cycles(K4, 3)) == 4
        assert len(enumerate_cycles(K33, 3)) == 0

    def test_four_cycle_counts(self):
        assert len(enumerate_cycles(K33, 4)) == 9
        assert len(enumerate_cycles(K44, 4)) == 36

    def test_enumeration_is_sorted(self):
        tris = enumerate_cycles(K6, 3)
        assert tris[0].vertices == ("v1", "v2", "v3")
        assert tris[-1].vertices == ("v4", "v5", "v6")
        assert list(tris) == sorted(tris, key=lambda c: c.vertices)

    def test_disjoint_pair_counts(self):
        assert len(enumerate_disjoint_cycle_pairs(K6, 3, 3)) == 10
        assert len(enumerate_disjoint_cycle_pairs(K44, 4, 4)) == 18
        assert len(enumerate_disjoint_cycle_pairs(K6, 3, 4)) == 0  # needs 7 vertices

    def test_cycle_edges(self):
        c = make_cycle(K44, ("a1", "b1", "a2", "b2"))
        assert set(K44.cycle_edges(c)) == {("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a1", "b2")}


class TestEmbeddingConstruction:
    def test_straight_default(self):
        emb = make_embedding(K6, moment_positions(6))
        assert len(emb.route) == 15
        for key, poly in emb.route.items():
            assert poly.vertices == (emb.position[key[0]], emb.position[key[1]])

    def test_route_orientation_normalized(self):
        pos = {"v1": P3(0, 0, 0), "v2": P3(4, 0, 0), "v3": P3(0, 4, 0)}
        g = make_graph(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
        # give the v1v2 route backwards and with an explicit bend
        emb = make_embedding(g, pos, {("v2", "v1"): [P3(4, 0, 0), P3(2, 1, 0), P3(0, 0, 0)]})
        assert emb.route[("v1", "v2")].vertices == (P3(0, 0, 0), P3(2, 1, 0), P3(4, 0, 0))
        assert emb.route_chain("v2", "v1") == (P3(4, 0, 0), P3(2, 1, 0), P3(0, 0, 0))

    def test_interior_points_only(self):
        pos = {"u": P3(0, 0, 0), "v": P3(4, 0, 0)}
        g = make_graph(["u", "v"], [("u", "v")])
        emb = make_embedding(g, pos, {("u", "v"): [P3(2, 3, 1)]})
        assert emb.route[("u", "v")].vertices == (P3(0, 0, 0), P3(2, 3, 1), P3(4, 0, 0))

    def test_mismatched_route_raises(self):
        pos = {"u": P3(0, 0, 0), "v": P3(4, 0, 0)}
        g = make_graph(["u", "v"], [("u", "v")])
        with pytest.raises(ValueError):
            make_embedding(g, pos, {("u", "v"): [P3(0, 0, 0), P3(9, 9, 9)]})


class TestValidateEmbedding:
    def test_moment_curve_k6_is_valid(self):
        emb = make_embedding(K6, moment_positions(6))
        assert validate_embedding(emb) == ()

    def test_crossing_diagonals(self):
        g = make_graph(["a", "b", "c", "d"], [("a", "c"), ("b", "d")])
        pos = {"a": P3(0, 0, 0), "c": P3(2, 2, 0), "b": P3(2, 0, 0), "d": P3(0, 2, 0)}
        kinds = {v.kind for v in validate_embedding(make_embedding(g, pos))}
        assert "routes-cross" in kinds

    def test_coincident_vertices(self):
        pos = {v: moment_positions(8)[f"v{i+1}"] for i, v in enumerate(K44.vertices)}
        pos["a2"] = pos["a1"]
        kinds = {v.kind for v in validate_embedding(make_embedding(K44, pos))}
        assert "coincident-vertices" in kinds

    def test_vertex_on_route(self):
        pos = {"v1": P3(0, 0, 0), "v2": P3(4, 0, 0), "v3": P3(0, 4, 0), "v4": P3(2, 0, 0)}
        kinds = {v.kind for v in validate_embedding(make_embedding(K4, pos))}
        assert "vertex-on-route" in kinds

    def test_adjacent_routes_meeting_off_vertex(self):
        g = make_graph(["u", "v", "w"], [("u", "v"), ("u", "w")])
        pos = {"u": P3(0, 0, 0), "v": P3(4, 0, 0), "w": P3(4, 4, 0)}
        # both routes bend through (2, 1, 0)
        emb = make_embedding(g, pos, {
            ("u", "v"): [P3(2, 1, 0)],
            ("u", "w"): [P3(2, 1, 0)],
        })
        kinds = {v.kind for v in validate_embedding(emb)}
        assert "adjacent-routes-meet-off-vertex" in kinds

    def test_overlapping_routes(self):
        g = make_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        pos = {"a": P3(0, 0, 0), "b": P3(4, 0, 0), "c": P3(1, 0, 0), "d": P3(1, 4, 0)}
        # c sits inside route ab, and route cd leaves along it? no: cd is
        # vertical, so the contact is a single point: c on ab.
        kinds = {v.kind for v in validate_embedding(make_embedding(g, pos))}
        assert "vertex-on-route" in kinds
        assert "routes-cross" in kinds

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30)),
                    min_size=4, max_size=4, unique=True))
    def test_generic_straight_k4_always_valid(self, coords):
        pts = [P3(*c) for c in coords]
        from hypothesis import assume
        assume(gp_points3(pts))
        emb = make_embedding(K4, dict(zip(K4.vertices, pts)))
        assert validate_embedding(emb) == ()


class TestSubdivideSmooth:
    def test_subdivide_midpoint(self):
        emb = make_embedding(K6, moment_positions(6))
        p1, p2 = emb.position["v1"], emb.position["v2"]
        mid = Point3(Fraction(p1.x + p2.x, 2), Fraction(p1.y + p2.y, 2), Fraction(p1.z + p2.z, 2))
        sub = subdivide(emb, ("v1", "v2"), [mid])
        assert len(sub.graph.vertices) == 7
        assert len(sub.graph.edges) == 16
        assert sub.graph.degree("v1.v2.1") == 2
        assert sub.position["v1.v2.1"] == mid
        assert validate_embedding(sub) == ()

    def test_smooth_inverts_subdivide(self):
        emb = make_embedding(K6, moment_positions(6))
        p1, p2 = emb.position["v1"], emb.position["v2"]
        mid = Point3(Fraction(p1.x + p2.x, 2), Fraction(p1.y + p2.y, 2), Fraction(p1.z + p2.z, 2))
        sub = subdivide(emb, ("v1", "v2"), [mid])
        back = smooth(sub)
        assert back == emb

    def test_smooth_keeps_bent_corner(self):
        pos = {"u": P3(0, 0, 0), "v": P3(4, 0, 0)}
        g = make_graph(["u", "v"], [("u", "v")])
        emb = make_embedding(g, pos, {("u", "v"): [P3(2, 3, 1)]})
        sub = subdivide(emb, ("u", "v"), [P3(2, 3, 1)])
        assert len(sub.graph.vertices) == 3
        back = smooth(sub)
        # the subdivision point was a genuine corner, so the bend survives
        assert back.route[("u", "v")].vertices == (P3(0, 0, 0), P3(2, 3, 1), P3(4, 0, 0))
        assert back == emb

    def test_multiple_points_in_order(self):
        pos = {"u": P3(0, 0, 0), "v": P3(8, 0, 0)}
        g = make_graph(["u", "v"], [("u", "v")])
        emb = make_embedding(g, pos)
        sub = subdivide(emb, ("u", "v"), [P3(2, 0, 0), P3(5, 0, 0)])
        assert len(sub.graph.vertices) == 4
        chain = sub.route_chain("u", "u.v.1")
        assert chain == (P3(0, 0, 0), P3(2, 0, 0))
        assert smooth(sub) == emb

    def test_out_of_order_points_rejected(self):
        pos = {"u": P3(0, 0, 0), "v": P3(8, 0, 0)}
        g = make_graph(["u", "v"], [("u", "v")])
        emb = make_embedding(g, pos)
        with pytest.raises(PointsNotOnRoute):
            subdivide(emb, ("u", "v"), [P3(5, 0, 0), P3(2, 0, 0)])

    def test_off_route_point_rejected(self):
        emb = make_embedding(K6, moment_positions(6))
        with pytest.raises(PointsNotOnRoute):
            subdivide(emb, ("v1", "v2"), [P3(100, 100, 100)])

    def test_endpoint_rejected(self):
        emb = make_embedding(K6, moment_positions(6))
        with pytest.raises(PointsNotOnRoute):
            subdivide(emb, ("v1", "v2"), [emb.position["v1"]])

    def test_smooth_stops_at_triangle(self):
        g = make_graph(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
        pos = {"v1": P3(0, 0, 0), "v2": P3(4, 0, 0), "v3": P3(0, 4, 0)}
        emb = make_embedding(g, pos)
        sub = subdivide(emb, ("v1", "v2"), [P3(2, 0, 0)])
        back = smooth(sub)
        assert set(back.graph.vertices) == {"v1", "v2", "v3"}
        assert back == emb


class TestCycleRoute:
    def test_straight_triangle(self):
        emb = make_embedding(K6, moment_positions(6))
        c = make_cycle(K6, ("v1", "v2", "v3"))
        poly = cycle_route(emb, c)
        assert poly.closed
        assert set(poly.vertices) == {emb.position["v1"], emb.position["v2"], emb.position["v3"]}

    def test_subdivided_triangle_same_carrier(self):
        emb = make_embedding(K6, moment_positions(6))
        p1, p2 = emb.position["v1"], emb.position["v2"]
        mid = Point3(Fraction(p1.x + p2.x, 2), Fraction(p1.y + p2.y, 2), Fraction(p1.z + p2.z, 2))
        sub = subdivide(emb, ("v1", "v2"), [mid])
        c = make_cycle(sub.graph, ("v1", "v1.v2.1", "v2", "v3"))
        poly = cycle_route(sub, c)
        # the flat subdivision corner is dropped in the closed polygon
        assert set(poly.vertices) == {emb.position["v1"], emb.position["v2"], emb.position["v3"]}


class TestValidateDrawing:
    def test_pentagon_k5(self):
        d = make_drawing(K5, PENTAGON)
        assert validate_drawing(d) == ()

    def test_pentagon_crossings(self):
        d = make_drawing(K5, PENTAGON)
        crossings = extract_crossings(d)
        assert len(crossings) == 5
        assert all(c.disjoint for c in crossings)
        # deterministic order
        assert [c.point for c in crossings] == [c.point for c in extract_crossings(d)]

    def test_planar_k4_has_no_crossings(self):
        pos = {"v1": P2(0, 6), "v2": P2(-6, -3), "v3": P2(6, -3), "v4": P2(0, 1)}
        d = make_drawing(K4, pos)
        assert validate_drawing(d) == ()
        assert extract_crossings(d) == ()

    def test_triple_point(self):
        g = make_graph(["a", "b", "c", "d", "e", "f"], [("a", "b"), ("c", "d"), ("e", "f")])
        pos = {"a": P2(-1, 0), "b": P2(1, 0), "c": P2(0, -1), "d": P2(0, 1),
               "e": P2(-1, -1), "f": P2(1, 1)}
        kinds = {v.kind for v in validate_drawing(make_drawing(g, pos))}
        assert "triple-point" in kinds
        with pytest.raises(DrawingNotGeneral):
            extract_crossings(make_drawing(g, pos))

    def test_route_may_cross_itself(self):
        g = make_graph(["u", "v"], [("u", "v")])
        pos = {"u": P2(0, 0), "v": P2(2, -2)}
        d = make_drawing(g, pos, {("u", "v"): [P2(4, 0), P2(4, 2)]})
        assert validate_drawing(d) == ()
        assert extract_crossings(d) == ()  # self-crossings are not listed

    def test_corner_touch_is_a_violation(self):
        g = make_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        pos = {"a": P2(0, 0), "b": P2(2, 0), "c": P2(0, 2), "d": P2(2, 2)}
        d = make_drawing(g, pos, {("a", "b"): [P2(1, 1)], ("c", "d"): [P2(1, 1)]})
        kinds = {v.kind for v in validate_drawing(d)}
        assert "routes-touch" in kinds

    def test_vertex_inside_foreign_side(self):
        g = make_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
        pos = {"a": P2(-2, 0), "b": P2(2, 0), "c": P2(0, 0), "d": P2(0, 3)}
        kinds = {v.kind for v in validate_drawing(make_drawing(g, pos))}
        assert "degenerate-contact" in kinds

    def test_shared_vertex_meeting_is_fine(self):
        g = make_graph(["a", "b", "c"], [("a", "b"), ("a", "c")])
        pos = {"a": P2(0, 0), "b": P2(4, 0), "c": P2(0, 4)}
        assert validate_drawing(make_drawing(g, pos)) == ()

    def test_overlapping_sides(self):
        g = make_graph(["a", "b", "c"], [("a", "b"), ("a", "c")])
        pos = {"a": P2(0, 0), "b": P2(4, 0), "c": P2(2, 0)}
        kinds = {v.kind for v in validate_drawing(make_drawing(g, pos))}
        assert "sides-overlap" in kinds or "degenerate-contact" in kinds


class TestCrossingsBetweenPolylines:
    def test_two_squares(self):
        a = planar_polyline([P2(0, 0), P2(4, 0), P2(4, 4), P2(0, 4)], closed=True)
        b = planar_polyline([P2(2, 2), P2(6, 2), P2(6, 6), P2(2, 6)], closed=True)
        assert crossings_between_polylines(a, b) == 2

    def test_disjoint_squares(self):
        a = planar_polyline([P2(0, 0), P2(4, 0), P2(4, 4), P2(0, 4)], closed=True)
        b = planar_polyline([P2(10, 10), P2(14, 10), P2(14, 14), P2(10, 14)], closed=True)
        assert crossings_between_polylines(a, b) == 0

    def test_corner_contact_rejected(self):
        a = planar_polyline([P2(0, 0), P2(4, 0), P2(4, 4), P2(0, 4)], closed=True)
        b = planar_polyline([P2(4, 4), P2(8, 4), P2(8, 8), P2(4, 8)], closed=True)
        with pytest.raises(GeneralPositionViolation):
            crossings_between_polylines(a, b)

    def test_nested_squares(self):
        a = planar_polyline([P2(0, 0), P2(9, 0), P2(9, 9), P2(0, 9)], closed=True)
        b = planar_polyline([P2(3, 3), P2(6, 3), P2(6, 6), P2(3, 6)], closed=True)
        assert crossings_between_polylines(a, b) == 0
