import math
from fractions import Fraction

import pytest

from planewalk import errors
from planewalk.fixtures import fixture, star4, starpass_graph, theta, triangle, xgraph
from planewalk.planegraph import (
    build_plane_graph,
    edge,
    image_subgraph,
    make_instance,
    normalize_walk,
    rotation_from_coordinates,
    same_cyclic_order,
    trace_faces,
)


def atan2_rotation(graph):
    """Independent float check of the exact angular comparator."""
    out = {}
    for v in graph.vertices:
        x0, y0 = graph.coords[v]
        ang = {w: math.atan2(float(graph.coords[w][1] - y0), float(graph.coords[w][0] - x0)) % (2 * math.pi)
               for w in graph.rotation[v]}
        out[v] = tuple(sorted(ang, key=ang.get))
    return out


def test_triangle_rotation_is_forced():
    g = build_plane_graph([("a", (0, 0)), ("b", (4, 0)), ("c", (2, 3))], [("a", "b"), ("b", "c"), ("c", "a")])
    assert set(g.rotation["a"]) == {"b", "c"}
    assert all(len(r) == 2 for r in g.rotation.values())


def test_xgraph_centre_rotation():
    g = xgraph()
    assert g.rotation["c"] == ("e", "n", "w", "s")
    assert g.rotation == atan2_rotation(g)


@pytest.mark.parametrize("g", [star4(), starpass_graph(), xgraph(), theta(), triangle()], ids=repr)
def test_rotation_matches_float_angles(g):
    assert g.rotation == atan2_rotation(g)


def test_axis_directions_and_degree_one():
    coords = {"o": (0, 0), "x": (1, 0), "y": (0, 1), "z": (-1, 0)}
    coords = {k: (Fraction(a), Fraction(b)) for k, (a, b) in coords.items()}
    rot = rotation_from_coordinates(coords, [("o", "x"), ("o", "y"), ("o", "z")], coords)
    assert rot["o"] == ("x", "y", "z")
    assert rot["x"] == ("o",)


def test_coincident_directions_rejected():
    coords = {k: (Fraction(a), Fraction(b)) for k, (a, b) in {"o": (0, 0), "p": (1, 1), "q": (2, 2)}.items()}
    with pytest.raises(errors.CoincidentDirections):
        rotation_from_coordinates(coords, [("o", "p"), ("o", "q")], coords)


def test_build_errors():
    with pytest.raises(errors.CoincidentCoordinates):
        build_plane_graph([("a", (0, 0)), ("b", (0, 0))], [("a", "b")])
    with pytest.raises(errors.LoopEdge):
        build_plane_graph([("a", (0, 0))], [("a", "a")])
    with pytest.raises(errors.ParallelEdge):
        build_plane_graph([("a", (0, 0)), ("b", (1, 0))], [("a", "b"), ("b", "a")])
    with pytest.raises(errors.RotationCoordMismatch):
        build_plane_graph(
            [("c", (0, 0)), ("e", (1, 0)), ("n", (0, 1)), ("w", (-1, 0)), ("s", (0, -1))],
            [("c", "e"), ("c", "n"), ("c", "w"), ("c", "s")],
            {"c": ["e", "w", "n", "s"], "e": ["c"], "n": ["c"], "w": ["c"], "s": ["c"]},
        )


def test_explicit_rotation_by_edge_index_and_pairs():
    g = build_plane_graph(
        ["a", "b", "c"],
        [("a", "b"), ("b", "c"), ("c", "a")],
        {"a": [0, 2], "b": [("b", "c"), ("a", "b")], "c": ["a", "b"]},
    )
    assert g.rotation["a"] == ("b", "c")
    assert g.rotation["b"] == ("c", "a")


def test_nonplanar_rotation_rejected():
    # K4 with a rotation system of genus 1
    verts = ["a", "b", "c", "d"]
    edges = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]]
    rot = {"a": ["b", "c", "d"], "b": ["a", "c", "d"], "c": ["a", "b", "d"], "d": ["a", "b", "c"]}
    with pytest.raises(errors.NonPlanarRotation):
        build_plane_graph(verts, edges, rot)


def test_explicit_rotation_equal_to_computed_is_idempotent():
    g = xgraph()
    again = build_plane_graph(list(g.coords.items()), sorted(g.edges), {v: list(r) for v, r in g.rotation.items()})
    assert again == g


def test_faces_triangle():
    ft = trace_faces(triangle())
    assert len(ft.faces) == 2 and ft.max_genus == 0


def test_faces_xgraph():
    # V - E + F = 2 with V = E = 5 forces F = 2
    ft = trace_faces(xgraph())
    assert len(ft.faces) == 2
    assert ft.max_genus == 0


def test_faces_k4():
    g = build_plane_graph(
        [("a", (0, 0)), ("b", (6, 0)), ("c", (3, 5)), ("d", (3, 2))],
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
    )
    ft = trace_faces(g)
    assert len(ft.faces) == 4 and ft.max_genus == 0
    assert sorted(len(f) for f in ft.faces) == [3, 3, 3, 3]


def test_face_convention_is_clockwise_successor():
    # in the triangle a(0,0) b(4,0) c(2,3) the dart a->b bounds the inner face a->b->c
    ft = trace_faces(triangle())
    face = next(f for f in ft.faces if ("c0", "c1") in f)
    assert face == [("c0", "c1"), ("c1", "c2"), ("c2", "c0")]


def test_face_lengths_sum_to_twice_edges():
    for g in (xgraph(), theta(), star4()):
        ft = trace_faces(g)
        assert sum(len(f) for f in ft.faces) == 2 * len(g.edges)


def test_isolated_vertex_has_genus_zero():
    g = build_plane_graph([("a", (0, 0)), ("b", (1, 0)), ("z", (5, 5))], [("a", "b")])
    assert trace_faces(g).max_genus == 0


def test_normalize_walk():
    g = fixture("PATH3").graph
    assert normalize_walk(["u0", "u0", "u1", "u1", "u2"], False, g).vertices == ("u0", "u1", "u2")
    with pytest.raises(errors.NotAWalk):
        normalize_walk(["u0", "u2"], False, g)
    tri = triangle()
    w = normalize_walk(["c0", "c1", "c2"], True, tri)
    assert w.vertices == ("c0", "c1", "c2") and w.n_steps == 3
    assert normalize_walk(["c0", "c1", "c2", "c0", "c0"], True, tri).vertices == ("c0", "c1", "c2")
    with pytest.raises(errors.DegenerateClosed):
        normalize_walk(["c0", "c1", "c0"], True, tri)
    assert normalize_walk(["c0", "c0"], True, tri).vertices == ("c0",)
    with pytest.raises(errors.UnknownVertex):
        normalize_walk(["nope"], False, tri)


def test_normalize_walk_idempotent():
    g = fixture("XWALK").graph
    once = normalize_walk(["w", "w", "c", "e", "e", "n", "c", "s", "s"], False, g)
    assert normalize_walk(list(once.vertices), False, g) == once


def test_image_subgraph():
    p = fixture("PATH3")
    assert image_subgraph(p).edges == p.graph.edges
    sp = fixture("STARPASS")
    assert image_subgraph(sp).edges == {edge("w", "c"), edge("c", "e"), edge("c", "s")}
    xs = make_instance(star4(), ["w", "c", "e", "c", "s"])
    img = image_subgraph(xs)
    assert edge("c", "n") not in img.edges
    assert img.rotation["c"] == ("e", "w", "s")
    const = make_instance(fixture("PATH3").graph, ["u0"])
    img = image_subgraph(const)
    assert img.vertices == ("u0",) and not img.edges


def test_same_cyclic_order():
    assert same_cyclic_order(("a", "b", "c"), ("b", "c", "a"))
    assert not same_cyclic_order(("a", "b", "c"), ("a", "c", "b"))
