"""Checks shared by the ingest tests and the acceptance suite."""

from fractions import Fraction

from planewalk.geometry import on_segment, segments_cross_properly


def check_no_internal_crossings(inst):
    coords = inst.graph.coords
    edges = sorted(inst.graph.edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            p, q, r, s = coords[a], coords[b], coords[c], coords[d]
            assert not segments_cross_properly(p, q, r, s), (a, b, c, d)
            # no vertex inside another edge, which also rules out overlaps
            for v in (c, d):
                if v not in (a, b):
                    assert not on_segment(coords[v], p, q), (v, a, b)
            for v in (a, b):
                if v not in (c, d):
                    assert not on_segment(coords[v], r, s), (v, c, d)


def check_point_set_identity(raw, inst):
    coords = inst.graph.coords
    out_segs = [(coords[a], coords[b]) for a, b in inst.graph.edges]
    in_segs = raw.segments()
    half = Fraction(1, 2)
    for p, q in out_segs:
        m = ((p[0] + q[0]) * half, (p[1] + q[1]) * half)
        assert any(on_segment(m, a, b) for a, b in in_segs)
        assert any(on_segment(p, a, b) for a, b in in_segs)
    for a, b in in_segs:
        m = ((a[0] + b[0]) * half, (a[1] + b[1]) * half)
        assert any(on_segment(m, p, q) for p, q in out_segs)
    assert set(raw.points) <= set(coords.values())


def drawn_shape(inst):
    """The instance up to vertex renaming: edge point sets and the walk as a point sequence."""
    xy = inst.graph.coords
    return (
        frozenset(frozenset((xy[a], xy[b])) for a, b in inst.graph.edges),
        tuple(xy[v] for v in inst.walk.vertices),
        inst.walk.closed,
    )
