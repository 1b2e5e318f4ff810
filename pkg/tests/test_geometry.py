from fractions import Fraction as F

from hypothesis import given, strategies as st

from planewalk.geometry import (
    compare_directions,
    on_segment,
    parse_rational,
    point_segment_dist2,
    segment_split_params,
    segments_cross_properly,
    sqrt_lower,
)


def test_proper_crossing_param():
    assert segment_split_params((F(0), F(0)), (F(2), F(0)), (F(1), F(1)), (F(1), F(-1))) == [F(1, 2)]


def test_collinear_overlap_params():
    ts = sorted(segment_split_params((F(0), F(0)), (F(3), F(0)), (F(3), F(0)), (F(1), F(0))))
    assert ts == [F(1, 3), 1, 1]


def test_parallel_disjoint():
    assert segment_split_params((F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))) == []


def test_cross_properly_excludes_touching():
    assert segments_cross_properly((0, 0), (2, 0), (1, -1), (1, 1))
    assert not segments_cross_properly((0, 0), (2, 0), (1, 0), (1, 1))


def test_point_segment_distance():
    assert point_segment_dist2((F(2), F(3)), (F(0), F(0)), (F(4), F(0))) == 9
    assert point_segment_dist2((F(-3), F(4)), (F(0), F(0)), (F(4), F(0))) == 25


def test_sqrt_lower_exact_and_bound():
    assert sqrt_lower(F(9, 16)) == F(3, 4)
    r = sqrt_lower(F(2))
    assert r * r <= 2 < (r + F(1, 2**40)) ** 2


def test_parse_rational():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-0.25") == F(-1, 4)
    assert parse_rational(7) == 7


small = st.integers(-6, 6)


@given(small, small, small, small)
def test_direction_order_antisymmetric(a, b, c, d):
    if (a, b) == (0, 0) or (c, d) == (0, 0):
        return
    assert compare_directions((a, b), (c, d)) == -compare_directions((c, d), (a, b))


@given(small, small, small, small, small, small, small, small)
def test_split_points_lie_on_both_segments(a, b, c, d, e, f, g, h):
    p, q, r, s = (F(a), F(b)), (F(c), F(d)), (F(e), F(f)), (F(g), F(h))
    if p == q or r == s:
        return
    for t in segment_split_params(p, q, r, s):
        pt = (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)
        assert on_segment(pt, p, q) and on_segment(pt, r, s)
