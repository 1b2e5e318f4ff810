"""Exact planar predicates over rationals.

Everything here works on points given as pairs of ``Fraction`` (or ``int``);
no floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import isqrt
from typing import Optional, Sequence, Tuple

Point = Tuple[Fraction, Fraction]


def as_point(xy) -> Point:
    return (Fraction(xy[0]), Fraction(xy[1]))


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def orient(a, b, c):
    """Twice the signed area of triangle abc (positive = counterclockwise)."""
    return cross(sub(b, a), sub(c, a))


def _half(d) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def compare_directions(u, v) -> int:
    """Compare two nonzero vectors by counterclockwise angle from the +x axis."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


direction_key = cmp_to_key(compare_directions)


def on_segment(p, a, b) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_split_params(p1, p2, q1, q2) -> list:
    """Parameters t in [0, 1] along p1->p2 where the segment meets q1q2.

    A proper crossing yields one parameter; a collinear overlap yields the
    parameters of the overlap endpoints; touching yields the contact point.
    """
    r = sub(p2, p1)
    s = sub(q2, q1)
    d = cross(r, s)
    qp = sub(q1, p1)
    if d != 0:
        t = Fraction(cross(qp, s)) / d
        u = Fraction(cross(qp, r)) / d
        if 0 <= t <= 1 and 0 <= u <= 1:
            return [t]
        return []
    if cross(qp, r) != 0:
        return []
    rr = dot(r, r)
    out = []
    for q in (q1, q2):
        t = Fraction(dot(sub(q, p1), r)) / rr
        if 0 <= t <= 1:
            out.append(t)
    for t, p in ((Fraction(0), p1), (Fraction(1), p2)):
        if on_segment(p, q1, q2):
            out.append(t)
    return out


def point_at(p1, p2, t) -> Point:
    return (p1[0] + (p2[0] - p1[0]) * t, p1[1] + (p2[1] - p1[1]) * t)


def segments_cross_properly(a, b, c, d) -> bool:
    """True iff open segments ab and cd cross at a single interior point."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def point_segment_dist2(p, a, b) -> Fraction:
    ab = sub(b, a)
    ap = sub(p, a)
    denom = dot(ab, ab)
    t = Fraction(dot(ap, ab)) / denom if denom else Fraction(0)
    t = min(max(t, Fraction(0)), Fraction(1))
    q = point_at(a, b, t)
    dx, dy = p[0] - q[0], p[1] - q[1]
    return Fraction(dx * dx + dy * dy)


def segment_dist2(a, b, c, d) -> Fraction:
    """Squared distance between two non-intersecting closed segments."""
    return min(
        point_segment_dist2(a, c, d),
        point_segment_dist2(b, c, d),
        point_segment_dist2(c, a, b),
        point_segment_dist2(d, a, b),
    )


def sqrt_lower(x: Fraction, bits: int = 40) -> Fraction:
    """Exact sqrt when x is a rational square, else a rational lower bound within 2**-bits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative argument")
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    scale = 1 << bits
    return Fraction(isqrt(n * scale * scale // d), scale)


def signed_area2(points: Sequence[Point]) -> Fraction:
    """Twice the signed area of a closed polygon (shoelace)."""
    total = Fraction(0)
    k = len(points)
    for i in range(k):
        total += cross(points[i], points[(i + 1) % k])
    return total


def midpoint(a, b) -> Point:
    return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions, decimal strings and ``"p/q"`` strings."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        # floats only arrive from callers bypassing the JSON reader; keep the literal
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a rational: {value!r}")


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def maybe_point(xy) -> Optional[Point]:
    return None if xy is None else as_point(xy)
