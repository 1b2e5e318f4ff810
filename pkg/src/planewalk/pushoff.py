"""Geometric backend: perturb the drawn walk by exact rational jitter and count crossings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Tuple

from . import errors
from .geometry import Point, direction_key, point_segment_dist2, segment_dist2, sqrt_lower
from .obstruction import Cell, deleted_product
from .planegraph import Instance, Walk, image_subgraph

MAX_SEEDS = 48


@lru_cache(maxsize=None)
def jitter_directions(count: int) -> Tuple[Tuple[int, int], ...]:
    """The first ``count`` primitive integer vectors, ordered by length then by angle."""
    radius = 1
    while True:
        cand = [
            (a, b)
            for a in range(-radius, radius + 1)
            for b in range(-radius, radius + 1)
            if (a or b) and gcd(a, b) == 1 and a * a + b * b <= radius * radius
        ]
        if len(cand) >= count:
            cand.sort(key=lambda d: (d[0] * d[0] + d[1] * d[1], direction_key(d)))
            return tuple(cand[:count])
        radius += 1


@dataclass
class JitteredCurve:
    points: List[Point]
    scale: Fraction
    seed: int
    closed: bool


@dataclass
class GenericityReport:
    violations: List[Tuple[str, Cell]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _require_coords(inst: Instance):
    if inst.graph.coords is None:
        raise errors.NoCoordinates("the geometric backend needs vertex coordinates")


def safe_jitter_bound(inst: Instance) -> Fraction:
    """A quarter of the least gap between disjoint image edges and between walk vertices and
    non-incident image edges (rounded down to a rational when the gap is irrational)."""
    _require_coords(inst)
    img = image_subgraph(inst)
    xy = inst.graph.coords
    edges = img.sorted_edges()
    best = None
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if {a, b} & {c, d}:
                continue
            d2 = segment_dist2(xy[a], xy[b], xy[c], xy[d])
            best = d2 if best is None else min(best, d2)
    for v in set(inst.walk.vertices):
        for a, b in edges:
            if v in (a, b):
                continue
            d2 = point_segment_dist2(xy[v], xy[a], xy[b])
            best = d2 if best is None else min(best, d2)
    if best is None:
        if not edges:
            return Fraction(1)
        best = min(_len2(xy[a], xy[b]) for a, b in edges)
    return sqrt_lower(best) / 4


def _len2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def build_jittered_curve(inst: Instance, seed: int = 0, bound: Fraction = None) -> JitteredCurve:
    """Occurrence p moves by xi * direction[p + seed * k]; each displacement is at most bound / 2**seed."""
    _require_coords(inst)
    if bound is None:
        bound = safe_jitter_bound(inst)
    verts = inst.walk.vertices
    k = len(verts)
    dirs = jitter_directions(k * (seed + 1))[k * seed:]
    longest = max((abs(a) + abs(b) for a, b in dirs), default=1)
    xi = Fraction(bound) / (2**seed * longest)
    xy = inst.graph.coords
    pts = [(xy[v][0] + xi * a, xy[v][1] + xi * b) for v, (a, b) in zip(verts, dirs)]
    return JitteredCurve(pts, xi, seed, inst.walk.closed)


def _integer_points(points: List[Point]) -> List[Tuple[int, int]]:
    den = 1
    for x, y in points:
        den = lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    return [(int(x * den), int(y * den)) for x, y in points]


def _segments(curve: JitteredCurve, ipts):
    k = len(ipts)
    m = k if curve.closed and k > 1 else k - 1
    return {s: (ipts[s - 1], ipts[s % k]) for s in range(1, m + 1)}


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_closed(p, a, b):
    return _orient(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _cells(curve: JitteredCurve):
    # the domain structure only depends on the number of occurrences
    return deleted_product(Walk(tuple(str(i) for i in range(len(curve.points))), curve.closed)).cells


def check_genericity(curve: JitteredCurve) -> GenericityReport:
    ipts = _integer_points(curve.points)
    seg = _segments(curve, ipts)
    rep = GenericityReport()
    for cell in _cells(curve):
        a, b = seg[cell[0]]
        c, d = seg[cell[1]]
        if _orient(a, b, c) == 0 and _orient(a, b, d) == 0 and (
            _on_closed(c, a, b) or _on_closed(d, a, b) or _on_closed(a, c, d) or _on_closed(b, c, d)
        ):
            rep.violations.append(("collinear-overlap", cell))
        elif _on_closed(c, a, b) or _on_closed(d, a, b) or _on_closed(a, c, d) or _on_closed(b, c, d):
            rep.violations.append(("endpoint-on-segment", cell))
    return rep


def count_crossings(curve: JitteredCurve) -> Dict[Cell, int]:
    ipts = _integer_points(curve.points)
    seg = _segments(curve, ipts)
    out = {}
    for cell in _cells(curve):
        a, b = seg[cell[0]]
        c, d = seg[cell[1]]
        crosses = _orient(a, b, c) * _orient(a, b, d) < 0 and _orient(c, d, a) * _orient(c, d, b) < 0
        out[cell] = int(crosses)
    return out


def generic_curve(inst: Instance, max_seeds: int = MAX_SEEDS, first_seed: int = 0) -> JitteredCurve:
    bound = safe_jitter_bound(inst)
    for seed in range(first_seed, first_seed + max_seeds):
        curve = build_jittered_curve(inst, seed, bound)
        if check_genericity(curve).ok:
            return curve
    raise errors.GenericityExhausted(f"no generic perturbation within {max_seeds} seeds")


def geometric_parities(inst: Instance, max_seeds: int = MAX_SEEDS, first_seed: int = 0) -> Dict[Cell, int]:
    return count_crossings(generic_curve(inst, max_seeds, first_seed))
