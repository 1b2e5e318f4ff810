"""From raw rational polylines and JSON documents to instances.

A drawn polyline is turned into a plane graph by splitting its segments at
every intersection and overlap (quadratic pairwise scan, exact rationals),
and the polyline is re-expressed as a walk through the subdivision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from . import errors
from .fixtures import fixture
from .geometry import Point, as_point, parse_rational, point_at, segment_split_params
from .planegraph import Instance, PlaneGraph, build_plane_graph, normalize_walk


@dataclass(frozen=True)
class RawPolyline:
    points: Tuple[Point, ...]
    closed: bool = False

    @classmethod
    def of(cls, points, closed=False) -> "RawPolyline":
        pts = []
        for p in points:
            p = as_point(p)
            if not pts or pts[-1] != p:
                pts.append(p)
        if closed:
            while len(pts) > 1 and pts[0] == pts[-1]:
                pts.pop()
        need = 3 if closed else 2
        if len(pts) < need:
            raise errors.ZeroLengthInput(f"{'closed' if closed else 'open'} polyline needs {need} distinct consecutive points")
        return cls(tuple(pts), closed)

    def segments(self) -> List[Tuple[Point, Point]]:
        pts = self.points
        segs = list(zip(pts, pts[1:]))
        if self.closed:
            segs.append((pts[-1], pts[0]))
        return segs


@dataclass
class ArrangementResult:
    instance: Instance
    # walk step s (1-based) -> (input segment index, (t0, t1)) along that segment
    provenance: Dict[int, Tuple[int, Tuple[Fraction, Fraction]]]


def _vertex_ids(points) -> Dict[Point, str]:
    return {p: f"v{i}" for i, p in enumerate(sorted(set(points)))}


def arrange_polylines(polylines: Sequence[RawPolyline]) -> List[ArrangementResult]:
    """Arrange several polylines in one common plane graph."""
    pool = []  # (polyline index, segment index, p, q)
    for li, pl in enumerate(polylines):
        for si, (p, q) in enumerate(pl.segments()):
            pool.append((li, si, p, q))
    pieces = []
    for n, (li, si, p, q) in enumerate(pool):
        ts = {Fraction(0), Fraction(1)}
        for m, (_, _, r, s) in enumerate(pool):
            if m != n:
                ts.update(segment_split_params(p, q, r, s))
        ts = sorted(ts)
        pieces.append([(point_at(p, q, t), t) for t in ts])
    ids = _vertex_ids(pt for pcs in pieces for pt, _ in pcs)
    edges = set()
    for pcs in pieces:
        for (a, _), (b, _) in zip(pcs, pcs[1:]):
            edges.add(tuple(sorted((ids[a], ids[b]))))
    graph = build_plane_graph([(vid, p) for p, vid in ids.items()], sorted(edges))
    results = []
    for li, pl in enumerate(polylines):
        seq = []
        prov = {}
        for (pli, si, _, _), pcs in zip(pool, pieces):
            if pli != li:
                continue
            for (a, ta), (b, tb) in zip(pcs, pcs[1:]):
                if not seq:
                    seq.append(ids[a])
                seq.append(ids[b])
                prov[len(seq) - 1] = (si, (ta, tb))
        if pl.closed and seq[0] == seq[-1]:
            seq.pop()
        walk = normalize_walk(seq, pl.closed, graph)
        results.append(ArrangementResult(Instance(graph, walk), prov))
    return results


def arrange_polyline(raw: RawPolyline) -> ArrangementResult:
    return arrange_polylines([raw])[0]


def drawn_polyline(inst: Instance) -> RawPolyline:
    if inst.graph.coords is None:
        raise errors.NoCoordinates("instance has no drawing")
    pts = [inst.graph.coords[v] for v in inst.walk.vertices]
    return RawPolyline.of(pts, inst.walk.closed and len(pts) >= 3)


def overlay_pair(k: Instance, l: Instance) -> Tuple[Instance, Instance]:
    """Re-express two drawn walks in one common arrangement (no-op when they already share a graph)."""
    if k.graph is l.graph or k.graph == l.graph:
        return k, l
    if k.graph.coords is None or l.graph.coords is None:
        raise errors.AmbientMismatch("walks on different graphs can only be overlaid when both are drawn")
    rk, rl = arrange_polylines([drawn_polyline(k), drawn_polyline(l)])
    return rk.instance, rl.instance


# --- documents -------------------------------------------------------------------------

Document = Union[Instance, Tuple[Instance, Instance]]


def _rat(value, where):
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise errors.SemanticError(f"{where}: not a rational number: {value!r}") from exc


def _graph_from_doc(doc) -> PlaneGraph:
    verts = []
    for i, v in enumerate(doc.get("vertices", [])):
        if not isinstance(v, dict) or "id" not in v:
            raise errors.SemanticError(f"graph.vertices[{i}] must be an object with an 'id'")
        if "x" in v or "y" in v:
            verts.append((str(v["id"]), (_rat(v.get("x"), f"vertex {v['id']}"), _rat(v.get("y"), f"vertex {v['id']}"))))
        else:
            verts.append(str(v["id"]))
    edges = [tuple(str(x) for x in e) for e in doc.get("edges", [])]
    if any(len(e) != 2 for e in edges):
        raise errors.SemanticError("graph.edges entries must be pairs of vertex ids")
    rot = doc.get("rotations")
    if rot is not None:
        def entry(e):
            if isinstance(e, (int, str)):
                return e
            return tuple(str(x) for x in e)

        rot = {str(v): [entry(e) for e in seq] for v, seq in rot.items()}
    return build_plane_graph(verts, edges, rot)


def instance_from_doc(doc) -> Document:
    if not isinstance(doc, dict):
        raise errors.SemanticError("document must be a JSON object")
    if "fixture" in doc:
        found = fixture(str(doc["fixture"]))
        if isinstance(found, PlaneGraph):
            raise errors.SemanticError(f"fixture {doc['fixture']!r} is a graph without a walk")
        if isinstance(found, tuple):
            return overlay_pair(*found)
        return found
    if "K" in doc or "L" in doc:
        if "K" not in doc or "L" not in doc:
            raise errors.SemanticError("pair documents need both 'K' and 'L'")
        k, l = instance_from_doc(doc["K"]), instance_from_doc(doc["L"])
        if isinstance(k, tuple) or isinstance(l, tuple):
            raise errors.SemanticError("pair members must be single instances")
        return overlay_pair(k, l)
    if "polyline" in doc:
        pl = doc["polyline"]
        pts = [(_rat(x, "polyline point"), _rat(y, "polyline point")) for x, y in pl.get("points", [])]
        return arrange_polyline(RawPolyline.of(pts, bool(pl.get("closed", False)))).instance
    if "graph" in doc:
        graph = _graph_from_doc(doc["graph"])
        walk = doc.get("walk")
        if not isinstance(walk, dict) or "vertices" not in walk:
            raise errors.SemanticError("graph documents need a 'walk' with 'vertices'")
        w = normalize_walk([str(v) for v in walk["vertices"]], bool(walk.get("closed", False)), graph)
        return Instance(graph, w)
    raise errors.SemanticError("document must contain 'fixture', 'polyline', 'graph' or 'K'/'L'")


def parse_instance(data: Union[bytes, str]) -> Document:
    """Parse a UTF-8 JSON input document into an instance (or a pair of instances)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise errors.InputSyntaxError(f"input is not UTF-8: {exc.reason}") from exc
    try:
        doc = json.loads(data, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise errors.InputSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    return instance_from_doc(doc)


def load(source: str) -> Document:
    """Read a document from a path, or resolve a bare fixture name."""
    path = Path(source)
    if path.exists():
        return parse_instance(path.read_bytes())
    return instance_from_doc({"fixture": source})
