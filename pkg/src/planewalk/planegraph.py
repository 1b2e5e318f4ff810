"""Plane graphs as rotation systems, walks on them, and face tracing."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import errors
from .geometry import Point, as_point, direction_key, sub

Edge = Tuple[str, str]


def edge(u: str, v: str) -> Edge:
    """Canonical (sorted) form of the undirected edge uv."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class PlaneGraph:
    vertices: Tuple[str, ...]
    edges: frozenset
    rotation: Mapping[str, Tuple[str, ...]]
    coords: Optional[Mapping[str, Point]] = None

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return self.rotation[v]

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: str, v: str) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def rotation_index(self, v: str, w: str) -> int:
        return self.rotation[v].index(w)

    def __repr__(self):
        return f"PlaneGraph(V={len(self.vertices)}, E={len(self.edges)})"


@dataclass(frozen=True)
class Walk:
    vertices: Tuple[str, ...]
    closed: bool = False

    @property
    def n_steps(self) -> int:
        k = len(self.vertices)
        if k <= 1:
            return 0
        return k if self.closed else k - 1

    def step_ends(self, s: int) -> Tuple[str, str]:
        """Endpoints of step s (1-based): positions s-1 and s (mod length when closed)."""
        k = len(self.vertices)
        return self.vertices[s - 1], self.vertices[s % k]

    def step_edge(self, s: int) -> Edge:
        return edge(*self.step_ends(s))

    def step_edges(self) -> List[Edge]:
        return [self.step_edge(s) for s in range(1, self.n_steps + 1)]

    def step_endpoints_positions(self, s: int) -> Tuple[int, int]:
        k = len(self.vertices)
        return s - 1, s % k

    def is_empty(self) -> bool:
        return not self.vertices

    def is_constant(self) -> bool:
        return len(self.vertices) == 1

    def is_injective(self) -> bool:
        """Injective as a map of the domain: distinct vertices and at least one step."""
        if self.n_steps == 0:
            return False
        if self.closed and len(self.vertices) < 3:
            return False
        return len(set(self.vertices)) == len(self.vertices)

    def interior_positions(self) -> List[int]:
        """Positions that are passes (vertex with an in-step and an out-step)."""
        k = len(self.vertices)
        if self.n_steps == 0:
            return []
        return list(range(k)) if self.closed else list(range(1, k - 1))

    def in_step(self, p: int) -> int:
        return p if p > 0 else len(self.vertices)

    def out_step(self, p: int) -> int:
        return p + 1

    def domain_distance(self, p: int, q: int) -> int:
        d = abs(p - q)
        if self.closed:
            d = min(d, len(self.vertices) - d)
        return d


@dataclass(frozen=True)
class Instance:
    graph: PlaneGraph
    walk: Walk

    @property
    def has_coords(self) -> bool:
        return self.graph.coords is not None

    def point(self, v: str) -> Point:
        return self.graph.coords[v]


@dataclass
class FaceTrace:
    faces: List[List[Tuple[str, str]]]
    genus: Dict[str, int] = field(default_factory=dict)  # keyed by least vertex of the component

    @property
    def max_genus(self) -> int:
        return max(self.genus.values(), default=0)


def rotation_from_coordinates(vertices: Iterable[str], edges: Iterable[Edge], coords) -> Dict[str, Tuple[str, ...]]:
    """Counterclockwise neighbour order at each vertex, starting from the +x direction."""
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rot = {}
    for v in vertices:
        nbrs = adj.get(v, [])
        dirs = {w: sub(coords[w], coords[v]) for w in nbrs}
        order = sorted(nbrs, key=lambda w: direction_key(dirs[w]))
        for a, b in zip(order, order[1:]):
            if direction_key(dirs[a]) == direction_key(dirs[b]):
                raise errors.CoincidentDirections(f"edges {v}{a} and {v}{b} leave {v} in the same direction")
        rot[v] = tuple(order)
    return rot


def _components(vertices, rotation) -> Dict[str, str]:
    root = {}
    for v in vertices:
        if v in root:
            continue
        root[v] = v
        stack = [v]
        while stack:
            x = stack.pop()
            for y in rotation[x]:
                if y not in root:
                    root[y] = v
                    stack.append(y)
    return root


def trace_faces(graph: PlaneGraph) -> FaceTrace:
    """Trace faces: arriving at v along e, leave along the clockwise successor of e at v."""
    rot = graph.rotation
    seen = set()
    faces = []
    for u in graph.vertices:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                nb = rot[b]
                i = nb.index(a)
                dart = (b, nb[i - 1])
            faces.append(face)
    comp = _components(graph.vertices, rot)
    counts = defaultdict(lambda: [0, 0, 0])
    for v in graph.vertices:
        counts[comp[v]][0] += 1
        counts[comp[v]][1] += len(rot[v])
    for face in faces:
        counts[comp[face[0][0]]][2] += 1
    genus = {}
    for r, (nv, half, nf) in counts.items():
        ne = half // 2
        if ne == 0:
            nf = 1
        genus[r] = (2 - nv + ne - nf) // 2
    return FaceTrace(faces=faces, genus=genus)


def _check_rotation(vertices, edges, rotation):
    inc = defaultdict(set)
    for u, v in edges:
        inc[u].add(v)
        inc[v].add(u)
    for v in vertices:
        r = rotation.get(v, ())
        if len(r) != len(set(r)) or set(r) != inc.get(v, set()):
            raise errors.SemanticError(f"rotation at {v} must list each incident edge exactly once")


def make_graph(vertices, edges, rotation, coords=None, check_genus=True) -> PlaneGraph:
    """Assemble a PlaneGraph from already-canonical parts, checking rotation and genus."""
    vertices = tuple(sorted(vertices))
    edges = frozenset(edges)
    rotation = {v: tuple(rotation.get(v, ())) for v in vertices}
    _check_rotation(vertices, edges, rotation)
    g = PlaneGraph(vertices, edges, rotation, coords)
    if check_genus:
        ft = trace_faces(g)
        if ft.max_genus > 0:
            raise errors.NonPlanarRotation(f"rotation system has genus {ft.max_genus}")
    return g


def _rotation_as_neighbors(v, seq, edge_list) -> Tuple[str, ...]:
    out = []
    for item in seq:
        if isinstance(item, int) and not isinstance(item, bool):
            a, b = edge_list[item]
        elif isinstance(item, str):
            out.append(item)
            continue
        else:
            a, b = item
        if v not in (a, b):
            raise errors.SemanticError(f"rotation at {v} lists edge {a}{b}, which is not incident to it")
        out.append(b if a == v else a)
    return tuple(out)


def build_plane_graph(vertices, edges, rotation=None) -> PlaneGraph:
    """Validate raw input and build a PlaneGraph.

    ``vertices`` is a sequence of ids or of ``(id, (x, y))`` pairs (coordinates
    must be given for all vertices or none). ``edges`` is a sequence of id
    pairs. ``rotation`` maps ids to sequences of neighbour ids, id pairs or
    indices into ``edges``; it is computed from coordinates when omitted.
    """
    ids = []
    coords = {}
    for item in vertices:
        if isinstance(item, str):
            ids.append(item)
        else:
            vid, xy = item
            ids.append(vid)
            if xy is not None:
                coords[vid] = as_point(xy)
    if len(set(ids)) != len(ids):
        raise errors.SemanticError("vertex identifiers must be distinct")
    if coords and len(coords) != len(ids):
        raise errors.SemanticError("coordinates must be given for all vertices or none")
    idset = set(ids)
    edge_list = []
    canon = set()
    for u, v in edges:
        for w in (u, v):
            if w not in idset:
                raise errors.UnknownVertex(f"edge references unknown vertex {w!r}")
        if u == v:
            raise errors.LoopEdge(f"loop at {u}")
        e = edge(u, v)
        if e in canon:
            raise errors.ParallelEdge(f"parallel edge {u}{v}")
        canon.add(e)
        edge_list.append((u, v))
    if coords:
        seen = {}
        for v, p in coords.items():
            if p in seen:
                raise errors.CoincidentCoordinates(f"{seen[p]} and {v} share coordinates {p}")
            seen[p] = v
    computed = rotation_from_coordinates(ids, canon, coords) if coords else None
    if rotation is None:
        if computed is None:
            raise errors.SemanticError("rotation is required when coordinates are absent")
        rot = computed
    else:
        rot = {v: _rotation_as_neighbors(v, rotation.get(v, ()), edge_list) for v in ids}
        _check_rotation(ids, canon, rot)
        if computed is not None:
            for v in ids:
                if not same_cyclic_order(rot[v], computed[v]):
                    raise errors.RotationCoordMismatch(f"rotation at {v} disagrees with coordinates")
            rot = computed
    return make_graph(ids, canon, rot, coords or None)


def same_cyclic_order(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return tuple(b[i:]) + tuple(b[:i]) == tuple(a)


def _collapse(seq: Sequence, closed: bool) -> List:
    out = []
    for x in seq:
        if not out or out[-1] != x:
            out.append(x)
    if closed:
        while len(out) > 1 and out[0] == out[-1]:
            out.pop()
    return out


def collapse_repeats(seq: Sequence, closed: bool) -> List:
    """Replace runs of equal consecutive items by one item (cyclically when closed)."""
    return _collapse(seq, closed)


def normalize_walk(raw: Sequence[str], closed: bool, graph: PlaneGraph, allow_short_closed: bool = False) -> Walk:
    if not raw:
        raise errors.NotAWalk("walk must visit at least one vertex")
    known = set(graph.vertices)
    for v in raw:
        if v not in known:
            raise errors.UnknownVertex(f"walk references unknown vertex {v!r}")
    seq = _collapse(raw, closed)
    k = len(seq)
    pairs = list(zip(seq, seq[1:]))
    if closed and k > 1:
        pairs.append((seq[-1], seq[0]))
    for u, v in pairs:
        if not graph.has_edge(u, v):
            raise errors.NotAWalk(f"{u} and {v} are consecutive but not adjacent")
    if closed and 1 < k < 3 and not allow_short_closed:
        raise errors.DegenerateClosed("closed walk collapses to fewer than 3 steps")
    return Walk(tuple(seq), closed)


def make_instance(graph: PlaneGraph, raw: Sequence[str], closed: bool = False) -> Instance:
    return Instance(graph, normalize_walk(raw, closed, graph))


def restrict(graph: PlaneGraph, keep_edges) -> PlaneGraph:
    """Subgraph on the given edges (and their endpoints), rotation restricted."""
    keep_edges = frozenset(keep_edges)
    verts = sorted({v for e in keep_edges for v in e})
    rot = {v: tuple(w for w in graph.rotation[v] if edge(v, w) in keep_edges) for v in verts}
    coords = {v: graph.coords[v] for v in verts} if graph.coords is not None else None
    return PlaneGraph(tuple(verts), keep_edges, rot, coords)


def image_subgraph(inst: Instance) -> PlaneGraph:
    w = inst.walk
    if w.n_steps == 0:
        verts = tuple(sorted(set(w.vertices)))
        coords = {v: inst.graph.coords[v] for v in verts} if inst.has_coords else None
        return PlaneGraph(verts, frozenset(), {v: () for v in verts}, coords)
    return restrict(inst.graph, w.step_edges())


def graph_genus(graph: PlaneGraph) -> int:
    return trace_faces(graph).max_genus


def relabel(graph: PlaneGraph, mapping: Mapping[str, str]) -> PlaneGraph:
    verts = tuple(sorted(mapping[v] for v in graph.vertices))
    edges = frozenset(edge(mapping[u], mapping[v]) for u, v in graph.edges)
    rot = {mapping[v]: tuple(mapping[w] for w in graph.rotation[v]) for v in graph.vertices}
    coords = None
    if graph.coords is not None:
        coords = {mapping[v]: p for v, p in graph.coords.items()}
    return PlaneGraph(verts, edges, rot, coords)


def coords_to_json(p: Point):
    from .geometry import fmt_rational

    return [fmt_rational(p[0]), fmt_rational(p[1])]
