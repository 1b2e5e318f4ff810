"""Transversal self-intersections, walk derivatives and the derivative-tower decision."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import errors
from .geometry import Point, midpoint, signed_area2
from .planegraph import Edge, Instance, PlaneGraph, Walk, collapse_repeats, edge, image_subgraph

YES, NO, INCONCLUSIVE = "yes", "no", "inconclusive"


@dataclass(frozen=True)
class Pass:
    position: int
    vertex: str
    in_edge: Edge
    out_edge: Edge

    @property
    def is_bounce(self) -> bool:
        return self.in_edge == self.out_edge


@dataclass(frozen=True)
class TransversalWitness:
    positions: Tuple[int, int]
    vertex: str
    edges: Tuple[Edge, Edge, Edge, Edge]  # in/out of the first pass, then of the second


@dataclass(frozen=True)
class WindingInfo:
    degree: int
    cycle_length: int


@dataclass
class DerivativeTrace:
    levels: List[Instance] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    # origin[i] maps a vertex of level i to the level i-1 edge it stands for (empty for level 0)
    origins: List[Dict[str, Edge]] = field(default_factory=list)
    positions: List[Optional[Dict[str, Point]]] = field(default_factory=list)


@dataclass
class Decision:
    approximable: str
    reason: str
    level: int = 0
    witness: Optional[TransversalWitness] = None
    degree: Optional[int] = None
    trace: Optional[DerivativeTrace] = None


def passes(inst: Instance) -> List[Pass]:
    w = inst.walk
    k = len(w.vertices)
    out = []
    for p in w.interior_positions():
        v = w.vertices[p]
        prev, nxt = w.vertices[p - 1], w.vertices[(p + 1) % k]
        out.append(Pass(p, v, edge(prev, v), edge(v, nxt)))
    return out


def _other(e: Edge, v: str) -> str:
    return e[1] if e[0] == v else e[0]


def interleaved(rotation: Tuple[str, ...], a: str, b: str, c: str, d: str) -> bool:
    """Do chords {a, b} and {c, d} cross, with endpoints in the given cyclic order?"""
    ia, ib = rotation.index(a), rotation.index(b)
    lo, hi = min(ia, ib), max(ia, ib)
    inside_c = lo < rotation.index(c) < hi
    inside_d = lo < rotation.index(d) < hi
    return inside_c != inside_d


def detect_transversal(inst: Instance) -> Optional[TransversalWitness]:
    w = inst.walk
    by_vertex: Dict[str, List[Pass]] = {}
    for ps in passes(inst):
        if not ps.is_bounce:
            by_vertex.setdefault(ps.vertex, []).append(ps)
    best = None
    for v, plist in by_vertex.items():
        rot = inst.graph.rotation[v]
        for i, p in enumerate(plist):
            for q in plist[i + 1:]:
                if w.domain_distance(p.position, q.position) < 2:
                    continue
                four = {p.in_edge, p.out_edge, q.in_edge, q.out_edge}
                if len(four) != 4:
                    continue
                a, b = _other(p.in_edge, v), _other(p.out_edge, v)
                c, d = _other(q.in_edge, v), _other(q.out_edge, v)
                if interleaved(rot, a, b, c, d):
                    cand = TransversalWitness((p.position, q.position), v, (p.in_edge, p.out_edge, q.in_edge, q.out_edge))
                    if best is None or cand.positions < best.positions:
                        best = cand
                    break
    return best


def empty_instance(closed: bool) -> Instance:
    return Instance(PlaneGraph((), frozenset(), {}, None), Walk((), closed))


def derive_with_origin(inst: Instance, positions: Optional[Dict[str, Point]] = None):
    """Derivative plus bookkeeping: (instance, origin map, midpoint positions or None)."""
    if detect_transversal(inst) is not None:
        raise errors.TransversalPresent(0)
    w = inst.walk
    if positions is None and inst.graph.coords is not None:
        positions = dict(inst.graph.coords)
    if w.n_steps == 0:
        return empty_instance(w.closed), {}, ({} if positions is not None else None)
    image = image_subgraph(inst)
    old_edges = image.sorted_edges()
    name = {e: f"e{i}" for i, e in enumerate(old_edges)}
    origin = {name[e]: e for e in old_edges}
    seq = collapse_repeats([name[e] for e in w.step_edges()], w.closed)
    dedges = set()
    pairs = list(zip(seq, seq[1:]))
    if w.closed and len(seq) > 1:
        pairs.append((seq[-1], seq[0]))
    for x, y in pairs:
        dedges.add(edge(x, y))
    rot = {}
    for e in old_edges:
        me = name[e]
        u, v = e
        block = []
        for centre, far in ((v, u), (u, v)):
            around = image.rotation[centre]
            i = around.index(far)
            for j in range(1, len(around)):
                other = name[edge(centre, around[(i + j) % len(around)])]
                if edge(me, other) in dedges:
                    block.append(other)
        rot[me] = tuple(block)
    verts = tuple(sorted(origin))
    graph = PlaneGraph(verts, frozenset(dedges), rot, None)
    new_pos = None
    if positions is not None:
        new_pos = {name[e]: midpoint(positions[e[0]], positions[e[1]]) for e in old_edges}
    return Instance(graph, Walk(tuple(seq), w.closed)), origin, new_pos


def derive(inst: Instance) -> Instance:
    return derive_with_origin(inst)[0]


def _cycle_sign(cycle: List[str], positions: Optional[Dict[str, Point]]) -> int:
    if positions is not None:
        area = signed_area2([positions[v] for v in cycle])
        if area != 0:
            return 1 if area > 0 else -1
    # no usable drawing: positive iff the walk leaves its least vertex towards the lesser neighbour
    i = cycle.index(min(cycle))
    n = len(cycle)
    nxt, prv = cycle[(i + 1) % n], cycle[i - 1]
    return 1 if nxt < prv else -1


def detect_winding(inst: Instance, positions: Optional[Dict[str, Point]] = None) -> Optional[WindingInfo]:
    w = inst.walk
    if not w.closed or w.n_steps < 3:
        return None
    image = image_subgraph(inst)
    n = len(image.vertices)
    if n < 3 or any(len(image.rotation[v]) != 2 for v in image.vertices):
        return None
    if len(image.edges) != n:
        return None
    if any(ps.is_bounce for ps in passes(inst)):
        return None
    cycle = list(w.vertices[:n])
    if len(set(cycle)) != n or w.n_steps % n:
        # image is a disjoint union of cycles or traversal is not uniform
        return None
    if positions is None and inst.graph.coords is not None:
        positions = inst.graph.coords
    sign = _cycle_sign(cycle, positions)
    return WindingInfo(sign * (w.n_steps // n), n)


def _tower(inst: Instance):
    """Yield (level, instance, positions) down the derivative tower, with the iteration cap."""
    cap = len(inst.walk.vertices)
    level = 0
    cur = inst
    pos = dict(inst.graph.coords) if inst.graph.coords is not None else None
    origin: Dict[str, Edge] = {}
    while True:
        if level > cap:
            raise errors.IterationCapExceeded(f"derivative tower exceeded {cap} levels")
        yield level, cur, pos, origin
        cur, origin, pos = derive_with_origin(cur, pos)
        level += 1


def decide_approximable(inst: Instance) -> Decision:
    trace = DerivativeTrace()
    for level, cur, pos, origin in _tower(inst):
        trace.levels.append(cur)
        trace.origins.append(origin)
        trace.positions.append(pos)
        w = cur.walk
        if w.is_empty():
            trace.notes.append("empty")
            return Decision(YES, "EmptyDerivative", level, trace=trace)
        if w.is_injective():
            trace.notes.append("injective")
            return Decision(YES, "Injective", level, trace=trace)
        wit = detect_transversal(cur)
        if wit is not None:
            trace.notes.append("transversal")
            return Decision(NO, "TransversalFound", level, witness=wit, trace=trace)
        if w.closed:
            wind = detect_winding(cur, pos)
            if wind is not None:
                if abs(wind.degree) >= 2:
                    trace.notes.append(f"winding {wind.degree}")
                    return Decision(NO, "ForbiddenWinding", level, degree=wind.degree, trace=trace)
                trace.notes.append(f"winding {wind.degree}")
                return Decision(YES, "UnitWinding", level, degree=wind.degree, trace=trace)
        trace.notes.append("derive")
    raise AssertionError("unreachable")


def winding_degree(inst: Instance) -> int:
    """Generalised degree of a closed walk: degree of its stable winding, 0 if the tower empties."""
    if not inst.walk.closed:
        raise errors.SemanticError("winding degree is defined for closed walks only")
    for level, cur, pos, _ in _tower(inst):
        if cur.walk.is_empty():
            return 0
        wit = detect_transversal(cur)
        if wit is not None:
            raise errors.TransversalPresent(level, wit)
        wind = detect_winding(cur, pos)
        if wind is not None:
            return wind.degree
    raise AssertionError("unreachable")


def is_euler(inst: Instance) -> bool:
    steps = inst.walk.step_edges()
    return len(steps) == len(set(steps)) and set(steps) == set(inst.graph.edges) and bool(steps)


def check_euler_shortcut(inst: Instance) -> Optional[Decision]:
    if not is_euler(inst):
        return None
    wit = detect_transversal(inst)
    if wit is None:
        return Decision(YES, "EulerNoTransversal")
    return Decision(NO, "TransversalFound", 0, witness=wit)
