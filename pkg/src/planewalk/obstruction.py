"""Mod-2 van Kampen obstruction for walks in plane graphs, and for pairs of walks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from . import errors
from .derivative import INCONCLUSIVE, NO, YES, Decision
from .planegraph import Edge, Instance, PlaneGraph, Walk

Cell = Tuple[int, int]


@dataclass
class DeletedProductComplex:
    cells: List[Cell]
    # one-cell -> the two-cells it bounds
    incidence: Dict[Hashable, List[Cell]]
    cell_sides: Dict[Cell, List[Hashable]]
    kind: str  # "open", "closed" or "pair"

    @property
    def boundary(self) -> set:
        return {oc for oc, cs in self.incidence.items() if len(cs) == 1}


@dataclass
class PaintedComplex:
    complex: DeletedProductComplex
    black_one_cells: frozenset
    black_cells: frozenset


@dataclass
class Component:
    cells: List[Cell]
    contributes: bool
    parity: int = 0


@dataclass(frozen=True)
class ObstructionVector:
    coordinates: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __bool__(self):
        return not self.is_zero


@dataclass
class ObstructionReport:
    painted: PaintedComplex
    parities: Dict[Cell, int]
    components: List[Component]
    vector: ObstructionVector = field(init=False)

    def __post_init__(self):
        self.vector = ObstructionVector(tuple(c.parity for c in self.components if c.contributes))


def _ends(walk: Walk, s: int) -> Tuple[int, int]:
    return walk.step_endpoints_positions(s)


def _assemble(cells, sides, kind) -> DeletedProductComplex:
    incidence: Dict[Hashable, List[Cell]] = {}
    for c in cells:
        for oc in sides[c]:
            incidence.setdefault(oc, []).append(c)
    return DeletedProductComplex(cells, incidence, sides, kind)


def deleted_product(walk: Walk) -> DeletedProductComplex:
    m = walk.n_steps
    cells = []
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            if walk.closed and (j - i) > m - 2:
                continue
            cells.append((i, j))
    # a one-cell (p, s) is domain vertex p times step s
    sides = {(i, j): [(p, j) for p in _ends(walk, i)] + [(q, i) for q in _ends(walk, j)] for i, j in cells}
    return _assemble(cells, sides, "closed" if walk.closed else "open")


def pair_product(k_walk: Walk, l_walk: Walk) -> DeletedProductComplex:
    cells = [(i, j) for i in range(1, k_walk.n_steps + 1) for j in range(1, l_walk.n_steps + 1)]
    sides = {
        (i, j): [("K", p, j) for p in _ends(k_walk, i)] + [("L", q, i) for q in _ends(l_walk, j)] for i, j in cells
    }
    return _assemble(cells, sides, "pair")


def _disjoint(a: Edge, b: Edge) -> bool:
    return not (set(a) & set(b))


def paint_black(cx: DeletedProductComplex, inst: Instance, other: Optional[Instance] = None) -> PaintedComplex:
    """Black one-cells: vertex image off the step image. Black cells: disjoint step images."""
    first = inst.walk
    second = other.walk if other is not None else first
    black1 = set()
    for oc in cx.incidence:
        if cx.kind == "pair":
            side, p, s = oc
            vw, sw = (first, second) if side == "K" else (second, first)
        else:
            p, s = oc
            vw = sw = first
        if vw.vertices[p] not in sw.step_edge(s):
            black1.add(oc)
    black2 = {c for c in cx.cells if _disjoint(first.step_edge(c[0]), second.step_edge(c[1]))}
    return PaintedComplex(cx, frozenset(black1), frozenset(black2))


def _slot_positions(graph: PlaneGraph, orders: Dict[Edge, Sequence[Hashable]]) -> Dict[str, Dict[Hashable, int]]:
    """Cyclic slot index of each strand at each vertex: rotation first, then corridor order."""
    out = {}
    for v in graph.vertices:
        pos = {}
        for w in graph.rotation[v]:
            a = (v, w) if v < w else (w, v)
            strands = orders.get(a, ())
            seq = strands if a[0] == v else list(reversed(strands))
            for st in seq:
                pos[st] = len(pos)
        out[v] = pos
    return out


def _chords_cross(x0, x1, y0, y1) -> bool:
    lo, hi = min(x0, x1), max(x0, x1)
    return (lo < y0 < hi) != (lo < y1 < hi)


def default_orders(walks: Sequence[Tuple[Hashable, Walk]]) -> Dict[Edge, List[Hashable]]:
    """Corridor orders by walk index; earlier walks' strands first."""
    orders: Dict[Edge, List[Hashable]] = {}
    for tag, w in walks:
        for s in range(1, w.n_steps + 1):
            orders.setdefault(w.step_edge(s), []).append((tag, s))
    return orders


def _arcs(tag, walk: Walk):
    for p in walk.interior_positions():
        yield p, walk.vertices[p], (tag, walk.in_step(p)), (tag, walk.out_step(p))


def crossing_parities(
    inst: Instance,
    orders: Optional[Dict[Edge, List[int]]] = None,
    attribution: str = "out",
) -> Dict[Cell, int]:
    """Crossing parities of the canonical combinatorial push-off.

    ``orders`` overrides the corridor order (edge -> steps, near-to-far on the
    left of the edge); ``attribution`` picks which steps of two crossing passes
    own the crossing ("out" or "in").
    """
    walk = inst.walk
    cx = deleted_product(walk)
    par = {c: 0 for c in cx.cells}
    if orders is None:
        tagged = default_orders([(0, walk)])
    else:
        tagged = {a: [(0, s) for s in seq] for a, seq in orders.items()}
    slots = _slot_positions(inst.graph, tagged)
    arcs_at: Dict[str, list] = {}
    for p, v, a, b in _arcs(0, walk):
        arcs_at.setdefault(v, []).append((p, slots[v][a], slots[v][b]))
    for v, arcs in arcs_at.items():
        for i, (p, a0, a1) in enumerate(arcs):
            for q, b0, b1 in arcs[i + 1:]:
                if walk.domain_distance(p, q) < 2 or not _chords_cross(a0, a1, b0, b1):
                    continue
                if attribution == "out":
                    s, t = walk.out_step(p), walk.out_step(q)
                else:
                    s, t = walk.in_step(p), walk.in_step(q)
                cell = (min(s, t), max(s, t))
                par[cell] ^= 1
    return par


def pair_crossing_parities(k: Instance, l: Instance, orders=None) -> Dict[Cell, int]:
    """Push-off parities for a pair on a common graph; K strands ranked before L strands."""
    cx = pair_product(k.walk, l.walk)
    par = {c: 0 for c in cx.cells}
    if orders is None:
        orders = default_orders([("K", k.walk), ("L", l.walk)])
    slots = _slot_positions(k.graph, orders)
    k_arcs = {}
    for p, v, a, b in _arcs("K", k.walk):
        k_arcs.setdefault(v, []).append((p, slots[v][a], slots[v][b]))
    for q, v, a, b in _arcs("L", l.walk):
        qb0, qb1 = slots[v][a], slots[v][b]
        for p, a0, a1 in k_arcs.get(v, ()):
            if _chords_cross(a0, a1, qb0, qb1):
                par[(k.walk.out_step(p), l.walk.out_step(q))] ^= 1
    return par


def components(painted: PaintedComplex, parities: Optional[Dict[Cell, int]] = None) -> List[Component]:
    cx = painted.complex
    parent = {c: c for c in cx.cells}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for oc, cs in cx.incidence.items():
        if oc in painted.black_one_cells:
            continue
        for c in cs[1:]:
            ra, rb = find(cs[0]), find(c)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[Cell, List[Cell]] = {}
    for c in cx.cells:
        groups.setdefault(find(c), []).append(c)
    boundary = cx.boundary
    out = []
    for cells in sorted(groups.values(), key=min):
        cells.sort()
        contributes = all(
            oc in painted.black_one_cells for c in cells for oc in cx.cell_sides[c] if oc in boundary
        )
        parity = sum(parities.get(c, 0) for c in cells) % 2 if parities else 0
        out.append(Component(cells, contributes, parity))
    return out


def component_sums(comps: List[Component], parities: Dict[Cell, int], contributing_only: bool = True) -> List[int]:
    return [sum(parities.get(c, 0) for c in comp.cells) % 2 for comp in comps if comp.contributes or not contributing_only]


def obstruction_report(inst: Instance, parities: Optional[Dict[Cell, int]] = None) -> ObstructionReport:
    cx = deleted_product(inst.walk)
    painted = paint_black(cx, inst)
    if parities is None:
        parities = crossing_parities(inst)
    return ObstructionReport(painted, parities, components(painted, parities))


def van_kampen(inst: Instance) -> ObstructionVector:
    return obstruction_report(inst).vector


def decide_by_obstruction(inst: Instance) -> Decision:
    v = van_kampen(inst)
    if not v.is_zero:
        return Decision(NO, "ObstructionNonzero")
    if inst.walk.closed:
        return Decision(INCONCLUSIVE, "ObstructionZeroClosed")
    return Decision(YES, "ObstructionZero")


def _check_common(k: Instance, l: Instance):
    if k.graph is not l.graph and k.graph != l.graph:
        raise errors.AmbientMismatch("instances must live in one common plane graph (overlay them first)")


def pair_obstruction_report(k: Instance, l: Instance, parities=None) -> ObstructionReport:
    _check_common(k, l)
    cx = pair_product(k.walk, l.walk)
    painted = paint_black(cx, k, l)
    if parities is None:
        parities = pair_crossing_parities(k, l)
    return ObstructionReport(painted, parities, components(painted, parities))


def disjoinability_obstruction(k: Instance, l: Instance) -> ObstructionVector:
    return pair_obstruction_report(k, l).vector
