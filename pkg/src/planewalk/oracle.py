"""Brute-force ground truth via strip systems.

Near an image graph, an approximating map is a bundle of parallel strands in
each edge corridor plus arcs inside small vertex disks. A walk is approximable
by embeddings iff some choice of strand order per corridor makes every disk's
arc diagram non-crossing; stubs at the walk's ends never obstruct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional

from .derivative import NO, YES
from .errors import AmbientMismatch, BudgetExceeded
from .obstruction import _chords_cross
from .planegraph import Edge, Instance, PlaneGraph

DEFAULT_BUDGET = 10**7


@dataclass
class OracleResult:
    verdict: str
    orders: Optional[Dict[Edge, tuple]] = None
    explored: int = 0


def _corridors(walks):
    corr: Dict[Edge, List] = {}
    for tag, w in walks:
        for s in range(1, w.n_steps + 1):
            corr.setdefault(w.step_edge(s), []).append((tag, s))
    return corr


def _arcs_by_vertex(walks):
    arcs: Dict[str, List] = {}
    for tag, w in walks:
        for p in w.interior_positions():
            arcs.setdefault(w.vertices[p], []).append((tag, (tag, w.in_step(p)), (tag, w.out_step(p))))
    return arcs


def _slot_index(graph: PlaneGraph, v: str, end_orders) -> Dict:
    pos = {}
    for w in graph.rotation[v]:
        a = (v, w) if v < w else (w, v)
        seq = end_orders.get((a, v))
        if seq is None:
            continue
        if a[0] != v:
            seq = reversed(seq)
        for st in seq:
            pos[st] = len(pos)
    return pos


class _Search:
    def __init__(self, graph, walks, budget, conflict):
        self.graph = graph
        self.budget = budget
        self.conflict = conflict
        self.corr = _corridors(walks)
        self.edges = sorted(self.corr)
        self.arcs = {v: a for v, a in _arcs_by_vertex(walks).items() if len(a) > 1}
        idx = {e: i for i, e in enumerate(self.edges)}
        self.ready: Dict[int, List[str]] = {}
        for v in self.arcs:
            last = max(idx[(v, w) if v < w else (w, v)] for w in graph.rotation[v] if ((v, w) if v < w else (w, v)) in idx)
            self.ready.setdefault(last, []).append(v)
        self.explored = 0

    def disk_ok(self, v, end_orders) -> bool:
        pos = _slot_index(self.graph, v, end_orders)
        arcs = self.arcs[v]
        for i, (ta, a0, a1) in enumerate(arcs):
            for tb, b0, b1 in arcs[i + 1:]:
                if self.conflict(ta, tb) and _chords_cross(pos[a0], pos[a1], pos[b0], pos[b1]):
                    return False
        return True

    def choices(self, e):
        raise NotImplementedError

    def run(self) -> OracleResult:
        end_orders = {}
        found = self._dfs(0, end_orders)
        if found is None:
            return OracleResult(NO, explored=self.explored)
        return OracleResult(YES, found, self.explored)

    def _dfs(self, i, end_orders):
        if i == len(self.edges):
            return {e: (end_orders[(e, e[0])], end_orders[(e, e[1])]) for e in self.edges}
        e = self.edges[i]
        for at_lo, at_hi in self.choices(e):
            self.explored += 1
            if self.explored > self.budget:
                raise BudgetExceeded(self.budget)
            end_orders[(e, e[0])] = at_lo
            end_orders[(e, e[1])] = at_hi
            if all(self.disk_ok(v, end_orders) for v in self.ready.get(i, ())):
                found = self._dfs(i + 1, end_orders)
                if found is not None:
                    return found
        del end_orders[(e, e[0])]
        del end_orders[(e, e[1])]
        return None


class _EmbeddingSearch(_Search):
    def choices(self, e):
        for perm in permutations(self.corr[e]):
            yield perm, perm


class _DisjoinSearch(_Search):
    def choices(self, e):
        strands = self.corr[e]
        for a in permutations(strands):
            rank_a = {s: i for i, s in enumerate(a)}
            for b in permutations(strands):
                rank_b = {s: i for i, s in enumerate(b)}
                if all(
                    (rank_a[x] < rank_a[y]) == (rank_b[x] < rank_b[y])
                    for x in strands
                    for y in strands
                    if x[0] == "K" and y[0] == "L"
                ):
                    yield a, b


def oracle_approximable(inst: Instance, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exhaustive strip-system search; the witness maps each edge to its strand order (steps)."""
    search = _EmbeddingSearch(inst.graph, [(0, inst.walk)], budget, lambda a, b: True)
    res = search.run()
    if res.orders is not None:
        res.orders = {e: tuple(s for _, s in lo) for e, (lo, _hi) in res.orders.items()}
    return res


def oracle_disjoinable(k: Instance, l: Instance, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Search independent end orders per corridor; only K strands versus L strands must not cross."""
    if k.graph is not l.graph and k.graph != l.graph:
        raise AmbientMismatch("instances must live in one common plane graph (overlay them first)")
    search = _DisjoinSearch(k.graph, [("K", k.walk), ("L", l.walk)], budget, lambda a, b: a != b)
    return search.run()
