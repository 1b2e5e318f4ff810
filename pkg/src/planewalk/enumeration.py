"""Exhaustive enumeration of walks on a plane graph (desk-scale test corpora)."""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Optional

from .planegraph import Instance, PlaneGraph, Walk, edge


def open_walks(graph: PlaneGraph, max_steps: int, max_multiplicity: Optional[int] = None) -> Iterator[Instance]:
    """All open walks with 0..max_steps steps, in lexicographic order per start vertex."""

    def extend(seq, used):
        yield Instance(graph, Walk(tuple(seq), False))
        if len(seq) - 1 == max_steps:
            return
        u = seq[-1]
        for w in sorted(graph.rotation[u]):
            e = edge(u, w)
            if max_multiplicity is not None and used[e] >= max_multiplicity:
                continue
            used[e] += 1
            seq.append(w)
            yield from extend(seq, used)
            seq.pop()
            used[e] -= 1

    for v in graph.vertices:
        yield from extend([v], Counter())


def closed_walks(graph: PlaneGraph, max_steps: int, max_multiplicity: Optional[int] = None) -> Iterator[Instance]:
    """All closed walks with 3..max_steps steps (every rotation of the cycle listed separately)."""
    for inst in open_walks(graph, max_steps, max_multiplicity):
        vs = inst.walk.vertices
        if len(vs) >= 4 and vs[0] == vs[-1] and vs[-2] != vs[0]:
            yield Instance(graph, Walk(vs[:-1], True))
