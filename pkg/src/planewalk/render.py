"""Static SVG output: drawings, derivative towers and obstruction tables.

Output is deterministic for a fixed input. Graphs without coordinates are
laid out from their rotation system with networkx's planar drawing
(``combinatorial_embedding_to_pos``), so the picture respects the embedding.
"""

from __future__ import annotations

from html import escape
from typing import Dict, List, Tuple

import networkx as nx

from .derivative import Decision
from .obstruction import ObstructionReport
from .planegraph import Instance, PlaneGraph

PALETTE = ["#cfe3f7", "#f7e0c4", "#d5efd0", "#ecd3ef", "#f6f1bf", "#d0ece9", "#f3d0d0"]
PANEL = 240.0
MARGIN = 24.0


def layout(graph: PlaneGraph, positions=None) -> Dict[str, Tuple[float, float]]:
    if positions is None and graph.coords is not None:
        positions = graph.coords
    if positions is not None:
        return {v: (float(positions[v][0]), float(positions[v][1])) for v in graph.vertices}
    if len(graph.vertices) <= 1:
        return {v: (0.0, 0.0) for v in graph.vertices}
    emb = nx.PlanarEmbedding()
    emb.set_data({v: list(reversed(graph.rotation[v])) for v in graph.vertices})
    pos = nx.combinatorial_embedding_to_pos(emb)
    return {v: (float(x), float(y)) for v, (x, y) in pos.items()}


def _fit(pos, ox=0.0, oy=0.0, size=PANEL):
    """Map layout coordinates into a size x size box (y axis pointing up)."""
    if not pos:
        return {}
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (size - 2 * MARGIN) / span
    return {v: (ox + MARGIN + (x - min(xs)) * k, oy + size - MARGIN - (y - min(ys)) * k) for v, (x, y) in pos.items()}


def _svg(width, height, body: List[str], title: str) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    style = (
        "<style>.edge{stroke:#bbb;stroke-width:2}.step{stroke:#1f5fa8;stroke-width:2.5;fill:none}"
        ".vertex{fill:#333}.label{font:11px sans-serif;fill:#222}.cell{stroke:#999;stroke-width:0.5}"
        ".black{fill:#333}.one-cell-black{stroke:#000;stroke-width:4}.parity{font:13px sans-serif;text-anchor:middle}"
        "</style>"
    )
    return "\n".join([head, f"<title>{escape(title)}</title>", style, *body, "</svg>"]) + "\n"


def _graph_body(inst: Instance, pts, label=True) -> List[str]:
    out = []
    for u, v in inst.graph.sorted_edges():
        (x1, y1), (x2, y2) = pts[u], pts[v]
        out.append(f'<line class="edge" data-edge="{escape(u)}-{escape(v)}" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    w = inst.walk
    if w.n_steps:
        seq = list(w.vertices) + ([w.vertices[0]] if w.closed else [])
        d = " ".join(f"{pts[v][0]:.2f},{pts[v][1]:.2f}" for v in seq)
        out.append(f'<polyline class="step" points="{d}"/>')
    for v in inst.graph.vertices:
        x, y = pts[v]
        out.append(f'<circle class="vertex" data-vertex="{escape(v)}" cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        if label:
            out.append(f'<text class="label" x="{x + 5:.2f}" y="{y - 5:.2f}">{escape(v)}</text>')
    return out


def render_drawing(inst: Instance) -> str:
    pts = _fit(layout(inst.graph))
    return _svg(PANEL, PANEL, _graph_body(inst, pts), "drawing")


def render_tower(decision: Decision) -> str:
    trace = decision.trace
    body = []
    for lvl, inst in enumerate(trace.levels):
        ox = lvl * PANEL
        body.append(f'<g class="level" data-level="{lvl}">')
        body.append(f'<text class="label" x="{ox + 8:.2f}" y="14">level {lvl}: {escape(trace.notes[lvl])}</text>')
        if inst.graph.vertices:
            pts = _fit(layout(inst.graph, trace.positions[lvl]), ox, 10.0)
            body.extend(_graph_body(inst, pts))
        body.append("</g>")
    return _svg(PANEL * max(1, len(trace.levels)), PANEL + 10, body, "derivative tower")


def render_table(rep: ObstructionReport, unit: float = 36.0) -> str:
    cx = rep.painted.complex
    black1 = rep.painted.black_one_cells
    comp_of = {}
    for n, comp in enumerate(rep.components):
        for c in comp.cells:
            comp_of[c] = n
    rows = max((c[0] for c in cx.cells), default=0)
    cols = max((c[1] for c in cx.cells), default=0)
    body = []
    lines = []
    for c in cx.cells:
        i, j = c
        x, y = MARGIN + (j - 1) * unit, MARGIN + (i - 1) * unit
        n = comp_of[c]
        black = c in rep.painted.black_cells
        cls = "cell black" if black else f"cell comp-{n}"
        if rep.components[n].contributes:
            cls += " contributes"
        fill = "" if black else f' fill="{PALETTE[n % len(PALETTE)]}"'
        body.append(f'<rect class="{cls}" data-cell="{i},{j}" x="{x:.2f}" y="{y:.2f}" width="{unit:.2f}" height="{unit:.2f}"{fill}/>')
        if not black:
            body.append(
                f'<text class="parity" data-cell="{i},{j}" x="{x + unit / 2:.2f}" y="{y + unit / 2 + 4:.2f}">{rep.parities.get(c, 0)}</text>'
            )
        sides = cx.cell_sides[c]
        # first two sides lie on the horizontal lines of the row step, last two on the vertical lines of the column step
        for k, oc in enumerate(sides):
            if oc not in black1:
                continue
            if k < 2:
                yy = y + k * unit
                lines.append(f'<line class="one-cell-black" x1="{x:.2f}" y1="{yy:.2f}" x2="{x + unit:.2f}" y2="{yy:.2f}"/>')
            else:
                xx = x + (k - 2) * unit
                lines.append(f'<line class="one-cell-black" x1="{xx:.2f}" y1="{y:.2f}" x2="{xx:.2f}" y2="{y + unit:.2f}"/>')
    for j in range(1, cols + 1):
        body.append(f'<text class="label" x="{MARGIN + (j - 0.5) * unit:.2f}" y="{MARGIN - 6:.2f}">{j}</text>')
    for i in range(1, rows + 1):
        body.append(f'<text class="label" x="6" y="{MARGIN + (i - 0.5) * unit + 4:.2f}">{i}</text>')
    vec = ",".join(str(b) for b in rep.vector.coordinates)
    body.extend(sorted(set(lines)))
    body.append(f'<text class="label vector" x="{MARGIN:.2f}" y="{MARGIN + rows * unit + 18:.2f}">v = ({vec})</text>')
    return _svg(2 * MARGIN + max(cols, 1) * unit, 2 * MARGIN + max(rows, 1) * unit + 20, body, "obstruction table")
