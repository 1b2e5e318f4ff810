"""Built-in named instances with exact coordinates."""

from __future__ import annotations

import re
from typing import Callable, Dict

from .errors import SemanticError
from .planegraph import Instance, PlaneGraph, build_plane_graph, make_instance

_POLYGONS = {
    3: [(0, 0), (4, 0), (2, 3)],
    4: [(0, 0), (2, 0), (2, 2), (0, 2)],
    5: [(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)],
}


def path3_graph() -> PlaneGraph:
    return build_plane_graph([(f"u{i}", (i, 0)) for i in range(4)], [("u0", "u1"), ("u1", "u2"), ("u2", "u3")])


def star4() -> PlaneGraph:
    pts = [("c", (0, 0)), ("e", (2, 0)), ("n", (0, 2)), ("w", (-2, 0)), ("s", (0, -2))]
    return build_plane_graph(pts, [("c", "e"), ("c", "n"), ("c", "w"), ("c", "s")])


def starpass_graph() -> PlaneGraph:
    pts = [("c", (0, 0)), ("e", (2, 0)), ("w", (-2, 0)), ("s", (0, -2))]
    return build_plane_graph(pts, [("c", "e"), ("c", "w"), ("c", "s")])


def xgraph() -> PlaneGraph:
    pts = [("c", (0, 0)), ("e", (2, 0)), ("n", (0, 2)), ("w", (-2, 0)), ("s", (0, -2))]
    return build_plane_graph(pts, [("c", "e"), ("c", "n"), ("c", "w"), ("c", "s"), ("e", "n")])


def theta() -> PlaneGraph:
    pts = [("a", (-2, 0)), ("b", (2, 0)), ("t", (0, 2)), ("m", (0, 0)), ("u", (0, -2))]
    return build_plane_graph(pts, [("a", "t"), ("t", "b"), ("a", "m"), ("m", "b"), ("a", "u"), ("u", "b")])


def cycle_graph(n: int) -> PlaneGraph:
    """Convex n-gon c0..c{n-1}, counterclockwise, for n in 3..5."""
    pts = _POLYGONS[n]
    ids = [f"c{i}" for i in range(n)]
    return build_plane_graph(list(zip(ids, pts)), [(ids[i], ids[(i + 1) % n]) for i in range(n)])


def triangle() -> PlaneGraph:
    return cycle_graph(3)


def winding(n: int, d: int) -> Instance:
    """Standard d-winding on the n-gon; d = 0 is the constant closed walk at c0."""
    g = cycle_graph(n)
    if d == 0:
        return make_instance(g, ["c0"], closed=True)
    order = [f"c{i}" for i in range(n)]
    if d < 0:
        order = [order[0]] + order[:0:-1]
    return make_instance(g, order * abs(d), closed=True)


def c3wind(d: int) -> Instance:
    return winding(3, d)


def nested_eight() -> Instance:
    """Two triangles sharing v, the small one inside the big one, walked as one loop."""
    pts = [("v", (0, 0)), ("a", (6, 0)), ("b", (0, 6)), ("c", (1, 2)), ("d", (2, 1))]
    g = build_plane_graph(pts, [("v", "a"), ("a", "b"), ("b", "v"), ("v", "c"), ("c", "d"), ("d", "v")])
    return make_instance(g, ["v", "a", "b", "v", "c", "d"], closed=True)


def _segment(name_a, a, name_b, b) -> Instance:
    g = build_plane_graph([(name_a, a), (name_b, b)], [(name_a, name_b)])
    return make_instance(g, [name_a, name_b])


def pairx():
    return _segment("k0", (-1, 0), "k1", (1, 0)), _segment("l0", (0, -1), "l1", (0, 1))


def pairpar():
    return _segment("k0", (0, 0), "k1", (1, 0)), _segment("l0", (0, 0), "l1", (1, 0))


def xsplit():
    g = xgraph()
    return make_instance(g, ["w", "c", "e"]), make_instance(g, ["n", "c", "s"])


_REGISTRY: Dict[str, Callable] = {
    "PATH3": lambda: make_instance(path3_graph(), ["u0", "u1", "u2", "u3"]),
    "BACKFORTH": lambda: make_instance(path3_graph_short(), ["u0", "u1", "u2", "u1", "u0"]),
    "STAR4": star4,
    "STARPASS": lambda: make_instance(starpass_graph(), ["w", "c", "e", "c", "s"]),
    "XGRAPH": xgraph,
    "XWALK": lambda: make_instance(xgraph(), ["w", "c", "e", "n", "c", "s"]),
    "TRIANGLE": triangle,
    "THETA": theta,
    "THETACYCLE": lambda: make_instance(theta(), ["a", "t", "b", "m"], closed=True),
    "NESTED8": nested_eight,
    "PAIRX": pairx,
    "PAIRPAR": pairpar,
    "XSPLIT": xsplit,
}


def path3_graph_short() -> PlaneGraph:
    return build_plane_graph([(f"u{i}", (i, 0)) for i in range(3)], [("u0", "u1"), ("u1", "u2")])


_PARAM = re.compile(r"^(C3WIND)\((-?\d+)\)$|^WIND\((\d+),\s*(-?\d+)\)$")


def fixture_names():
    return sorted(_REGISTRY) + ["C3WIND(d)", "WIND(n,d)"]


def fixture(name: str):
    """Look up a fixture: an Instance, a PlaneGraph, or a (K, L) pair of Instances."""
    key = name.strip().upper()
    if key in _REGISTRY:
        return _REGISTRY[key]()
    m = _PARAM.match(key)
    if m:
        if m.group(1):
            return c3wind(int(m.group(2)))
        n, d = int(m.group(3)), int(m.group(4))
        if n not in _POLYGONS:
            raise SemanticError(f"WIND supports cycle lengths {sorted(_POLYGONS)}")
        return winding(n, d)
    raise SemanticError(f"unknown fixture {name!r}")


def is_fixture(name: str) -> bool:
    try:
        fixture(name)
    except SemanticError:
        return False
    return True
