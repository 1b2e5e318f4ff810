"""Approximability of plane paths and cycles by embeddings.

Two independent deciders (iterated line-graph derivatives and the mod-2
van Kampen obstruction) plus a strip-system brute-force oracle and an
exact geometric push-off backend for cross-validation.
"""

from .derivative import (
    Decision,
    derive,
    decide_approximable,
    detect_transversal,
    detect_winding,
    check_euler_shortcut,
    winding_degree,
)
from .fixtures import fixture, fixture_names
from .ingest import RawPolyline, arrange_polyline, arrange_polylines, load, overlay_pair, parse_instance
from .obstruction import (
    crossing_parities,
    decide_by_obstruction,
    deleted_product,
    disjoinability_obstruction,
    obstruction_report,
    paint_black,
    van_kampen,
)
from .oracle import oracle_approximable, oracle_disjoinable
from .planegraph import (
    Instance,
    PlaneGraph,
    Walk,
    build_plane_graph,
    image_subgraph,
    make_instance,
    normalize_walk,
    rotation_from_coordinates,
    trace_faces,
)
from .pushoff import build_jittered_curve, check_genericity, geometric_parities, safe_jitter_bound

__version__ = "0.1.0"
