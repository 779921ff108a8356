"""Sunlet factorizations of toroidal grid graphs.

Builds the three coverings of C_p [box] C_q grids by disjoint sunlet
forests (one sunlet, n sunlets over staircases, n^2 sunlets over odd
squares), verifies every claimed property with independent checkers and
brute-force oracles, and renders the results as DOT or SVG figures.
"""

from .constructions import (
    COVERING_BUILDERS,
    THEOREM_TAGS,
    Covering,
    TurnClass,
    hamiltonian_covering,
    hamiltonian_position,
    odd_square_covering,
    staircase_covering,
    staircase_cycle,
    turn_class,
)
from .graph_core import (
    Graph,
    Orientation,
    Sunlet,
    SunletForest,
    cartesian_product,
    disjoint_union,
    empty_graph,
    fsm_orient,
    fsm_orient_forest,
    graph_from_edges,
    is_sunlet,
    make_cycle,
    make_sunlet,
    normalize_edge,
)
from .oracle import (
    DecompositionSolution,
    check_staircase_tiling,
    enumerate_fsm_orientations,
    hamiltonian_row_walk,
    sunlet_edge_partitions,
    walked_staircase,
)
from .render import default_palette, to_dot, to_svg
from .serialize import SCHEMA_VERSION, DocumentError, from_json, to_json
from .torus import (
    CanonicalOrientation,
    EdgeClass,
    OddSquare,
    TorusGrid,
    canonical_orientations,
    edge_class,
    make_torus,
    odd_squares,
    raster_orientation,
    standard_orientation,
)
from .verify import (
    CoveringReport,
    FactorizationResult,
    Violation,
    check_covering,
    check_cycle_restriction,
    check_homomorphism,
    check_orientation_compatible,
    check_r_to_1,
    full_report,
    induced_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "COVERING_BUILDERS",
    "CanonicalOrientation",
    "Covering",
    "CoveringReport",
    "DecompositionSolution",
    "DocumentError",
    "EdgeClass",
    "FactorizationResult",
    "Graph",
    "OddSquare",
    "Orientation",
    "SCHEMA_VERSION",
    "Sunlet",
    "SunletForest",
    "THEOREM_TAGS",
    "TorusGrid",
    "TurnClass",
    "Violation",
    "canonical_orientations",
    "cartesian_product",
    "check_covering",
    "check_cycle_restriction",
    "check_homomorphism",
    "check_orientation_compatible",
    "check_r_to_1",
    "check_staircase_tiling",
    "default_palette",
    "disjoint_union",
    "edge_class",
    "empty_graph",
    "enumerate_fsm_orientations",
    "from_json",
    "fsm_orient",
    "fsm_orient_forest",
    "full_report",
    "graph_from_edges",
    "hamiltonian_covering",
    "hamiltonian_position",
    "hamiltonian_row_walk",
    "induced_factorization",
    "is_sunlet",
    "make_cycle",
    "make_sunlet",
    "make_torus",
    "normalize_edge",
    "odd_square_covering",
    "odd_squares",
    "raster_orientation",
    "staircase_covering",
    "staircase_cycle",
    "standard_orientation",
    "sunlet_edge_partitions",
    "to_dot",
    "to_json",
    "to_svg",
    "turn_class",
    "walked_staircase",
]
