"""Canonical JSON documents for coverings (schema version 1).

Documents are integer-only with sorted keys and id-ordered arrays, so
serialization is byte-identical across runs and parse(serialize(c))
reproduces an equal covering.
"""

from __future__ import annotations

import json
from typing import Any

from .constructions import THEOREM_TAGS, Covering
from .graph_core import Orientation, disjoint_union
from .torus import make_torus
from .verify import CoveringReport, full_report

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """A covering document that cannot be accepted; names the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def covering_parameter(c: Covering) -> int:
    """The construction parameter n implied by a covering's shape."""
    if c.theorem == "T1":
        return c.codomain.p
    return c.codomain.p // 2


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def report_to_dict(report: CoveringReport) -> dict[str, Any]:
    return {
        "isHomomorphism": report.is_homomorphism,
        "isOntoEdges": report.is_onto_edges,
        "isEdgeBijective": report.is_edge_bijective,
        "rOnVertices": report.r_on_vertices,
        "orientationCompatible": report.orientation_compatible,
        "cycleRestrictionInjective": report.cycle_restriction_injective,
        "cycleImageHamiltonian": report.cycle_image_hamiltonian,
        "factorImagesAreSunlets": report.factor_images_are_sunlets,
        "failures": [
            {"check": v.check, "witness": _jsonable(v.witness), "note": v.note} for v in report.failures
        ],
    }


def covering_to_dict(c: Covering, include_report: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schemaVersion": SCHEMA_VERSION,
        "theorem": c.theorem,
        "n": covering_parameter(c),
        "domain": {"s": c.domain.s, "p": c.domain.p},
        "codomain": {"p": c.codomain.p, "q": c.codomain.q},
        "vertexMap": [list(c.codomain.coords(w)) for w in c.vertex_map],
        "domainArcs": [list(a) for a in c.domain_orientation.arcs],
        "codomainArcs": [list(a) for a in c.codomain_orientation.arcs],
    }
    if include_report:
        doc["report"] = report_to_dict(full_report(c))
    return doc


def to_json(c: Covering, include_report: bool = False) -> str:
    """Canonical document text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(covering_to_dict(c, include_report), sort_keys=True, indent=2) + "\n"


def _require(raw: dict, field: str, kind: type) -> Any:
    if field not in raw:
        raise DocumentError(field, "missing")
    value = raw[field]
    if kind is int and isinstance(value, bool):
        raise DocumentError(field, "expected an integer")
    if not isinstance(value, kind):
        raise DocumentError(field, f"expected {kind.__name__}")
    return value


def _int_pair(value: Any, field: str) -> tuple[int, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)
    ):
        raise DocumentError(field, "expected a pair of integers")
    return (value[0], value[1])


def _expected_shape(theorem: str, n: int) -> tuple[int, int, int]:
    """(s, sunlet p, grid side) implied by theorem and n."""
    if theorem == "T1":
        return (1, n * n, n)
    if theorem == "T2":
        return (n, 4 * n, 2 * n)
    return (n * n, 4, 2 * n)


def from_json(text: str) -> Covering:
    """Parse a covering document, validating shape and ranges field by field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"not valid JSON ({exc.msg} at position {exc.pos})") from None
    if not isinstance(raw, dict):
        raise DocumentError("document", "top level must be an object")

    version = _require(raw, "schemaVersion", int)
    if version != SCHEMA_VERSION:
        raise DocumentError("schemaVersion", f"unknown version {version}, expected {SCHEMA_VERSION}")

    theorem = _require(raw, "theorem", str)
    if theorem not in THEOREM_TAGS:
        raise DocumentError("theorem", f"unknown tag {theorem!r}")

    n = _require(raw, "n", int)
    domain_desc = _require(raw, "domain", dict)
    s = _require(domain_desc, "s", int)
    p_dom = _require(domain_desc, "p", int)
    codomain_desc = _require(raw, "codomain", dict)
    p_grid = _require(codomain_desc, "p", int)
    q_grid = _require(codomain_desc, "q", int)

    exp_s, exp_p, exp_side = _expected_shape(theorem, n)
    if (s, p_dom) != (exp_s, exp_p):
        raise DocumentError("domain", f"{theorem} with n={n} needs s={exp_s}, p={exp_p}; got s={s}, p={p_dom}")
    if (p_grid, q_grid) != (exp_side, exp_side):
        raise DocumentError("codomain", f"{theorem} with n={n} needs a {exp_side}x{exp_side} grid; got {p_grid}x{q_grid}")

    try:
        forest = disjoint_union(s, p_dom)
        grid = make_torus(p_grid, q_grid)
    except ValueError as exc:
        raise DocumentError("n", str(exc)) from None

    vmap_raw = _require(raw, "vertexMap", list)
    if len(vmap_raw) != forest.graph.order:
        raise DocumentError("vertexMap", f"expected {forest.graph.order} entries, got {len(vmap_raw)}")
    vmap: list[int] = []
    for i, entry in enumerate(vmap_raw):
        x, y = _int_pair(entry, f"vertexMap[{i}]")
        if not (0 <= x < p_grid and 0 <= y < q_grid):
            raise DocumentError(f"vertexMap[{i}]", f"coordinates ({x}, {y}) out of grid range")
        vmap.append(grid.vertex(x, y))

    def _orientation(field: str, base, order: int) -> Orientation:
        arcs_raw = _require(raw, field, list)
        arcs = []
        for i, entry in enumerate(arcs_raw):
            u, w = _int_pair(entry, f"{field}[{i}]")
            if not (0 <= u < order and 0 <= w < order):
                raise DocumentError(f"{field}[{i}]", f"arc ({u}, {w}) out of vertex range")
            arcs.append((u, w))
        try:
            return Orientation.build(base, arcs)
        except ValueError as exc:
            raise DocumentError(field, str(exc)) from None

    domain_orientation = _orientation("domainArcs", forest.graph, forest.graph.order)
    codomain_orientation = _orientation("codomainArcs", grid.graph, grid.graph.order)

    return Covering(
        domain=forest,
        codomain=grid,
        vertex_map=tuple(vmap),
        domain_orientation=domain_orientation,
        codomain_orientation=codomain_orientation,
        theorem=theorem,
    )


def partition_to_dict(classes: tuple[tuple[tuple[int, int], ...], ...]) -> dict[str, Any]:
    """JSON form of an edge partition (used by the decomposition oracle)."""
    return {"classes": [[list(e) for e in cls] for cls in classes]}


def report_json(report: CoveringReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "covering_parameter",
    "covering_to_dict",
    "from_json",
    "partition_to_dict",
    "report_json",
    "report_to_dict",
    "to_json",
]
