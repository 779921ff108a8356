"""Definition-level checkers for coverings.

Every check recomputes its verdict from the definitions (adjacency, arcs,
fibers) without assuming anything about how the covering was built, so the
suite doubles as an independent oracle for the construction module. A false
flag always carries at least one concrete counterexample.

The low-level helpers take raw graphs and vertex maps so that arbitrary
homomorphisms (identity maps, truncated domains) can be checked; the
`check_*` functions are the covering-level interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .constructions import Covering
from .graph_core import Graph, Orientation, graph_from_edges, is_sunlet, normalize_edge

DEFAULT_COUNTEREXAMPLE_LIMIT = 10


@dataclass(frozen=True)
class Violation:
    """One concrete counterexample: which check failed and on what."""

    check: str
    witness: tuple
    note: str = ""


def _capped(items: list[Violation], limit: int | None) -> bool:
    return limit is not None and len(items) >= limit


# ------------------------- low-level checks -------------------------


def homomorphism_violations(
    domain: Graph, codomain: Graph, vertex_map: Sequence[int], limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT
) -> list[Violation]:
    """Domain edges whose image is not a codomain edge."""
    bad: list[Violation] = []
    for u, w in sorted(domain.edges):
        a, b = vertex_map[u], vertex_map[w]
        if a == b or not codomain.has_edge(a, b):
            bad.append(Violation("homomorphism", ((u, w), (a, b)), "edge image is not a codomain edge"))
            if _capped(bad, limit):
                break
    return bad


def edge_preimages(domain: Graph, codomain: Graph, vertex_map: Sequence[int]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Codomain edge -> sorted list of domain edges mapping onto it."""
    pre: dict[tuple[int, int], list[tuple[int, int]]] = {e: [] for e in codomain.edges}
    for u, w in sorted(domain.edges):
        a, b = vertex_map[u], vertex_map[w]
        if a != b and codomain.has_edge(a, b):
            pre[normalize_edge(a, b)].append((u, w))
    return pre


def covering_violations(
    domain: Graph, codomain: Graph, vertex_map: Sequence[int], limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT
) -> tuple[bool, bool, list[Violation]]:
    """(onto edges, edge bijective, counterexamples) for the induced edge map."""
    pre = edge_preimages(domain, codomain, vertex_map)
    onto = True
    bijective = True
    bad: list[Violation] = []
    for e in sorted(pre):
        hits = pre[e]
        if not hits:
            onto = False
            bad.append(Violation("onto-edges", (e,), "codomain edge has no preimage"))
        elif len(hits) > 1:
            bijective = False
            bad.append(Violation("edge-bijective", (e, hits[0], hits[1]), "codomain edge hit more than once"))
        if _capped(bad, limit):
            break
    return onto, bijective, bad


def fiber_sizes(codomain_order: int, vertex_map: Sequence[int]) -> list[int]:
    sizes = [0] * codomain_order
    for w in vertex_map:
        sizes[w] += 1
    return sizes


def r_to_1_violations(
    codomain_order: int, vertex_map: Sequence[int], limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT
) -> tuple[int | None, list[Violation]]:
    """The common fiber size r, or None plus witnesses of unequal fibers."""
    sizes = fiber_sizes(codomain_order, vertex_map)
    r = sizes[0] if sizes else 0
    bad: list[Violation] = []
    for v, size in enumerate(sizes):
        if size != r:
            bad.append(Violation("r-to-1", (0, r, v, size), "fibers of unequal size"))
            if _capped(bad, limit):
                break
    return (r, []) if not bad else (None, bad)


def orientation_violations(
    domain_orientation: Orientation,
    codomain_orientation: Orientation,
    vertex_map: Sequence[int],
    limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT,
) -> list[Violation]:
    """Domain arcs whose ordered image is not a codomain arc."""
    bad: list[Violation] = []
    for u, w in domain_orientation.arcs:
        a, b = vertex_map[u], vertex_map[w]
        if not codomain_orientation.has_arc(a, b):
            bad.append(Violation("orientation-compatible", ((u, w), (a, b)), "arc image is not a codomain arc"))
            if _capped(bad, limit):
                break
    return bad


def injectivity_violations(
    vertices: Sequence[int], vertex_map: Sequence[int], limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT
) -> list[Violation]:
    """Pairs of listed vertices sharing an image."""
    seen: dict[int, int] = {}
    bad: list[Violation] = []
    for v in vertices:
        w = vertex_map[v]
        if w in seen:
            bad.append(Violation("cycle-injective", (seen[w], v, w), "two cycle vertices share an image"))
            if _capped(bad, limit):
                break
        else:
            seen[w] = v
    return bad


# ------------------------- covering-level checks -------------------------


def check_homomorphism(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> tuple[bool, list[Violation]]:
    bad = homomorphism_violations(c.domain.graph, c.codomain.graph, c.vertex_map, limit)
    return (not bad, bad)


def check_covering(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> tuple[bool, bool, list[Violation]]:
    """(onto edges, edge bijective, counterexamples)."""
    return covering_violations(c.domain.graph, c.codomain.graph, c.vertex_map, limit)


def check_r_to_1(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> tuple[int | None, list[Violation]]:
    return r_to_1_violations(c.codomain.graph.order, c.vertex_map, limit)


def check_orientation_compatible(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> tuple[bool, list[Violation]]:
    bad = orientation_violations(c.domain_orientation, c.codomain_orientation, c.vertex_map, limit)
    return (not bad, bad)


def check_cycle_restriction(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> tuple[bool, bool, list[Violation]]:
    """(injective on all cycle vertices, cycle image is a Hamiltonian cycle).

    The Hamiltonian flag can only hold for a single-copy domain: it asks
    for one cycle visiting every codomain vertex.
    """
    cycle_vertices = list(c.domain.cycle_vertices())
    bad = injectivity_violations(cycle_vertices, c.vertex_map, limit)
    injective = not bad
    image = {c.vertex_map[v] for v in cycle_vertices}
    spanning = len(image) == c.codomain.graph.order
    hamiltonian = injective and spanning and c.domain.s == 1
    if injective and c.domain.s == 1 and not spanning:
        missing = min(set(range(c.codomain.graph.order)) - image)
        bad = bad + [Violation("cycle-hamiltonian", (missing,), "codomain vertex missed by the cycle image")]
    return injective, hamiltonian, bad


@dataclass(frozen=True)
class FactorizationResult:
    """Per-copy image edge sets and whether they partition the codomain."""

    edge_sets: tuple[tuple[tuple[int, int], ...], ...]
    is_partition: bool
    sunlet_orders: tuple[int | None, ...] | None
    violations: tuple[Violation, ...]


def induced_factorization(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> FactorizationResult:
    """Image edge sets per copy; partition flag; sunlet recognition when s > 1."""
    per_copy: list[set[tuple[int, int]]] = [set() for _ in range(c.domain.s)]
    for u, w in sorted(c.domain.graph.edges):
        a, b = c.vertex_map[u], c.vertex_map[w]
        if a != b and c.codomain.graph.has_edge(a, b):
            per_copy[c.domain.copy_of(u)].add(normalize_edge(a, b))

    bad: list[Violation] = []
    counts: dict[tuple[int, int], int] = {e: 0 for e in c.codomain.graph.edges}
    for copy, edges in enumerate(per_copy):
        for e in edges:
            counts[e] += 1
    for e in sorted(counts):
        k = counts[e]
        if k != 1 and not _capped(bad, limit):
            note = "codomain edge in no copy image" if k == 0 else "codomain edge in several copy images"
            bad.append(Violation("edge-partition", (e, k), note))
    is_partition = all(k == 1 for k in counts.values())

    sunlet_orders: tuple[int | None, ...] | None = None
    if c.domain.s > 1:
        orders = []
        for copy, edges in enumerate(per_copy):
            p = is_sunlet(graph_from_edges(edges)) if edges else None
            orders.append(p)
            if p is None and not _capped(bad, limit):
                bad.append(Violation("factor-sunlet", (copy,), "copy image is not a sunlet"))
        sunlet_orders = tuple(orders)

    return FactorizationResult(
        edge_sets=tuple(tuple(sorted(edges)) for edges in per_copy),
        is_partition=is_partition,
        sunlet_orders=sunlet_orders,
        violations=tuple(bad),
    )


@dataclass(frozen=True)
class CoveringReport:
    """Aggregated verdict; `None` marks a flag that does not apply.

    `cycle_image_hamiltonian` applies only to single-copy domains and
    `factor_images_are_sunlets` only to multi-copy ones.
    """

    is_homomorphism: bool
    is_onto_edges: bool
    is_edge_bijective: bool
    r_on_vertices: int | None
    orientation_compatible: bool
    cycle_restriction_injective: bool
    cycle_image_hamiltonian: bool | None
    factor_images_are_sunlets: bool | None
    failures: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        """True when every applicable flag holds and fibers are uniform."""
        flags = [
            self.is_homomorphism,
            self.is_onto_edges,
            self.is_edge_bijective,
            self.r_on_vertices is not None,
            self.orientation_compatible,
            self.cycle_restriction_injective,
        ]
        if self.cycle_image_hamiltonian is not None:
            flags.append(self.cycle_image_hamiltonian)
        if self.factor_images_are_sunlets is not None:
            flags.append(self.factor_images_are_sunlets)
        return all(flags)


def full_report(c: Covering, limit: int | None = DEFAULT_COUNTEREXAMPLE_LIMIT) -> CoveringReport:
    """Run every checker against a covering and collect the verdicts."""
    failures: list[Violation] = []

    is_hom, bad = check_homomorphism(c, limit)
    failures.extend(bad)

    onto, bijective, bad = check_covering(c, limit)
    failures.extend(bad)

    r, bad = check_r_to_1(c, limit)
    failures.extend(bad)

    compatible, bad = check_orientation_compatible(c, limit)
    failures.extend(bad)

    injective, hamiltonian, bad = check_cycle_restriction(c, limit)
    failures.extend(bad)

    factorization = induced_factorization(c, limit)
    # Partition violations restate onto/bijective failures; keep only the
    # sunlet-recognition ones here.
    failures.extend(v for v in factorization.violations if v.check == "factor-sunlet")

    single = c.domain.s == 1
    sunlets_ok: bool | None
    if single:
        sunlets_ok = None
    else:
        orders = factorization.sunlet_orders or ()
        sunlets_ok = all(p == c.domain.p for p in orders)

    return CoveringReport(
        is_homomorphism=is_hom,
        is_onto_edges=onto,
        is_edge_bijective=bijective,
        r_on_vertices=r,
        orientation_compatible=compatible,
        cycle_restriction_injective=injective,
        cycle_image_hamiltonian=hamiltonian if single else None,
        factor_images_are_sunlets=sunlets_ok,
        failures=tuple(failures),
    )
