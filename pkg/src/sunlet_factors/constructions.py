"""Closed-form builders for the three sunlet-to-torus coverings.

Each builder returns a `Covering`: the vertex map from a sunlet forest onto
a torus grid together with the out-degree-1 orientation on the forest and
the matching orientation on the grid. The three constructions are

  T1  one sunlet whose cycle image is a spanning (Hamiltonian) cycle of
      the n x n grid under the standard orientation,
  T2  n sunlets whose cycle images are the disjoint closed staircases of
      the 2n x 2n grid under the standard orientation,
  T3  n^2 minimum bipartite sunlets whose cycle images are the odd squares
      of the 2n x 2n grid under the raster orientation.

In all three, the ray of the sunlet copy through a covered vertex w maps to
the unique inward arc at w that the cycle images leave free, which makes
the rays sweep up the leftover edges bijectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph_core import Orientation, SunletForest, disjoint_union, fsm_orient_forest, normalize_edge
from .torus import TorusGrid, make_torus, odd_squares, raster_orientation, standard_orientation

THEOREM_TAGS = ("T1", "T2", "T3")


@dataclass(frozen=True)
class Covering:
    """A vertex map from a sunlet forest onto a torus grid, plus orientations.

    The constructor only checks that the map is total and lands inside the
    grid; whether it actually is a homomorphism, covering, and so on is the
    verify module's job, so deliberately broken coverings can be built for
    mutation testing.
    """

    domain: SunletForest
    codomain: TorusGrid
    vertex_map: tuple[int, ...]
    domain_orientation: Orientation
    codomain_orientation: Orientation
    theorem: str

    def __post_init__(self) -> None:
        if self.theorem not in THEOREM_TAGS:
            raise ValueError(f"unknown theorem tag {self.theorem!r}")
        if len(self.vertex_map) != self.domain.graph.order:
            raise ValueError(
                f"vertex map has {len(self.vertex_map)} entries for a domain of order {self.domain.graph.order}"
            )
        for i, w in enumerate(self.vertex_map):
            if not 0 <= w < self.codomain.graph.order:
                raise ValueError(f"vertex map entry {i} -> {w} is outside the grid")

    def image_edge(self, u: int, w: int) -> tuple[int, int]:
        """Normalized image of a domain edge (may be degenerate if broken)."""
        return normalize_edge(self.vertex_map[u], self.vertex_map[w])


class TurnClass(Enum):
    """How the spanning cycle of the one-sunlet covering passes a vertex.

    HH: in and out both horizontal; HV: enters horizontally, leaves on a
    vertical edge; VH: enters vertically, leaves horizontally.
    """

    HH = "horizontal-horizontal"
    HV = "horizontal-vertical"
    VH = "vertical-horizontal"


def hamiltonian_position(k: int, n: int) -> tuple[int, int]:
    """Closed form for vertex k of the row-by-row spanning cycle of the n x n grid.

    Row x is entered at y = (n - x) mod n and walked n-1 steps in +y, then
    one vertical +x step drops to the next row; position k is
    (k // n, (k - k // n) mod n).
    """
    if n < 3:
        raise ValueError(f"spanning cycle needs n >= 3, got {n}")
    if not 0 <= k < n * n:
        raise ValueError(f"cycle position {k} out of range for n={n}")
    x = k // n
    return (x, (k - x) % n)


def turn_class(v: tuple[int, int], n: int) -> TurnClass:
    """Classify how the spanning cycle passes through grid vertex v.

    The cycle leaves (x, (n-1-x) mod n) vertically (HV) and arrives at
    (x, (n-x) mod n) vertically (VH); everywhere else both cycle edges are
    horizontal (HH).
    """
    x, y = v[0] % n, v[1] % n
    if y == (n - 1 - x) % n:
        return TurnClass.HV
    if y == (n - x) % n:
        return TurnClass.VH
    return TurnClass.HH


def hamiltonian_covering(n: int) -> Covering:
    """One sunlet on an n^2-cycle covering the n x n grid, 2-to-1.

    Cycle vertex k lands on `hamiltonian_position(k, n)`. The pendant at k
    lands one step back along the free inward edge: (x-1, y) at HH and HV
    vertices, (x, y-1) at VH vertices. Needs n >= 3; at n = 2 the free
    inward and outward edges would coincide.
    """
    if n < 3:
        raise ValueError(f"the one-sunlet covering needs n >= 3, got {n}")
    grid = make_torus(n, n)
    forest = disjoint_union(1, n * n)
    vmap = [0] * forest.graph.order
    for k in range(n * n):
        x, y = hamiltonian_position(k, n)
        vmap[k] = grid.vertex(x, y)
        if turn_class((x, y), n) is TurnClass.VH:
            vmap[forest.pendant_of(k)] = grid.vertex(x, y - 1)
        else:
            vmap[forest.pendant_of(k)] = grid.vertex(x - 1, y)
    return Covering(
        domain=forest,
        codomain=grid,
        vertex_map=tuple(vmap),
        domain_orientation=fsm_orient_forest(forest, "forward"),
        codomain_orientation=standard_orientation(grid),
        theorem="T1",
    )


def staircase_cycle(i: int, n: int) -> list[tuple[int, int]]:
    """Vertex sequence of closed staircase i in the 2n x 2n grid.

    Staircase i starts at (2i, 0) and alternates +x and +y single steps;
    entry j is ((2i + ceil(j/2)) mod 2n, floor(j/2)) for 0 <= j < 4n. The
    n staircases are pairwise disjoint and cover every vertex.
    """
    if n < 2:
        raise ValueError(f"staircases need n >= 2, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"staircase index {i} out of range for n={n}")
    m = 2 * n
    return [((2 * i + (j + 1) // 2) % m, j // 2) for j in range(4 * n)]


def staircase_covering(n: int) -> Covering:
    """n sunlets on 4n-cycles covering the 2n x 2n grid, 2-to-1.

    Copy i's cycle is mapped isomorphically onto staircase i. At each
    covered vertex w the staircase through w uses exactly one of the two
    standard inward arcs; the pendant of the cycle vertex over w lands on
    the tail of the other one, which always lies on a different staircase.
    """
    if n < 2:
        raise ValueError(f"the staircase covering needs n >= 2, got {n}")
    grid = make_torus(2 * n, 2 * n)
    forest = disjoint_union(n, 4 * n)
    vmap = [0] * forest.graph.order
    for i in range(n):
        seq = staircase_cycle(i, n)
        for j, (x, y) in enumerate(seq):
            cv = forest.cycle_vertex(i, j)
            vmap[cv] = grid.vertex(x, y)
            # The two standard in-arcs at (x, y) come from (x-1, y) and
            # (x, y-1); the staircase enters from seq[j-1].
            prev = grid.vertex(*seq[j - 1])
            free = {grid.vertex(x - 1, y), grid.vertex(x, y - 1)} - {prev}
            vmap[forest.pendant_of(cv)] = free.pop()
    return Covering(
        domain=forest,
        codomain=grid,
        vertex_map=tuple(vmap),
        domain_orientation=fsm_orient_forest(forest, "forward"),
        codomain_orientation=standard_orientation(grid),
        theorem="T2",
    )


def odd_square_covering(n: int) -> Covering:
    """n^2 sunlets on 4-cycles covering the 2n x 2n grid, 2-to-1.

    Copy i*n + j maps its cycle onto odd square (i, j) in raster dicycle
    order. At each corner w the square supplies one of the two raster
    inward arcs; the pendant over w lands on the tail of the other one,
    a quarter turn from the square's own inward edge.
    """
    if n < 2:
        raise ValueError(f"the odd-square covering needs n >= 2, got {n}")
    grid = make_torus(2 * n, 2 * n)
    forest = disjoint_union(n * n, 4)
    raster = raster_orientation(grid)
    vmap = [0] * forest.graph.order
    for idx, square in enumerate(odd_squares(grid)):
        corners = square.corners
        for pos in range(4):
            w = corners[pos]
            cv = forest.cycle_vertex(idx, pos)
            vmap[cv] = w
            square_prev = corners[(pos - 1) % 4]
            free = [u for u in raster.in_neighbors(w) if u != square_prev]
            if len(free) != 1:
                raise AssertionError(f"expected one free inward arc at grid vertex {w}, found {len(free)}")
            vmap[forest.pendant_of(cv)] = free[0]
    return Covering(
        domain=forest,
        codomain=grid,
        vertex_map=tuple(vmap),
        domain_orientation=fsm_orient_forest(forest, "forward"),
        codomain_orientation=raster,
        theorem="T3",
    )


COVERING_BUILDERS = {
    1: hamiltonian_covering,
    2: staircase_covering,
    3: odd_square_covering,
}
