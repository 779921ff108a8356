"""Toroidal grids with an (x, y) coordinate system and their orientations.

Coordinate conventions used throughout:

  - A torus grid is the product of an x-cycle of length p and a y-cycle of
    length q. In the annular drawing, x indexes the rings (innermost ring
    is x = 0) and y is the position around a ring.
  - Edges along a ring (endpoints share x) are HORIZONTAL; edges between
    consecutive rings (endpoints share y) are VERTICAL.
  - Vertex (x, y) has id x * q + y; both coordinates reduce modulo their
    cycle length.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph_core import Arc, Edge, Graph, Orientation, cartesian_product, make_cycle, normalize_edge


class EdgeClass(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class TorusGrid:
    """The product of an x-cycle of length p and a y-cycle of length q."""

    p: int
    q: int
    graph: Graph

    def vertex(self, x: int, y: int) -> int:
        return (x % self.p) * self.q + (y % self.q)

    def coords(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.graph.order:
            raise ValueError(f"vertex id {v} out of range for a {self.p}x{self.q} grid")
        return divmod(v, self.q)


def make_torus(p: int, q: int) -> TorusGrid:
    """Torus grid on p * q vertices; both cycle lengths must be >= 3."""
    return TorusGrid(p, q, cartesian_product(make_cycle(p), make_cycle(q)))


def edge_class(t: TorusGrid, e: Edge) -> EdgeClass:
    """HORIZONTAL when the endpoints share x, VERTICAL when they share y."""
    u, v = e
    if not t.graph.has_edge(u, v):
        raise ValueError(f"{{{u}, {v}}} is not an edge of the {t.p}x{t.q} grid")
    (xu, yu), (xv, yv) = t.coords(u), t.coords(v)
    if xu == xv:
        return EdgeClass.HORIZONTAL
    if yu == yv:
        return EdgeClass.VERTICAL
    raise AssertionError("grid edge differs in both coordinates")


def standard_orientation(t: TorusGrid) -> Orientation:
    """Every edge directed toward increasing x or increasing y (mod p, q).

    Gives each vertex out-degree 2 and in-degree 2.
    """
    arcs: list[Arc] = []
    for x in range(t.p):
        for y in range(t.q):
            arcs.append((t.vertex(x, y), t.vertex(x + 1, y)))
            arcs.append((t.vertex(x, y), t.vertex(x, y + 1)))
    return Orientation.build(t.graph, arcs)


@dataclass(frozen=True)
class CanonicalOrientation:
    """One of the four sign-choice orientations, with its reflection witness.

    `witness[v]` is the image of v under the coordinate reflection that
    carries this orientation's arcs onto the standard orientation's arcs.
    """

    signs: tuple[int, int]
    orientation: Orientation
    witness: tuple[int, ...]


def canonical_orientations(t: TorusGrid) -> tuple[CanonicalOrientation, ...]:
    """The four orientations (+-x, +-y), each with an explicit witness.

    Sign +1 directs that coordinate increasing, -1 decreasing. The witness
    negates exactly the reflected coordinates, and maps arcs of its
    orientation onto arcs of the standard one, so all four are isomorphic
    digraphs.
    """
    out: list[CanonicalOrientation] = []
    for sx in (1, -1):
        for sy in (1, -1):
            arcs: list[Arc] = []
            for x in range(t.p):
                for y in range(t.q):
                    a, b = t.vertex(x, y), t.vertex(x + 1, y)
                    arcs.append((a, b) if sx == 1 else (b, a))
                    c, d = t.vertex(x, y), t.vertex(x, y + 1)
                    arcs.append((c, d) if sy == 1 else (d, c))
            witness: list[int] = []
            for v in range(t.graph.order):
                x, y = t.coords(v)
                witness.append(t.vertex(sx * x, sy * y))
            out.append(CanonicalOrientation((sx, sy), Orientation.build(t.graph, arcs), tuple(witness)))
    return tuple(out)


def raster_orientation(t: TorusGrid) -> Orientation:
    """Alternate row and column directions by coordinate parity.

    Row x (the horizontal edges at fixed x) is directed +y when x is odd
    and -y when x is even; column y (the vertical edges at fixed y) is
    directed -x when y is odd and +x when y is even. Both cycle lengths
    must be even so the parities are well defined around the wrap. Under
    this convention every odd square becomes a directed 4-cycle and every
    vertex has out-degree 2 and in-degree 2.
    """
    if t.p % 2 or t.q % 2:
        raise ValueError(f"raster orientation needs even cycle lengths, got {t.p}x{t.q}")
    arcs: list[Arc] = []
    for x in range(t.p):
        for y in range(t.q):
            a, b = t.vertex(x, y), t.vertex(x, y + 1)
            arcs.append((a, b) if x % 2 == 1 else (b, a))
            c, d = t.vertex(x, y), t.vertex(x + 1, y)
            arcs.append((d, c) if y % 2 == 1 else (c, d))
    return Orientation.build(t.graph, arcs)


@dataclass(frozen=True)
class OddSquare:
    """One of the n^2 disjoint 4-cycles spanned by odd-indexed edges.

    `corners` lists the 4 vertex ids in raster dicycle order, rotated so
    the lexicographically smallest coordinate pair comes first.
    """

    block: tuple[int, int]
    corners: tuple[int, int, int, int]


def odd_squares(t: TorusGrid) -> list[OddSquare]:
    """The n^2 odd squares of a 2n x 2n grid, in block (i, j) order.

    Edge k of a cycle of even length joins k and k+1; the odd-indexed
    edges are those joining 2i+1 and 2i+2. Squaring that choice in both
    factors gives corner sets {2i+1, 2i+2} x {2j+1, 2j+2} (mod 2n), which
    partition the vertex set.
    """
    if t.p != t.q:
        raise ValueError(f"odd squares need a square grid, got {t.p}x{t.q}")
    if t.p % 2:
        raise ValueError(f"odd squares need an even cycle length, got {t.p}")
    n = t.p // 2
    if n < 2:
        raise ValueError(f"odd squares need side at least 4, got {t.p}")
    m = 2 * n
    out: list[OddSquare] = []
    for i in range(n):
        for j in range(n):
            x0, x1 = (2 * i + 1) % m, (2 * i + 2) % m
            y0, y1 = (2 * j + 1) % m, (2 * j + 2) % m
            # Raster dicycle order around the square.
            ring = [(x0, y0), (x0, y1), (x1, y1), (x1, y0)]
            k = min(range(4), key=lambda idx: ring[idx])
            ordered = ring[k:] + ring[:k]
            out.append(OddSquare((i, j), tuple(t.vertex(x, y) for x, y in ordered)))
    return out


def wraps_around(t: TorusGrid, e: Edge) -> bool:
    """True when drawing e on the flat unrolled grid crosses the boundary."""
    (xu, yu), (xv, yv) = t.coords(e[0]), t.coords(e[1])
    if edge_class(t, normalize_edge(*e)) is EdgeClass.VERTICAL:
        return abs(xu - xv) == t.p - 1
    return abs(yu - yv) == t.q - 1
