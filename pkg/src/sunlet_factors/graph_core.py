"""Simple undirected graphs, orientations, and the cycle/sunlet constructors.

Everything here is immutable after construction, so values can be shared
freely between concurrent checkers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal

Edge = tuple[int, int]
Arc = tuple[int, int]

CycleSense = Literal["forward", "reverse"]


def normalize_edge(u: int, v: int) -> Edge:
    """Canonical (small, large) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..order-1.

    Edges are stored as (u, v) pairs with u < v; no loops, no parallel
    edges, and every endpoint id must be below `order`.
    """

    order: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.order):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.order - 1} or is unnormalized")

    @staticmethod
    def build(order: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing endpoint order and dropping duplicates."""
        return Graph(order, frozenset(normalize_edge(u, v) for u, v in pairs))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.order
        out: list[list[int]] = []
        for start in range(self.order):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.components()) == 1


def graph_from_edges(pairs: Iterable[tuple[int, int]]) -> Graph:
    """Graph on exactly the endpoints of `pairs`, relabeled densely.

    Vertices keep their relative order: the smallest original id becomes 0.
    Useful for recognizing the image subgraph of one sunlet copy inside a
    larger host graph.
    """
    edges = [normalize_edge(u, v) for u, v in pairs]
    vertices = sorted({w for e in edges for w in e})
    index = {w: i for i, w in enumerate(vertices)}
    return Graph.build(len(vertices), ((index[u], index[v]) for u, v in edges))


def empty_graph(n: int) -> Graph:
    """n isolated vertices (the edgeless graph)."""
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    return Graph(n, frozenset())


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of `base`.

    `arcs` holds exactly one ordered pair per base edge, sorted for
    deterministic equality and export.
    """

    base: Graph
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))
        seen: set[Edge] = set()
        for u, w in self.arcs:
            e = normalize_edge(u, w)
            if e not in self.base.edges:
                raise ValueError(f"arc ({u}, {w}) does not direct an edge of the base graph")
            if e in seen:
                raise ValueError(f"edge {e} is directed twice")
            seen.add(e)
        if len(self.arcs) != self.base.size:
            missing = self.base.size - len(self.arcs)
            raise ValueError(f"{missing} edge(s) left undirected")

    @staticmethod
    def build(base: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        return Orientation(base, tuple(arcs))

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def _arc_by_edge(self) -> dict[Edge, Arc]:
        return {normalize_edge(u, w): (u, w) for u, w in self.arcs}

    def arc_over(self, u: int, v: int) -> Arc:
        """The ordered pair directing edge {u, v}."""
        try:
            return self._arc_by_edge[normalize_edge(u, v)]
        except KeyError:
            raise ValueError(f"{{{u}, {v}}} is not an edge of the base graph") from None

    def has_arc(self, u: int, w: int) -> bool:
        return (u, w) in self.arc_set

    @cached_property
    def _out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        outs: list[list[int]] = [[] for _ in range(self.base.order)]
        for u, w in self.arcs:
            outs[u].append(w)
        return tuple(tuple(sorted(a)) for a in outs)

    @cached_property
    def _in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        ins: list[list[int]] = [[] for _ in range(self.base.order)]
        for u, w in self.arcs:
            ins[w].append(u)
        return tuple(tuple(sorted(a)) for a in ins)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out_neighbors[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in_neighbors[v]

    def out_degree(self, v: int) -> int:
        return len(self._out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self._in_neighbors[v])


# ------------------------- constructors -------------------------


def make_cycle(p: int) -> Graph:
    """The cycle on p vertices with edges {i, i+1 mod p}; needs p >= 3."""
    if p < 3:
        raise ValueError(f"cycle length must be at least 3, got {p}")
    return Graph.build(p, ((i, (i + 1) % p) for i in range(p)))


@dataclass(frozen=True)
class Sunlet:
    """A p-cycle with one pendant edge hanging from each cycle vertex.

    Cycle vertices are 0..p-1 in cycle order; pendant p+i is attached to
    cycle vertex i. The graph has 2p vertices and 2p edges.
    """

    p: int
    graph: Graph

    @property
    def cycle_vertices(self) -> range:
        return range(self.p)

    @property
    def pendant_vertices(self) -> range:
        return range(self.p, 2 * self.p)

    def pendant_of(self, cycle_vertex: int) -> int:
        return self.p + cycle_vertex


def make_sunlet(p: int) -> Sunlet:
    """Sunlet on a p-cycle; needs p >= 3."""
    if p < 3:
        raise ValueError(f"sunlet cycle length must be at least 3, got {p}")
    cycle = [(i, (i + 1) % p) for i in range(p)]
    rays = [(i, p + i) for i in range(p)]
    return Sunlet(p, Graph.build(2 * p, cycle + rays))


@dataclass(frozen=True)
class SunletForest:
    """s disjoint labeled sunlet copies, each on a p-cycle.

    Copy i occupies the id block [i*2p, (i+1)*2p); inside a block the
    layout matches `make_sunlet`, so copy and role lookups are arithmetic.
    """

    s: int
    p: int
    graph: Graph

    @property
    def block(self) -> int:
        return 2 * self.p

    def copy_of(self, v: int) -> int:
        return v // self.block

    def role_of(self, v: int) -> tuple[str, int]:
        """("cycle", position) or ("pendant", position) inside v's copy."""
        local = v % self.block
        if local < self.p:
            return ("cycle", local)
        return ("pendant", local - self.p)

    def cycle_vertex(self, copy: int, pos: int) -> int:
        return copy * self.block + pos

    def pendant_of(self, cycle_vertex: int) -> int:
        """The pendant vertex attached to a given cycle vertex id."""
        return cycle_vertex + self.p

    def cycle_vertices(self) -> Iterator[int]:
        for copy in range(self.s):
            base = copy * self.block
            yield from range(base, base + self.p)

    def is_cycle_vertex(self, v: int) -> bool:
        return v % self.block < self.p


def disjoint_union(s: int, p: int) -> SunletForest:
    """s disjoint copies of the sunlet on a p-cycle; s >= 1, p >= 3."""
    if s < 1:
        raise ValueError(f"need at least one copy, got {s}")
    if p < 3:
        raise ValueError(f"sunlet cycle length must be at least 3, got {p}")
    block = 2 * p
    edges: list[tuple[int, int]] = []
    for copy in range(s):
        base = copy * block
        edges.extend((base + i, base + (i + 1) % p) for i in range(p))
        edges.extend((base + i, base + p + i) for i in range(p))
    return SunletForest(s, p, Graph.build(s * block, edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian (box) product; pair (a, x) gets id a * h.order + x.

    (a, x) ~ (b, y) exactly when one coordinate is equal and the other
    pair is adjacent in its factor.
    """
    if g.order == 0 or h.order == 0:
        raise ValueError("product factors must be nonempty")
    edges: list[tuple[int, int]] = []
    for a in range(g.order):
        base = a * h.order
        edges.extend((base + x, base + y) for x, y in h.edges)
    for a, b in g.edges:
        edges.extend((a * h.order + x, b * h.order + x) for x in range(h.order))
    return Graph.build(g.order * h.order, edges)


def _fsm_arcs(p: int, base: int, sense: CycleSense) -> list[Arc]:
    if sense == "forward":
        arcs = [(base + i, base + (i + 1) % p) for i in range(p)]
    elif sense == "reverse":
        arcs = [(base + (i + 1) % p, base + i) for i in range(p)]
    else:
        raise ValueError(f"unknown cycle sense {sense!r}")
    arcs.extend((base + p + i, base + i) for i in range(p))
    return arcs


def fsm_orient(s: Sunlet, sense: CycleSense = "forward") -> Orientation:
    """Out-degree-1 orientation of a sunlet.

    The cycle becomes a directed cycle in the chosen sense and every ray
    points from its pendant toward the cycle, so each vertex has exactly
    one outgoing arc. Sunlets admit exactly these two such orientations.
    """
    return Orientation.build(s.graph, _fsm_arcs(s.p, 0, sense))


def fsm_orient_forest(f: SunletForest, sense: CycleSense = "forward") -> Orientation:
    """The out-degree-1 orientation applied to every copy of a forest."""
    arcs: list[Arc] = []
    for copy in range(f.s):
        arcs.extend(_fsm_arcs(f.p, copy * f.block, sense))
    return Orientation.build(f.graph, arcs)


def is_sunlet(g: Graph) -> int | None:
    """Return p when g is exactly a sunlet on a p-cycle, else None.

    Accepts: connected, 2p vertices and 2p edges, p vertices of degree 3
    spanning a single p-cycle, p vertices of degree 1.
    """
    if g.order < 6 or g.order % 2:
        return None
    p = g.order // 2
    if g.size != 2 * p:
        return None
    cubic = [v for v in range(g.order) if g.degree(v) == 3]
    leaves = [v for v in range(g.order) if g.degree(v) == 1]
    if len(cubic) != p or len(leaves) != p:
        return None
    if not g.is_connected():
        return None
    # The induced graph on cubic vertices must be 2-regular; together with
    # connectivity that forces a single p-cycle through them.
    cubic_set = set(cubic)
    for v in cubic:
        if sum(1 for w in g.adjacency[v] if w in cubic_set) != 2:
            return None
    return p
