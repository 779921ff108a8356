"""Brute-force and literal-expansion oracles.

These recompute, by direct walking or exhaustive search, the objects the
construction module produces in closed form. They share no code path with
the builders beyond the basic graph types, so agreement is meaningful
evidence. All sizes are desk scale; the enumeration bounds keep worst
cases in the seconds range and are configurable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Arc, Graph, graph_from_edges, is_sunlet
from .torus import TorusGrid

FSM_ENUMERATION_EDGE_BOUND = 24
PARTITION_SEARCH_EDGE_BOUND = 40


def hamiltonian_row_walk(n: int) -> list[tuple[int, int]]:
    """Expand the spanning cycle of the n x n grid by literally walking it.

    From (0, 0): walk n-1 single +y steps along the current row, then one
    +x step down to the next row, n rows in all. Serves as the independent
    cross-check for `hamiltonian_position`.
    """
    if n < 3:
        raise ValueError(f"spanning cycle needs n >= 3, got {n}")
    seq: list[tuple[int, int]] = []
    x, y = 0, 0
    for _ in range(n):
        seq.append((x, y))
        for _ in range(n - 1):
            y = (y + 1) % n
            seq.append((x, y))
        x += 1
    return seq


def walked_staircase(i: int, n: int) -> list[tuple[int, int]]:
    """Expand staircase i of the 2n x 2n grid by literally walking it.

    From (2i, 0): alternate single +x and +y steps, 4n vertices in all.
    """
    if n < 2:
        raise ValueError(f"staircases need n >= 2, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"staircase index {i} out of range for n={n}")
    m = 2 * n
    x, y = (2 * i) % m, 0
    seq = [(x, y)]
    for step in range(4 * n - 1):
        if step % 2 == 0:
            x = (x + 1) % m
        else:
            y = (y + 1) % m
        seq.append((x, y))
    return seq


def check_staircase_tiling(n: int) -> bool:
    """Walked staircases are pairwise disjoint, cover all 4n^2 vertices,
    and agree entrywise with the closed form."""
    from .constructions import staircase_cycle

    seen: set[tuple[int, int]] = set()
    for i in range(n):
        walked = walked_staircase(i, n)
        if walked != staircase_cycle(i, n):
            return False
        for v in walked:
            if v in seen:
                return False
            seen.add(v)
    return len(seen) == 4 * n * n


def enumerate_fsm_orientations(g: Graph, max_edges: int = FSM_ENUMERATION_EDGE_BOUND) -> tuple[int, list[tuple[Arc, ...]]]:
    """Count (and list) orientations of g with out-degree exactly 1 everywhere.

    Backtracks over the 2^|E| edge directions, pruning as soon as a vertex
    exceeds out-degree 1 or runs out of incident edges while still at 0.
    Arc tuples come back in edge-sorted assignment order, deterministic.
    """
    if g.size > max_edges:
        raise ValueError(f"enumeration bound exceeded: {g.size} edges > {max_edges}")
    # |arcs| = |edges| and out-degrees must sum to |vertices|.
    if g.size != g.order:
        return 0, []

    edges = sorted(g.edges)
    m = len(edges)
    out = [0] * g.order
    remaining = [g.degree(v) for v in range(g.order)]
    chosen: list[Arc] = []
    found: list[tuple[Arc, ...]] = []

    def rec(i: int) -> None:
        if i == m:
            found.append(tuple(chosen))
            return
        u, v = edges[i]
        for tail, head in ((u, v), (v, u)):
            if out[tail] == 1:
                continue
            out[tail] += 1
            remaining[u] -= 1
            remaining[v] -= 1
            feasible = (remaining[u] > 0 or out[u] == 1) and (remaining[v] > 0 or out[v] == 1)
            if feasible:
                chosen.append((tail, head))
                rec(i + 1)
                chosen.pop()
            out[tail] -= 1
            remaining[u] += 1
            remaining[v] += 1

    rec(0)
    return len(found), found


@dataclass(frozen=True)
class DecompositionSolution:
    """An edge partition of a host graph into sunlet-inducing classes.

    Classes are kept in first-edge order with each class's edges sorted,
    the canonical labeling used for deduplication.
    """

    classes: tuple[tuple[tuple[int, int], ...], ...]

    def assignment(self) -> dict[tuple[int, int], int]:
        return {e: c for c, cls in enumerate(self.classes) for e in cls}

    def copy_subgraphs(self) -> tuple[Graph, ...]:
        return tuple(graph_from_edges(cls) for cls in self.classes)


def _cycles_of_length(g: Graph, p: int) -> list[tuple[int, ...]]:
    """All p-cycles of g, each once: rooted at their smallest vertex, with
    the direction fixed by second vertex < last vertex."""
    adj = g.adjacency
    cycles: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        v = path[-1]
        if len(path) == p:
            if path[0] in adj[v] and path[1] < path[-1]:
                cycles.append(tuple(path))
            return
        for w in adj[v]:
            if w > path[0] and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.remove(w)
                path.pop()

    for root in range(g.order):
        extend([root], {root})
    return cycles


def _sunlet_candidates(g: Graph, p: int, edge_index: dict[tuple[int, int], int]) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Every sunlet subgraph of g on a p-cycle, as (edge bitmask, sorted edges).

    A candidate is a p-cycle plus one ray per cycle vertex; ray tails must
    lie outside the cycle and be pairwise distinct so the subgraph has 2p
    vertices of degrees 3 and 1.
    """
    from .graph_core import normalize_edge

    adj = g.adjacency
    out: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    for cycle in _cycles_of_length(g, p):
        on_cycle = set(cycle)
        cycle_edges = [normalize_edge(cycle[i], cycle[(i + 1) % p]) for i in range(p)]
        tail_options = [[w for w in adj[v] if w not in on_cycle] for v in cycle]
        chosen: list[tuple[int, int]] = []

        def pick(i: int, used_tails: set[int]) -> None:
            if i == p:
                edges = tuple(sorted(cycle_edges + chosen))
                mask = 0
                for e in edges:
                    mask |= 1 << edge_index[e]
                out.append((mask, edges))
                return
            for w in tail_options[i]:
                if w not in used_tails:
                    chosen.append(normalize_edge(cycle[i], w))
                    used_tails.add(w)
                    pick(i + 1, used_tails)
                    used_tails.remove(w)
                    chosen.pop()

        pick(0, set())
    out.sort()
    return out


def sunlet_edge_partitions(
    t: TorusGrid,
    p: int,
    limit: int | None = None,
    max_edges: int = PARTITION_SEARCH_EDGE_BOUND,
) -> list[DecompositionSolution]:
    """All partitions of the grid's edges into classes inducing sunlets on p-cycles.

    Exhaustive two-phase backtracking: enumerate every sunlet subgraph of
    the grid, then assign the smallest still-uncovered edge to each
    candidate containing it (exact cover over edge bitmasks). Classes are
    unlabeled, so every partition appears exactly once, deduplicated up to
    copy relabeling.
    """
    g = t.graph
    if g.size > max_edges:
        raise ValueError(f"search bound exceeded: {g.size} edges > {max_edges}")
    if p < 3:
        raise ValueError(f"sunlet cycle length must be at least 3, got {p}")
    block = 2 * p
    if g.size % block:
        return []

    edges = sorted(g.edges)
    edge_index = {e: i for i, e in enumerate(edges)}
    candidates = _sunlet_candidates(g, p, edge_index)
    for _, cls in candidates:
        assert is_sunlet(graph_from_edges(cls)) == p
    by_edge: list[list[int]] = [[] for _ in edges]
    for ci, (mask, _) in enumerate(candidates):
        for i in range(len(edges)):
            if mask >> i & 1:
                by_edge[i].append(ci)

    full = (1 << len(edges)) - 1
    solutions: list[DecompositionSolution] = []
    chosen: list[int] = []

    def rec(covered: int) -> None:
        if limit is not None and len(solutions) >= limit:
            return
        if covered == full:
            classes = sorted(candidates[ci][1] for ci in chosen)
            solutions.append(DecompositionSolution(tuple(classes)))
            return
        first_free = 0
        while covered >> first_free & 1:
            first_free += 1
        for ci in by_edge[first_free]:
            mask = candidates[ci][0]
            if mask & covered:
                continue
            chosen.append(ci)
            rec(covered | mask)
            chosen.pop()

    rec(0)
    return solutions
