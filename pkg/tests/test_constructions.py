import pytest

from sunlet_factors.constructions import (
    COVERING_BUILDERS,
    Covering,
    TurnClass,
    hamiltonian_covering,
    hamiltonian_position,
    odd_square_covering,
    staircase_covering,
    staircase_cycle,
    turn_class,
)
from sunlet_factors.graph_core import normalize_edge
from sunlet_factors.oracle import hamiltonian_row_walk, walked_staircase
from sunlet_factors.torus import EdgeClass, edge_class, odd_squares


# ------------------------------------------------------------------
# hamiltonian_position / turn_class
# ------------------------------------------------------------------


def test_position_fourth_entry_for_n3():
    assert hamiltonian_position(3, 3) == (1, 2)


def test_position_starts_at_origin():
    for n in (3, 5, 8):
        assert hamiltonian_position(0, n) == (0, 0)


@pytest.mark.parametrize("n", range(3, 11))
def test_position_closed_form_matches_row_walk(n):
    walked = hamiltonian_row_walk(n)
    assert [hamiltonian_position(k, n) for k in range(n * n)] == walked


@pytest.mark.parametrize("n", range(3, 9))
def test_position_sequence_is_a_spanning_cycle(n):
    seq = [hamiltonian_position(k, n) for k in range(n * n)]
    assert len(set(seq)) == n * n
    for k in range(n * n):
        (x1, y1), (x2, y2) = seq[k], seq[(k + 1) % (n * n)]
        dx, dy = (x2 - x1) % n, (y2 - y1) % n
        assert (dx, dy) in {(1, 0), (0, 1)}


def test_position_rejects_out_of_range():
    with pytest.raises(ValueError):
        hamiltonian_position(9, 3)
    with pytest.raises(ValueError):
        hamiltonian_position(-1, 3)


def test_turn_class_examples_n4():
    assert turn_class((0, 3), 4) is TurnClass.HV
    assert turn_class((1, 3), 4) is TurnClass.VH
    assert turn_class((0, 1), 4) is TurnClass.HH


@pytest.mark.parametrize("n", range(3, 9))
def test_turn_classes_match_the_walked_cycle(n):
    seq = [hamiltonian_position(k, n) for k in range(n * n)]
    for k, v in enumerate(seq):
        prev, nxt = seq[k - 1], seq[(k + 1) % (n * n)]
        enters_vert = prev[1] == v[1]
        leaves_vert = nxt[1] == v[1]
        expected = TurnClass.VH if enters_vert else (TurnClass.HV if leaves_vert else TurnClass.HH)
        assert not (enters_vert and leaves_vert)
        assert turn_class(v, n) is expected


# ------------------------------------------------------------------
# one-sunlet covering
# ------------------------------------------------------------------


def test_t1_ray_example_n3():
    c = hamiltonian_covering(3)
    # cycle vertex 1 sits at (0,1), class HH, so its pendant lands on (2,1)
    assert hamiltonian_position(1, 3) == (0, 1)
    assert turn_class((0, 1), 3) is TurnClass.HH
    assert c.vertex_map[c.domain.pendant_of(1)] == c.codomain.vertex(2, 1)


@pytest.mark.parametrize("n", range(3, 11))
def test_t1_cycle_image_spans_the_grid(n):
    c = hamiltonian_covering(n)
    image = {c.vertex_map[v] for v in c.domain.cycle_vertices()}
    assert image == set(range(n * n))


@pytest.mark.parametrize("n", range(3, 11))
def test_t1_rays_hit_exactly_the_non_cycle_edges(n):
    c = hamiltonian_covering(n)
    cycle_edges = set()
    for k in range(n * n):
        cycle_edges.add(c.image_edge(k, (k + 1) % (n * n)))
    ray_edges = [c.image_edge(k, c.domain.pendant_of(k)) for k in range(n * n)]
    assert len(set(ray_edges)) == n * n  # each ray on its own edge
    assert set(ray_edges) == c.codomain.graph.edges - cycle_edges


@pytest.mark.parametrize("n", range(3, 9))
def test_t1_runs_n_minus_1_horizontal_edges_between_turns(n):
    c = hamiltonian_covering(n)
    classes = []
    for k in range(n * n):
        e = c.image_edge(k, (k + 1) % (n * n))
        classes.append(edge_class(c.codomain, e))
    expected = ([EdgeClass.HORIZONTAL] * (n - 1) + [EdgeClass.VERTICAL]) * n
    assert classes == expected


def test_t1_rejects_n_below_3():
    with pytest.raises(ValueError):
        hamiltonian_covering(2)


# ------------------------------------------------------------------
# staircases
# ------------------------------------------------------------------


def test_staircase_0_n2_exact_sequence():
    assert staircase_cycle(0, 2) == [
        (0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3),
    ]


def test_staircase_1_n2_starts_at_2_0():
    assert staircase_cycle(1, 2)[0] == (2, 0)


def test_staircases_n2_cover_all_16_disjointly():
    seen = [v for i in range(2) for v in staircase_cycle(i, 2)]
    assert len(seen) == len(set(seen)) == 16


@pytest.mark.parametrize("n", range(2, 9))
def test_staircase_closed_form_matches_walk(n):
    for i in range(n):
        assert staircase_cycle(i, n) == walked_staircase(i, n)


@pytest.mark.parametrize("n", range(2, 9))
def test_staircase_steps_alternate_and_close(n):
    m = 2 * n
    for i in range(n):
        seq = staircase_cycle(i, n)
        for j in range(4 * n):
            (x1, y1), (x2, y2) = seq[j], seq[(j + 1) % (4 * n)]
            step = ((x2 - x1) % m, (y2 - y1) % m)
            assert step == ((1, 0) if j % 2 == 0 else (0, 1))


def test_staircase_rejects_bad_index():
    with pytest.raises(ValueError):
        staircase_cycle(2, 2)
    with pytest.raises(ValueError):
        staircase_cycle(-1, 2)
    with pytest.raises(ValueError):
        staircase_cycle(0, 1)


# ------------------------------------------------------------------
# n-sunlet covering
# ------------------------------------------------------------------


def test_t2_ray_into_origin_comes_from_3_0():
    c = staircase_covering(2)
    # staircase 0 enters (0,0) horizontally from (0,3); the free inward
    # arc is the vertical one from (3,0)
    cv = c.domain.cycle_vertex(0, 0)
    assert c.vertex_map[cv] == c.codomain.vertex(0, 0)
    assert c.vertex_map[c.domain.pendant_of(cv)] == c.codomain.vertex(3, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_t2_pendant_images_live_on_a_different_staircase(n):
    c = staircase_covering(n)
    staircase_of = {}
    for i in range(n):
        for x, y in staircase_cycle(i, n):
            staircase_of[c.codomain.vertex(x, y)] = i
    for cv in c.domain.cycle_vertices():
        own = staircase_of[c.vertex_map[cv]]
        other = staircase_of[c.vertex_map[c.domain.pendant_of(cv)]]
        assert other != own


@pytest.mark.parametrize("n", range(2, 9))
def test_t2_rays_hit_every_non_staircase_edge_once(n):
    c = staircase_covering(n)
    staircase_edges = set()
    for cv in c.domain.cycle_vertices():
        copy = c.domain.copy_of(cv)
        _, pos = c.domain.role_of(cv)
        nxt = c.domain.cycle_vertex(copy, (pos + 1) % (4 * n))
        staircase_edges.add(c.image_edge(cv, nxt))
    ray_edges = [c.image_edge(cv, c.domain.pendant_of(cv)) for cv in c.domain.cycle_vertices()]
    assert len(set(ray_edges)) == len(ray_edges) == 4 * n * n
    assert set(ray_edges) == c.codomain.graph.edges - staircase_edges


@pytest.mark.parametrize("n", range(2, 9))
def test_t2_ray_turns_alternate_rotation_sense(n):
    c = staircase_covering(n)
    m = 2 * n
    for i in range(n):
        seq = staircase_cycle(i, n)
        signs = []
        for j in range(4 * n):
            x, y = seq[j]
            px, py = seq[j - 1]
            d_in = ((x - px) % m, (y - py) % m)
            tail = c.codomain.coords(c.vertex_map[c.domain.pendant_of(c.domain.cycle_vertex(i, j))])
            d_ray = ((x - tail[0]) % m, (y - tail[1]) % m)
            # cross product sign of the quarter turn from d_in to d_ray
            signs.append(d_in[0] * d_ray[1] - d_in[1] * d_ray[0])
        assert set(signs) == {1, -1}
        for j in range(4 * n):
            assert signs[j] == -signs[j - 1]


def test_t2_rejects_n_below_2():
    with pytest.raises(ValueError):
        staircase_covering(1)


# ------------------------------------------------------------------
# odd-square covering
# ------------------------------------------------------------------


def test_t3_ray_example_at_corner_1_1():
    c = odd_square_covering(2)
    w = c.codomain.vertex(1, 1)
    cycle_vertex = next(cv for cv in c.domain.cycle_vertices() if c.vertex_map[cv] == w)
    assert c.vertex_map[c.domain.pendant_of(cycle_vertex)] == c.codomain.vertex(1, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_t3_cycles_land_on_odd_squares_in_dicycle_order(n):
    c = odd_square_covering(n)
    squares = odd_squares(c.codomain)
    for idx, sq in enumerate(squares):
        for pos in range(4):
            assert c.vertex_map[c.domain.cycle_vertex(idx, pos)] == sq.corners[pos]
        for pos in range(4):
            tail = c.vertex_map[c.domain.cycle_vertex(idx, pos)]
            head = c.vertex_map[c.domain.cycle_vertex(idx, (pos + 1) % 4)]
            assert c.codomain_orientation.has_arc(tail, head)


@pytest.mark.parametrize("n", range(2, 9))
def test_t3_rays_are_free_raster_in_arcs(n):
    c = odd_square_covering(n)
    ras = c.codomain_orientation
    for cv in c.domain.cycle_vertices():
        w = c.vertex_map[cv]
        tail = c.vertex_map[c.domain.pendant_of(cv)]
        assert ras.has_arc(tail, w)
    ray_edges = [c.image_edge(cv, c.domain.pendant_of(cv)) for cv in c.domain.cycle_vertices()]
    assert len(set(ray_edges)) == len(ray_edges) == 4 * n * n


def test_t3_rejects_n_below_2():
    with pytest.raises(ValueError):
        odd_square_covering(1)


# ------------------------------------------------------------------
# shared covering facts
# ------------------------------------------------------------------


@pytest.mark.parametrize(
    "build,n",
    [(hamiltonian_covering, n) for n in range(3, 11)]
    + [(staircase_covering, n) for n in range(2, 9)]
    + [(odd_square_covering, n) for n in range(2, 9)],
)
def test_domain_and_codomain_sizes_agree(build, n):
    c = build(n)
    assert c.domain.graph.size == c.codomain.graph.size == 2 * c.codomain.graph.order


def test_builder_table():
    assert COVERING_BUILDERS[1] is hamiltonian_covering
    assert COVERING_BUILDERS[2] is staircase_covering
    assert COVERING_BUILDERS[3] is odd_square_covering


def test_covering_validates_map_shape():
    c = hamiltonian_covering(3)
    with pytest.raises(ValueError, match="entries"):
        Covering(c.domain, c.codomain, c.vertex_map[:-1], c.domain_orientation, c.codomain_orientation, "T1")
    bad = list(c.vertex_map)
    bad[0] = 99
    with pytest.raises(ValueError, match="outside"):
        Covering(c.domain, c.codomain, tuple(bad), c.domain_orientation, c.codomain_orientation, "T1")
    with pytest.raises(ValueError, match="theorem"):
        Covering(c.domain, c.codomain, c.vertex_map, c.domain_orientation, c.codomain_orientation, "T9")


def test_image_edge_is_normalized():
    c = hamiltonian_covering(3)
    u, w = 0, c.domain.pendant_of(0)
    assert c.image_edge(u, w) == normalize_edge(c.vertex_map[u], c.vertex_map[w])
