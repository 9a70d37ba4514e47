import numpy as np

from gsacds import _pykernels
from gsacds.constructor import GRAY, WHITE, color_state, generate_random
from gsacds.exact import enumerate_feasible, exact_optimum
from gsacds.graph import Graph, VertexSet, is_cds
from gsacds.neighborhood import neighbor_greedy, neighbor_random, removal_candidates
from gsacds.objective import eval_scalarized

from conftest import k3, path4, random_connected, single, star


def vs(g, members):
    return VertexSet.of(g.n, members)


def test_greedy_examples(backend):
    st = star()
    assert neighbor_greedy(st, vs(st, [0])).members() == [0]
    p4 = path4()
    assert neighbor_greedy(p4, vs(p4, [1, 2])).members() == [1, 2]
    tri = k3()
    before = vs(tri, [0, 1])
    after = neighbor_greedy(tri, before)
    assert after.members() == [1]
    assert eval_scalarized(tri, after).f < eval_scalarized(tri, before).f


def test_random_examples(backend):
    rng = np.random.default_rng(0)
    st = star()
    for _ in range(100):
        assert neighbor_random(st, vs(st, [0]), rng).members() == [0]
    assert neighbor_random(single(), vs(single(), [0]), rng).members() == [0]


def test_cut_vertices_are_never_removed():
    # path 0-1-2-3-4 with S = {1, 2, 3}: only the ends of the induced path are eligible
    g = Graph.from_edges(5, [(i, i + 1, 1) for i in range(4)])
    assert removal_candidates(g, vs(g, [1, 2, 3])) == [1, 3]
    assert removal_candidates(g, vs(g, [1, 2])) == [1, 2]


def test_feasible_on_random_graphs(backend):
    rng = np.random.default_rng(1)
    for _ in range(1000):
        g = random_connected(rng, int(rng.integers(1, 21)))
        s = generate_random(g, rng)
        a = neighbor_greedy(g, s)
        b = neighbor_random(g, s, rng)
        assert is_cds(g, a) and is_cds(g, b)


def test_inputs_untouched(backend):
    g = random_connected(np.random.default_rng(2), 12)
    s = generate_random(g, np.random.default_rng(3))
    copy = s.flags.copy()
    neighbor_greedy(g, s)
    neighbor_random(g, s, np.random.default_rng(4))
    assert np.array_equal(s.flags, copy)


def test_unique_singleton_minimum_is_a_fixed_point(backend):
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 20:
        g = random_connected(rng, int(rng.integers(2, 9)))
        minimum = [s for s in enumerate_feasible(g) if s.size == 1]
        if len(minimum) != 1:
            continue
        s = minimum[0]
        assert neighbor_greedy(g, s) == s
        for _ in range(10):
            assert neighbor_random(g, s, rng) == s
        checked += 1
    p4 = path4()
    assert neighbor_greedy(p4, vs(p4, [1, 2])) == vs(p4, [1, 2])


def test_random_repair_can_leave_a_larger_minimum(backend):
    # removing 1 from {1, 2} and promoting 3 first ends at {1, 2, 3}
    p4 = path4()
    rng = np.random.default_rng(0)
    outs = {tuple(neighbor_random(p4, vs(p4, [1, 2]), rng).members()) for _ in range(200)}
    assert (1, 2) in outs and len(outs) > 1


def test_recoloring_after_removal():
    rng = np.random.default_rng(6)
    for _ in range(200):
        g = random_connected(rng, int(rng.integers(2, 20)))
        s = generate_random(g, rng)
        cands = removal_candidates(g, s)
        v = cands[int(rng.integers(len(cands)))]
        reduced = s.flags.copy()
        reduced[v] = 0
        seen = []
        _pykernels.repair(g, reduced, v, None, observer=lambda i, c, w: seen.append(list(c)))
        first = seen[0]
        if not reduced.any():
            assert first[v] == GRAY and first.count(GRAY) == 1
            continue
        expect, _ = color_state(g, VertexSet(reduced))
        assert first == expect
        inside = set(np.flatnonzero(reduced).tolist())
        for u in range(g.n):
            if u in inside:
                continue
            has = any(x in inside for x in g.adj[u])
            assert (first[u] == GRAY) == has and (first[u] == WHITE) == (not has)


def test_greedy_move_can_reach_optimum():
    # K3 from {0, 1} lands on a size-1 optimum in one move
    tri = k3()
    s, _ = exact_optimum(tri)
    assert neighbor_greedy(tri, vs(tri, [0, 1])).size == s.size
