import numpy as np
import pytest

from gsacds.constructor import generate_greedy, generate_random
from gsacds.graph import VertexSet, is_cds, load_graph
from gsacds.instances import (
    GeneratorConfig,
    energy_expected,
    energy_simulate,
    generate_instance,
    instance_text,
    max_edges,
)

from conftest import star


def test_first_grid_density_row():
    # the first default grid row (n=20, m=224) exceeds C(20,2)=190 and is rejected
    with pytest.raises(ValueError, match="190"):
        GeneratorConfig(n=20, target_m=224)
    g = generate_instance(GeneratorConfig(n=20, target_m=112, seed=7))
    assert g.m == 112 and g.n == 20


def test_small_examples():
    g = generate_instance(GeneratorConfig(n=3, target_m=3))
    assert sorted((u, v) for u, v, _ in g.edge_list) == [(0, 1), (0, 2), (1, 2)]
    tree = generate_instance(GeneratorConfig(n=10, target_m=9, seed=4))
    assert tree.m == 9
    assert generate_instance(GeneratorConfig(n=1, target_m=0)).n == 1


def test_too_few_edges():
    with pytest.raises(ValueError):
        GeneratorConfig(n=10, target_m=8)


@pytest.mark.parametrize("bad", [{"p_t": 1.5}, {"p_d": -0.1}, {"distance_range": (0, 5)}, {"distance_range": (9, 5)}])
def test_bad_config(bad):
    with pytest.raises(ValueError):
        GeneratorConfig(n=5, target_m=6, **bad)


def test_reproducible_and_loadable():
    rng = np.random.default_rng(0)
    for _ in range(30):
        n = int(rng.integers(2, 40))
        m = int(rng.integers(n - 1, max_edges(n) + 1))
        cfg = GeneratorConfig(n=n, target_m=m, seed=int(rng.integers(1000)), distance_range=(3, 9))
        g = generate_instance(cfg)
        assert g.edge_list == generate_instance(cfg).edge_list
        assert g.m == m
        assert all(3 <= w <= 9 and w == int(w) for _, _, w in g.edge_list)
        h = load_graph(instance_text(g, cfg))
        assert h.edge_list == g.edge_list


def test_metadata_comments():
    cfg = GeneratorConfig(n=6, target_m=7, seed=3, p_t=0.25)
    text = instance_text(generate_instance(cfg), cfg)
    assert "# p_t=0.25" in text and "# seed=3" in text and "# distance_range=1,100" in text


def test_energy_examples():
    st = star(5)
    cfg = GeneratorConfig(n=6, target_m=5, p_t=1.0, p_d=0.0, instants=1)
    assert energy_expected(st, VertexSet.of(6, range(6)), cfg) == 0
    assert energy_expected(st, VertexSet.of(6, [0]), cfg) == 5
    assert energy_simulate(st, VertexSet.of(6, [0]), cfg, np.random.default_rng(0)) == 5

    cfg0 = GeneratorConfig(n=6, target_m=5, p_t=0.0)
    for seed in range(10):
        assert energy_simulate(st, VertexSet.of(6, [0]), cfg0, np.random.default_rng(seed)) == 0


def test_energy_rejects_infeasible():
    cfg = GeneratorConfig(n=5, target_m=4)
    with pytest.raises(ValueError):
        energy_expected(star(4), VertexSet.of(5, [1]), cfg)


def test_halving_identity():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        cfg = GeneratorConfig(n=n, target_m=int(rng.integers(n - 1, max_edges(n) + 1)), seed=int(rng.integers(99)),
                              p_t=float(rng.uniform()), instants=int(rng.integers(1, 5)))
        g = generate_instance(cfg)
        s = generate_random(g, rng)
        full = energy_expected(g, s, GeneratorConfig(**{**cfg.__dict__, "p_d": 0.0}))
        half = energy_expected(g, s, GeneratorConfig(**{**cfg.__dict__, "p_d": 1.0}))
        assert half == full / 2


def test_energy_monotone_under_additions():
    rng = np.random.default_rng(2)
    for _ in range(20):
        n = int(rng.integers(3, 25))
        cfg = GeneratorConfig(n=n, target_m=int(rng.integers(n - 1, max_edges(n) + 1)), seed=int(rng.integers(99)))
        g = generate_instance(cfg)
        s = generate_greedy(g)
        base = energy_expected(g, s, cfg)
        for v in range(n):
            if v not in s and any(u in s for u in g.adj[v]):
                more = s.flags.copy()
                more[v] = 1
                assert energy_expected(g, VertexSet(more), cfg) <= base


def test_simulation_converges():
    cfg = GeneratorConfig(n=15, target_m=30, seed=5, p_t=0.6, p_d=0.3, instants=3)
    g = generate_instance(cfg)
    s = generate_greedy(g)
    rng = np.random.default_rng(0)
    mean = np.mean([energy_simulate(g, s, cfg, rng) for _ in range(4000)])
    assert abs(mean / energy_expected(g, s, cfg) - 1) < 0.02
