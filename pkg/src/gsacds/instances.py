"""Benchmark instances for a data-transfer network, and its energy model.

Each vertex outside the backbone sends its data over its lightest edge into
the backbone. At every instant a vertex transfers with probability ``p_t``; a
transfer is dropped with probability ``p_d``. A delivered transfer costs the
edge's distance (its weight), a dropped one half of it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from gsacds.graph import Graph, VertexSet, dump_graph, is_cds


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    target_m: int
    p_t: float = 0.5
    p_d: float = 0.5
    distance_range: tuple[int, int] = (1, 100)
    instants: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for name in ("p_t", "p_d"):
            p = getattr(self, name)
            if not 0 <= p <= 1:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        lo, hi = self.distance_range
        if not 0 < lo <= hi:
            raise ValueError(f"distance_range must satisfy 0 < lo <= hi, got {self.distance_range}")
        if self.instants < 0:
            raise ValueError(f"instants must be >= 0, got {self.instants}")
        max_m = max_edges(self.n)
        if self.target_m > max_m:
            raise ValueError(
                f"target_m={self.target_m} exceeds the simple-graph maximum C({self.n},2)={max_m}"
            )
        if self.target_m < self.n - 1:
            raise ValueError(f"target_m={self.target_m} is below the {self.n - 1} edges needed to connect {self.n} vertices")


def max_edges(n: int) -> int:
    return n * (n - 1) // 2


def generate_instance(cfg: GeneratorConfig) -> Graph:
    """Random spanning tree plus uniformly chosen extra edges, exactly ``target_m`` in total.

    Draws: a vertex permutation, one attachment index per non-root vertex,
    a permutation of the non-tree pairs, then one weight per edge.
    """
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n
    order = rng.permutation(n)
    pairs: set[tuple[int, int]] = set()
    for i in range(1, n):
        u = int(order[i])
        v = int(order[int(rng.integers(i))])
        pairs.add((min(u, v), max(u, v)))

    extra = cfg.target_m - len(pairs)
    if extra:
        rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in pairs]
        pick = rng.permutation(len(rest))[:extra]
        pairs.update(rest[int(i)] for i in pick)

    lo, hi = cfg.distance_range
    edges = sorted(pairs)
    weights = rng.integers(lo, hi + 1, size=len(edges))
    return Graph.from_edges(n, [(u, v, int(w)) for (u, v), w in zip(edges, weights)])


def instance_text(g: Graph, cfg: GeneratorConfig) -> str:
    meta = asdict(cfg)
    meta["m"] = g.m
    lo, hi = cfg.distance_range
    meta["distance_range"] = f"{lo},{hi}"
    keys = ("n", "m", "target_m", "p_t", "p_d", "distance_range", "instants", "seed")
    return dump_graph(g, comments=[f"{k}={meta[k]}" for k in keys])


def _transfer_distances(g: Graph, s: VertexSet) -> list[float]:
    if not is_cds(g, s):
        raise ValueError(f"{s} is not a connected dominating set")
    inset = s.flags.tolist()
    out = []
    for u in range(g.n):
        if not inset[u]:
            out.append(min(w for x, w in zip(g.adj[u], g.adj_w[u]) if inset[x]))
    return out


def energy_expected(g: Graph, s: VertexSet, cfg: GeneratorConfig) -> float:
    total = 0.0
    for d in _transfer_distances(g, s):
        total += d * (1 - cfg.p_d) + (d / 2) * cfg.p_d
    return cfg.instants * cfg.p_t * total


def energy_simulate(g: Graph, s: VertexSet, cfg: GeneratorConfig, rng: np.random.Generator) -> float:
    """One Monte Carlo realization; draws an ``(instants, senders, 2)`` uniform block."""
    d = np.array(_transfer_distances(g, s), dtype=np.float64)
    u = rng.random((cfg.instants, len(d), 2))
    sent = u[..., 0] < cfg.p_t
    dropped = u[..., 1] < cfg.p_d
    cost = np.where(dropped, d / 2, d)
    return float(np.sum(cost * sent))
