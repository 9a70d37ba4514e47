"""Greedy and randomized CDS construction and the initial solution pool.

Both constructions share one state machine. Every vertex starts WHITE; a seed
turns GRAY; each step promotes a GRAY vertex to BLACK (it joins the set) and
turns its WHITE neighbors GRAY. A promoted vertex is always adjacent to an
earlier BLACK one, so the BLACK set stays connected, and the process stops
once no WHITE vertex is left, so it also dominates.
"""

from __future__ import annotations

import numpy as np

from gsacds._backend import kernels
from gsacds.graph import Graph, VertexSet

WHITE, GRAY, BLACK = 0, 1, 2


def color_state(g: Graph, s: VertexSet) -> tuple[list[int], list[int]]:
    """Recompute ``(colors, white_degree)`` for a set from scratch.

    Used as the reference recount in tests; the kernels maintain the same
    quantities incrementally.
    """
    inset = s.flags.tolist()
    colors = []
    for v in range(g.n):
        if inset[v]:
            colors.append(BLACK)
        elif any(inset[u] for u in g.adj[v]):
            colors.append(GRAY)
        else:
            colors.append(WHITE)
    wdeg = [sum(colors[u] == WHITE for u in g.adj[v]) for v in range(g.n)]
    return colors, wdeg


def greedy_seed(g: Graph) -> int:
    """Vertex of maximum degree, lowest id on ties."""
    degrees = np.diff(g.indptr)
    return int(np.argmax(degrees))


def generate_greedy(g: Graph) -> VertexSet:
    empty = np.zeros(g.n, dtype=np.uint8)
    return VertexSet._wrap(kernels.repair(g, empty, greedy_seed(g), None))


def generate_random(g: Graph, rng: np.random.Generator) -> VertexSet:
    """Uniform random seed, then uniform random GRAY promotions.

    Draws: one ``integers(n)`` for the seed, then ``random(n)`` consumed one
    value per promotion after the seed.
    """
    seed = int(rng.integers(g.n))
    draws = rng.random(g.n)
    empty = np.zeros(g.n, dtype=np.uint8)
    return VertexSet._wrap(kernels.repair(g, empty, seed, draws))


def generate_initial_pool(g: Graph, sol_size: int, rng: np.random.Generator) -> list[VertexSet]:
    """The greedy solution followed by ``sol_size - 1`` random ones."""
    if sol_size < 1:
        raise ValueError(f"sol_size must be >= 1, got {sol_size}")
    pool = [generate_greedy(g)]
    for _ in range(sol_size - 1):
        pool.append(generate_random(g, rng))
    return pool
