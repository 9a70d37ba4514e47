"""Remove-and-repair moves on connected dominating sets.

A move drops one dominator and regrows the set with the construction state
machine. Only vertices whose removal keeps the induced subgraph connected are
eligible (all members when the set has at most two), so the repaired set is
again a CDS. Colors after removal follow actual domination: a vertex outside
the reduced set is GRAY when it still has a neighbor inside and WHITE
otherwise. If the removal empties the set, the removed vertex is the GRAY seed
of the regrowth.
"""

from __future__ import annotations

import numpy as np

from gsacds._backend import kernels
from gsacds.graph import Graph, VertexSet, is_cds

# turned on by the test suite; checks every move's output
VALIDATE = False


def removal_candidates(g: Graph, s: VertexSet) -> list[int]:
    members = s.members()
    if len(members) <= 2:
        return members
    cut = set(kernels.cut_vertices(g, s.flags))
    return [v for v in members if v not in cut]


def _regrow(g: Graph, s: VertexSet, v: int, draws: np.ndarray | None) -> VertexSet:
    reduced = s.flags.copy()
    reduced[v] = 0
    out = VertexSet._wrap(kernels.repair(g, reduced, v, draws))
    if VALIDATE:
        assert is_cds(g, out), f"move produced an infeasible set {out}"
    return out


def neighbor_greedy(g: Graph, s: VertexSet) -> VertexSet:
    """Drop the eligible member of smallest degree, then repair greedily."""
    cands = removal_candidates(g, s)
    if not cands:
        return s
    v = min(cands, key=lambda x: (len(g.adj[x]), x))
    return _regrow(g, s, v, None)


def neighbor_random(g: Graph, s: VertexSet, rng: np.random.Generator) -> VertexSet:
    """Drop a uniformly chosen eligible member, then repair randomly.

    Draws: ``integers(#candidates)`` then ``random(n)``.
    """
    cands = removal_candidates(g, s)
    if not cands:
        return s
    v = cands[int(rng.integers(len(cands)))]
    return _regrow(g, s, v, rng.random(g.n))
