"""Exhaustive enumeration of connected dominating sets for small graphs.

Feasibility here is checked on integer bitmasks and does not go through the
kernels, so it can serve as an independent reference for them.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from gsacds.graph import Graph, VertexSet
from gsacds.objective import ObjectiveValue, ScalarWeights, eval_scalarized

DEFAULT_CAP = 20


class InstanceTooLargeError(ValueError):
    pass


def _guard(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise InstanceTooLargeError(f"n={g.n} exceeds the enumeration cap of {cap}")


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 1 << v
        for u in g.adj[v]:
            m |= 1 << u
        out.append(m)
    return out


def _connected_mask(open_nbhd: list[int], mask: int) -> bool:
    start = mask & -mask
    reached = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = open_nbhd[low.bit_length() - 1] & mask & ~reached
        reached |= new
        frontier |= new
    return reached == mask


def enumerate_feasible(g: Graph, cap: int = DEFAULT_CAP) -> Iterator[VertexSet]:
    """Yield every CDS once, by increasing size, then lexicographically."""
    for members in _enumerate_members(g, cap):
        yield VertexSet.of(g.n, members)


def _enumerate_members(g: Graph, cap: int, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    _guard(g, cap)
    closed = _masks(g)
    open_nbhd = [closed[v] & ~(1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for c in range(1, g.n + 1):
        if max_size is not None and c > max_size:
            return
        for combo in combinations(range(g.n), c):
            cover = 0
            mask = 0
            for v in combo:
                cover |= closed[v]
                mask |= 1 << v
            if cover == full and _connected_mask(open_nbhd, mask):
                yield combo


def exact_optimum(
    g: Graph, sw: ScalarWeights = ScalarWeights(), cap: int = DEFAULT_CAP
) -> tuple[VertexSet, ObjectiveValue]:
    """Minimum-``f`` CDS; ties go to smaller ``f_c``, smaller ``f_w``, then the
    lexicographically smallest sorted vertex list.

    Sizes are scanned in increasing order and the scan stops once
    ``alpha * c / n`` alone exceeds the best ``f`` found.
    """
    _guard(g, cap)
    best_key = None
    best = None
    closed = _masks(g)
    open_nbhd = [closed[v] & ~(1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for c in range(1, g.n + 1):
        if best is not None and sw.alpha * (c / g.n) > best[1].f:
            break
        for combo in combinations(range(g.n), c):
            cover = 0
            mask = 0
            for v in combo:
                cover |= closed[v]
                mask |= 1 << v
            if cover != full or not _connected_mask(open_nbhd, mask):
                continue
            s = VertexSet.of(g.n, combo)
            val = eval_scalarized(g, s, sw)
            key = (*val.sort_key(), combo)
            if best_key is None or key < best_key:
                best_key = key
                best = (s, val)
    assert best is not None  # V itself is always a CDS of a connected graph
    return best
