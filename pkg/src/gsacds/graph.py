"""Edge-weighted undirected graphs, vertex sets and CDS predicates.

Vertices are the integers ``0..n-1``. A :class:`Graph` keeps two views of its
adjacency: numpy CSR arrays for the compiled kernels and tuples of tuples for
the pure-Python ones. Both views are built once and never mutated.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from gsacds._backend import kernels


class GraphError(ValueError):
    """Base class for invalid instance files and graphs."""


class GraphFormatError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple connected graph with positive edge weights.

    Build instances with :meth:`from_edges` or :func:`load_graph`; the
    constructor itself does no validation.
    """

    n: int
    eu: np.ndarray
    ev: np.ndarray
    ew: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    nbr_w: np.ndarray
    adj: tuple[tuple[int, ...], ...]
    adj_w: tuple[tuple[float, ...], ...]
    edge_list: tuple[tuple[int, int, float], ...]
    total_weight: float

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[float]]) -> "Graph":
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        edge_list = []
        nbrs: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for lineno, (u, v, w) in enumerate(edges):
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {lineno}: endpoint out of range 0..{n - 1}: ({u}, {v})")
            if u == v:
                raise SelfLoopError(f"edge {lineno}: self-loop on vertex {u}")
            if not w > 0 or w == float("inf"):
                raise NonPositiveWeightError(f"edge {lineno}: weight must be positive and finite, got {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"edge {lineno}: duplicate edge {key}")
            seen.add(key)
            edge_list.append((u, v, w))
            nbrs[u].append((v, w))
            nbrs[v].append((u, w))

        for row in nbrs:
            row.sort()
        degree = np.array([len(row) for row in nbrs], dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degree, out=indptr[1:])
        indices = np.array([x for row in nbrs for x, _ in row], dtype=np.int64)
        nbr_w = np.array([w for row in nbrs for _, w in row], dtype=np.float64)

        total = 0.0
        for _, _, w in edge_list:
            total += w
        g = cls(
            n=n,
            eu=_frozen(np.array([e[0] for e in edge_list], dtype=np.int64)),
            ev=_frozen(np.array([e[1] for e in edge_list], dtype=np.int64)),
            ew=_frozen(np.array([e[2] for e in edge_list], dtype=np.float64)),
            indptr=_frozen(indptr),
            indices=_frozen(indices),
            nbr_w=_frozen(nbr_w),
            adj=tuple(tuple(x for x, _ in row) for row in nbrs),
            adj_w=tuple(tuple(w for _, w in row) for row in nbrs),
            edge_list=tuple(edge_list),
            total_weight=total,
        )
        if not _connected(g):
            raise DisconnectedGraphError("graph is not connected")
        return g

    @property
    def m(self) -> int:
        return len(self.edge_list)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def weight(self, u: int, v: int) -> float:
        row = self.adj[u]
        i = bisect_left(row, v)
        if i < len(row) and row[i] == v:
            return self.adj_w[u][i]
        raise KeyError((u, v))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, total_weight={self.total_weight:g})"


def _connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(u)
    return count == g.n


class VertexSet:
    """Fixed-length membership vector over the vertices of one graph."""

    __slots__ = ("flags", "size")

    def __init__(self, flags: Iterable[int] | np.ndarray):
        arr = np.array(flags, dtype=np.uint8)
        arr[arr != 0] = 1
        arr.flags.writeable = False
        self.flags = arr
        self.size = int(arr.sum())

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        arr = np.zeros(n, dtype=np.uint8)
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            arr[v] = 1
        return cls(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "VertexSet":
        # trusted 0/1 uint8 array coming out of a kernel
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj.flags = arr
        obj.size = int(arr.sum())
        return obj

    @property
    def n(self) -> int:
        return len(self.flags)

    def members(self) -> list[int]:
        return np.flatnonzero(self.flags).tolist()

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < len(self.flags) and bool(self.flags[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.flags.tobytes() == other.flags.tobytes()

    def __hash__(self) -> int:
        return hash(self.flags.tobytes())

    def __repr__(self) -> str:
        return f"VertexSet({self.members()})"


def _check(g: Graph, s: VertexSet) -> None:
    if len(s.flags) != g.n:
        raise ValueError(f"vertex set has length {len(s.flags)}, graph has {g.n} vertices")


def is_dominating(g: Graph, s: VertexSet) -> bool:
    _check(g, s)
    return bool(kernels.dominating(g, s.flags))


def is_connected_induced(g: Graph, s: VertexSet) -> bool:
    """True iff ``s`` is nonempty and induces a connected subgraph."""
    _check(g, s)
    return bool(kernels.induced_connected(g, s.flags))


def is_cds(g: Graph, s: VertexSet) -> bool:
    return is_dominating(g, s) and is_connected_induced(g, s)


def articulation_vertices_of_induced(g: Graph, s: VertexSet) -> VertexSet:
    """Cut vertices of the subgraph induced by ``s``."""
    if not is_connected_induced(g, s):
        raise ValueError("induced subgraph must be nonempty and connected")
    return VertexSet.of(g.n, kernels.cut_vertices(g, s.flags))


def _parse_number(tok: str, what: str, lineno: int) -> float:
    try:
        return float(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad {what} {tok!r}") from None


def _parse_int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad {what} {tok!r}") from None


def load_graph(text: str) -> Graph:
    """Parse an instance file.

    Format: a header ``n m`` followed by ``m`` lines ``u v w``. Lines starting
    with ``#`` and blank lines are ignored. Files using ids ``1..n`` are
    shifted to ``0..n-1``.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty instance: missing 'n m' header")

    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {' '.join(header)!r}")
    n = _parse_int(header[0], "vertex count", lineno)
    m = _parse_int(header[1], "edge count", lineno)
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lineno}: need n >= 1 and m >= 0, got n={n} m={m}")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1} edge lines")

    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v w', got {' '.join(toks)!r}")
        edges.append(
            (
                _parse_int(toks[0], "vertex id", lineno),
                _parse_int(toks[1], "vertex id", lineno),
                _parse_number(toks[2], "weight", lineno),
            )
        )

    ids = [x for u, v, _ in edges for x in (u, v)]
    if ids and min(ids) >= 1 and max(ids) == n:
        edges = [(u - 1, v - 1, w) for u, v, w in edges]
    return Graph.from_edges(n, edges)


def _fmt_weight(w: float) -> str:
    return str(int(w)) if w.is_integer() else repr(w)


def dump_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v} {_fmt_weight(w)}" for u, v, w in g.edge_list)
    return "\n".join(lines) + "\n"
