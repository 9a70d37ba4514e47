"""Pure-Python hot kernels.

Mirror of ``_ckernels.pyx``: same signatures, same draw consumption and the
same floating-point summation order, so both backends return bit-identical
results. Every function takes a :class:`~gsacds.graph.Graph` and a uint8
membership array and never mutates its inputs.
"""

from __future__ import annotations

import numpy as np

WHITE, GRAY, BLACK = 0, 1, 2


def repair(g, flags, seed=-1, draws=None, observer=None):
    """Grow ``flags`` into a dominating set by promoting GRAY vertices.

    Colors are recomputed from ``flags``: members BLACK, their non-member
    neighbors GRAY, everything else WHITE. When ``flags`` is empty, ``seed``
    is the only GRAY vertex and is promoted first. Each further step promotes
    the GRAY vertex with the most WHITE neighbors (lowest id on ties), or,
    when ``draws`` is given, the GRAY vertex at position
    ``floor(draws[j] * #gray)`` in id order.

    ``observer(inset, colors, wdeg)`` is called once after the initial
    coloring and again after every promotion. It is a test hook and only
    exists in this backend.
    """
    n = g.n
    adj = g.adj
    inset = flags.tolist()
    colors = [WHITE] * n
    members = [v for v in range(n) if inset[v]]
    for v in members:
        colors[v] = BLACK
    for v in members:
        for u in adj[v]:
            if colors[u] == WHITE:
                colors[u] = GRAY
    if not members:
        if not 0 <= seed < n:
            raise ValueError("empty set needs a seed vertex")
        colors[seed] = GRAY

    white_left = 0
    wdeg = [0] * n
    for v in range(n):
        if colors[v] == WHITE:
            white_left += 1
            for u in adj[v]:
                wdeg[u] += 1

    def promote(v):
        nonlocal white_left
        colors[v] = BLACK
        inset[v] = 1
        for u in adj[v]:
            if colors[u] == WHITE:
                colors[u] = GRAY
                white_left -= 1
                for x in adj[u]:
                    wdeg[x] -= 1
        if observer is not None:
            observer(inset, colors, wdeg)

    if observer is not None:
        observer(inset, colors, wdeg)
    if not members:
        promote(seed)
    j = 0
    while white_left:
        if draws is None:
            best, best_d = -1, -1
            for v in range(n):
                if colors[v] == GRAY and wdeg[v] > best_d:
                    best, best_d = v, wdeg[v]
        else:
            gray = [v for v in range(n) if colors[v] == GRAY]
            i = int(draws[j] * len(gray))
            j += 1
            best = gray[min(i, len(gray) - 1)]
        promote(best)
    return np.array(inset, dtype=np.uint8)


def eval_weight(g, flags):
    """Return ``(f_w1, f_w2, bad)``; ``bad`` is an undominated vertex or -1."""
    inset = flags.tolist()
    fw1 = 0.0
    for u, v, w in g.edge_list:
        if inset[u] and inset[v]:
            fw1 += w
    fw2 = 0.0
    inf = float("inf")
    for u in range(g.n):
        if inset[u]:
            continue
        best = inf
        for x, w in zip(g.adj[u], g.adj_w[u]):
            if inset[x] and w < best:
                best = w
        if best == inf:
            return fw1, fw2, u
        fw2 += best
    return fw1, fw2, -1


def dominating(g, flags):
    inset = flags.tolist()
    for v in range(g.n):
        if not inset[v] and not any(inset[u] for u in g.adj[v]):
            return False
    return True


def induced_connected(g, flags):
    inset = flags.tolist()
    members = [v for v in range(g.n) if inset[v]]
    if not members:
        return False
    seen = [False] * g.n
    seen[members[0]] = True
    stack = [members[0]]
    reached = 1
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if inset[u] and not seen[u]:
                seen[u] = True
                reached += 1
                stack.append(u)
    return reached == len(members)


def cut_vertices(g, flags):
    """Sorted cut vertices of the induced subgraph (assumed connected)."""
    inset = flags.tolist()
    adj = g.adj
    members = [v for v in range(g.n) if inset[v]]
    if len(members) <= 2:
        return []
    disc = [-1] * g.n
    low = [0] * g.n
    cut = [False] * g.n
    root = members[0]
    disc[root] = low[root] = 0
    t = 1
    root_children = 0
    stack = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        v, parent, i = frame
        nbrs = adj[v]
        while i < len(nbrs) and not inset[nbrs[i]]:
            i += 1
        if i < len(nbrs):
            u = nbrs[i]
            frame[2] = i + 1
            if disc[u] < 0:
                disc[u] = low[u] = t
                t += 1
                if v == root:
                    root_children += 1
                stack.append([u, v, 0])
            elif u != parent and disc[u] < low[v]:
                low[v] = disc[u]
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    cut[p] = True
    if root_children > 1:
        cut[root] = True
    return [v for v in members if cut[v]]
