# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np

from libc.stdint cimport int64_t, uint8_t

cdef enum:
    WHITE = 0
    GRAY = 1
    BLACK = 2


cdef inline void _promote(
    int64_t v,
    const int64_t[::1] indptr,
    const int64_t[::1] indices,
    uint8_t[::1] inset,
    uint8_t[::1] colors,
    int64_t[::1] wdeg,
    int64_t* white_left,
) noexcept nogil:
    cdef int64_t a, b, u, x
    colors[v] = BLACK
    inset[v] = 1
    for a in range(indptr[v], indptr[v + 1]):
        u = indices[a]
        if colors[u] == WHITE:
            colors[u] = GRAY
            white_left[0] -= 1
            for b in range(indptr[u], indptr[u + 1]):
                x = indices[b]
                wdeg[x] -= 1


def repair(g, flags, seed=-1, draws=None):
    cdef int64_t n = g.n
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    out = np.array(flags, dtype=np.uint8, copy=True)
    cdef uint8_t[::1] inset = out
    colors_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] colors = colors_arr
    wdeg_arr = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] wdeg = wdeg_arr
    gray_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] gray = gray_arr
    cdef const double[::1] dr
    cdef bint use_draws = draws is not None
    if use_draws:
        dr = np.ascontiguousarray(draws, dtype=np.float64)

    cdef int64_t v, a, u, best, best_d, ngray, i
    cdef int64_t j = 0
    cdef int64_t nmembers = 0
    cdef int64_t white_left = 0
    cdef int64_t s = seed

    for v in range(n):
        if inset[v]:
            colors[v] = BLACK
            nmembers += 1
    for v in range(n):
        if inset[v]:
            for a in range(indptr[v], indptr[v + 1]):
                u = indices[a]
                if colors[u] == WHITE:
                    colors[u] = GRAY
    if nmembers == 0:
        if s < 0 or s >= n:
            raise ValueError("empty set needs a seed vertex")
        colors[s] = GRAY

    for v in range(n):
        if colors[v] == WHITE:
            white_left += 1
            for a in range(indptr[v], indptr[v + 1]):
                wdeg[indices[a]] += 1

    if nmembers == 0:
        _promote(s, indptr, indices, inset, colors, wdeg, &white_left)
    while white_left > 0:
        if not use_draws:
            best = -1
            best_d = -1
            for v in range(n):
                if colors[v] == GRAY and wdeg[v] > best_d:
                    best = v
                    best_d = wdeg[v]
        else:
            ngray = 0
            for v in range(n):
                if colors[v] == GRAY:
                    gray[ngray] = v
                    ngray += 1
            i = <int64_t>(dr[j] * ngray)
            j += 1
            if i > ngray - 1:
                i = ngray - 1
            best = gray[i]
        _promote(best, indptr, indices, inset, colors, wdeg, &white_left)
    return out


def eval_weight(g, flags):
    cdef const int64_t[::1] eu = g.eu
    cdef const int64_t[::1] ev = g.ev
    cdef const double[::1] ew = g.ew
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const double[::1] nbr_w = g.nbr_w
    cdef const uint8_t[::1] inset = np.ascontiguousarray(flags, dtype=np.uint8)
    cdef int64_t n = g.n
    cdef int64_t e, u, a
    cdef double fw1 = 0.0
    cdef double fw2 = 0.0
    cdef double best
    cdef bint found
    for e in range(eu.shape[0]):
        if inset[eu[e]] and inset[ev[e]]:
            fw1 += ew[e]
    for u in range(n):
        if inset[u]:
            continue
        found = False
        best = 0.0
        for a in range(indptr[u], indptr[u + 1]):
            if inset[indices[a]] and (not found or nbr_w[a] < best):
                best = nbr_w[a]
                found = True
        if not found:
            return fw1, fw2, u
        fw2 += best
    return fw1, fw2, -1


def dominating(g, flags):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] inset = np.ascontiguousarray(flags, dtype=np.uint8)
    cdef int64_t v, a
    cdef bint ok
    for v in range(g.n):
        if inset[v]:
            continue
        ok = False
        for a in range(indptr[v], indptr[v + 1]):
            if inset[indices[a]]:
                ok = True
                break
        if not ok:
            return False
    return True


def induced_connected(g, flags):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] inset = np.ascontiguousarray(flags, dtype=np.uint8)
    cdef int64_t n = g.n
    seen_arr = np.zeros(n, dtype=np.uint8)
    stack_arr = np.empty(n, dtype=np.int64)
    cdef uint8_t[::1] seen = seen_arr
    cdef int64_t[::1] stack = stack_arr
    cdef int64_t v, u, a, top = 0, nmembers = 0, reached = 0, start = -1
    for v in range(n):
        if inset[v]:
            nmembers += 1
            if start < 0:
                start = v
    if nmembers == 0:
        return False
    seen[start] = 1
    stack[0] = start
    top = 1
    reached = 1
    while top > 0:
        top -= 1
        v = stack[top]
        for a in range(indptr[v], indptr[v + 1]):
            u = indices[a]
            if inset[u] and not seen[u]:
                seen[u] = 1
                reached += 1
                stack[top] = u
                top += 1
    return reached == nmembers


def cut_vertices(g, flags):
    cdef const int64_t[::1] indptr = g.indptr
    cdef const int64_t[::1] indices = g.indices
    cdef const uint8_t[::1] inset = np.ascontiguousarray(flags, dtype=np.uint8)
    cdef int64_t n = g.n
    disc_arr = np.full(n, -1, dtype=np.int64)
    low_arr = np.zeros(n, dtype=np.int64)
    cut_arr = np.zeros(n, dtype=np.uint8)
    # DFS frames: vertex, parent, next adjacency offset
    fv_arr = np.empty(n, dtype=np.int64)
    fp_arr = np.empty(n, dtype=np.int64)
    fa_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] disc = disc_arr
    cdef int64_t[::1] low = low_arr
    cdef uint8_t[::1] cut = cut_arr
    cdef int64_t[::1] fv = fv_arr
    cdef int64_t[::1] fp = fp_arr
    cdef int64_t[::1] fa = fa_arr
    cdef int64_t v, u, a, p, parent, root = -1, nmembers = 0, t, top, root_children = 0
    for v in range(n):
        if inset[v]:
            nmembers += 1
            if root < 0:
                root = v
    if nmembers <= 2:
        return []
    disc[root] = 0
    low[root] = 0
    t = 1
    fv[0] = root
    fp[0] = -1
    fa[0] = indptr[root]
    top = 1
    while top > 0:
        v = fv[top - 1]
        parent = fp[top - 1]
        a = fa[top - 1]
        while a < indptr[v + 1] and not inset[indices[a]]:
            a += 1
        if a < indptr[v + 1]:
            u = indices[a]
            fa[top - 1] = a + 1
            if disc[u] < 0:
                disc[u] = t
                low[u] = t
                t += 1
                if v == root:
                    root_children += 1
                fv[top] = u
                fp[top] = v
                fa[top] = indptr[u]
                top += 1
            elif u != parent and disc[u] < low[v]:
                low[v] = disc[u]
        else:
            top -= 1
            if top > 0:
                p = fv[top - 1]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    cut[p] = 1
    if root_children > 1:
        cut[root] = 1
    return [v for v in range(n) if cut[v]]
