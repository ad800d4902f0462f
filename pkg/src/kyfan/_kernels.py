"""Compiled inner loops over adjacency bitmask rows.

A graph on ``n <= 16`` vertices is passed as an int64 array ``rows`` where bit
``u`` of ``rows[v]`` is set iff ``u ~ v``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def dsatur_order(rows, n):
    """DSATUR greedy colouring; returns (visit order, number of colours used)."""
    colors = np.full(n, -1, np.int64)
    sat = np.zeros(n, np.int64)  # bitmask of neighbour colours
    order = np.empty(n, np.int64)
    used = 0
    for step in range(n):
        best = -1
        best_sat = -1
        best_deg = -1
        for v in range(n):
            if colors[v] >= 0:
                continue
            s = _popcount(sat[v])
            d = _popcount(rows[v])
            if s > best_sat or (s == best_sat and d > best_deg):
                best, best_sat, best_deg = v, s, d
        c = 0
        while (sat[best] >> c) & 1:
            c += 1
        colors[best] = c
        if c + 1 > used:
            used = c + 1
        order[step] = best
        for u in range(n):
            if (rows[best] >> u) & 1:
                sat[u] |= 1 << c
    return order, used


@njit(cache=True, nogil=True)
def greedy_clique(rows, order, n):
    """Size of a clique grown greedily along ``order``."""
    best = 0
    for s in range(n):
        members = 1 << order[s]
        size = 1
        for t in range(n):
            v = order[t]
            if (members >> v) & 1:
                continue
            if (rows[v] & members) == members:
                members |= 1 << v
                size += 1
        if size > best:
            best = size
    return best


@njit(cache=True, nogil=True)
def colorable(rows, order, n, c):
    """Exact test for a proper colouring with at most ``c`` colours.

    Iterative backtracking along ``order``; a vertex may open at most one new
    colour beyond those already used, which removes colour-permutation
    symmetry.
    """
    colors = np.full(n, -1, np.int64)
    tries = np.zeros(n + 1, np.int64)
    prefix_max = np.full(n + 1, -1, np.int64)
    pos = 0
    while pos >= 0:
        if pos == n:
            return True
        v = order[pos]
        limit = min(c, prefix_max[pos] + 2)
        placed = False
        col = tries[pos]
        while col < limit:
            ok = True
            for u in range(n):
                if (rows[v] >> u) & 1 and colors[u] == col:
                    ok = False
                    break
            if ok:
                colors[v] = col
                tries[pos] = col + 1
                prefix_max[pos + 1] = max(prefix_max[pos], col)
                pos += 1
                tries[pos] = 0
                placed = True
                break
            col += 1
        if not placed:
            colors[v] = -1
            tries[pos] = 0
            pos -= 1
            if pos >= 0:
                colors[order[pos]] = -1
    return False


@njit(cache=True, nogil=True)
def chromatic_one(rows, n):
    if n == 0:
        return 0
    any_edge = False
    for v in range(n):
        if rows[v]:
            any_edge = True
            break
    if not any_edge:
        return 1
    order, upper = dsatur_order(rows, n)
    lower = greedy_clique(rows, order, n)
    for c in range(lower, upper):
        if colorable(rows, order, n, c):
            return c
    return upper


@njit(cache=True, nogil=True)
def chromatic_batch(rows, n):
    """Chromatic numbers for a stack of graphs, ``rows`` of shape (N, n)."""
    out = np.empty(rows.shape[0], np.int64)
    for i in range(rows.shape[0]):
        out[i] = chromatic_one(rows[i], n)
    return out
