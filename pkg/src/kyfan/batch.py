"""Vectorized per-graph quantities over contiguous edge-bitset ranges.

Exhaustive scans evaluate millions of small graphs; doing it one
:class:`~kyfan.graphs.Graph` at a time is far too slow, so this module builds
stacked adjacency matrices straight from bitset integers and computes spectra
and structural flags for a whole chunk at once.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from . import _kernels
from .graphs import Graph, graph6_encode, pair_list

CHUNK = 1 << 15


@lru_cache(maxsize=None)
def _pair_arrays(n: int):
    pairs = pair_list(n)
    i = np.array([p[0] for p in pairs], dtype=np.intp)
    j = np.array([p[1] for p in pairs], dtype=np.intp)
    return i, j


def chunks(start: int, stop: int, size: int = CHUNK):
    for lo in range(start, stop, size):
        yield lo, min(lo + size, stop)


class GraphBatch:
    """All graphs of order ``n`` with bitsets in ``[start, stop)``."""

    def __init__(self, n: int, start: int, stop: int):
        self.n = n
        self.codes = np.arange(start, stop, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.codes)

    @cached_property
    def edge_bits(self) -> np.ndarray:
        p = self.n * (self.n - 1) // 2
        return ((self.codes[:, None] >> np.arange(p, dtype=np.int64)) & 1).astype(np.int8)

    @cached_property
    def adjacency(self) -> np.ndarray:
        i, j = _pair_arrays(self.n)
        a = np.zeros((len(self), self.n, self.n))
        a[:, i, j] = self.edge_bits
        a[:, j, i] = self.edge_bits
        return a

    @cached_property
    def rows(self) -> np.ndarray:
        i, j = _pair_arrays(self.n)
        w = np.zeros((len(i), self.n), dtype=np.int64)
        w[np.arange(len(i)), i] = 1 << j
        w[np.arange(len(i)), j] = 1 << i
        return self.edge_bits.astype(np.int64) @ w

    @cached_property
    def edge_count(self) -> np.ndarray:
        return self.edge_bits.sum(axis=1, dtype=np.int64)

    @cached_property
    def mu(self) -> np.ndarray:
        """Adjacency eigenvalues, largest first, shape (N, n)."""
        return np.linalg.eigvalsh(self.adjacency)[:, ::-1]

    @cached_property
    def sigma(self) -> np.ndarray:
        return -np.sort(-np.abs(self.mu), axis=1)

    @cached_property
    def ky_fan(self) -> np.ndarray:
        """Column ``k-1`` holds the Ky Fan k-norm."""
        return np.cumsum(self.sigma, axis=1)

    @cached_property
    def top_sums(self) -> np.ndarray:
        return np.cumsum(self.mu, axis=1)

    @cached_property
    def chi(self) -> np.ndarray:
        return _kernels.chromatic_batch(self.rows, self.n)

    @cached_property
    def triangle_free(self) -> np.ndarray:
        e = self.edge_bits.astype(bool)
        idx = {p: t for t, p in enumerate(pair_list(self.n))}
        ok = np.ones(len(self), dtype=bool)
        n = self.n
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    ok &= ~(e[:, idx[(a, b)]] & e[:, idx[(a, c)]] & e[:, idx[(b, c)]])
        return ok

    @cached_property
    def parts(self) -> np.ndarray:
        """Part count of the complete multipartite core, -1 if there is none.

        Isolated vertices are ignored; the edgeless graph gets 0.
        """
        rows = self.rows
        n = self.n
        active = rows != 0
        ok = np.ones(len(self), dtype=bool)
        rep = active.copy()
        for v in range(n):
            for u in range(v):
                nonadj = active[:, u] & active[:, v] & ((rows[:, v] >> u) & 1 == 0)
                ok &= ~nonadj | (rows[:, u] == rows[:, v])
                rep[:, v] &= ~nonadj
        return np.where(ok, rep.sum(axis=1), -1)

    @cached_property
    def signed_sigma(self) -> np.ndarray:
        """Singular values of ``2A - J`` (largest first)."""
        s = 2.0 * self.adjacency - 1.0
        return -np.sort(-np.abs(np.linalg.eigvalsh(s)), axis=1)

    @cached_property
    def signed_plain_residual(self) -> np.ndarray:
        """Plainness residual of ``2A - J``."""
        total = 2.0 * self.edge_count * 2 - self.n * self.n
        return self.signed_sigma[:, 0] - total / self.n

    def graph6(self, mask: np.ndarray) -> list[str]:
        return [graph6_encode(Graph(self.n, int(c))) for c in self.codes[mask]]


def sigma_profile_batch(sigma: np.ndarray, k: int) -> np.ndarray:
    """Row-wise: exactly ``k`` nonzero singular values, the top ``k`` equal.

    Same thresholds as :func:`kyfan.bounds.sigma_profile`.
    """
    s1 = sigma[:, 0]
    thr = np.where(s1 > 1.0, 1e-6 * s1, 1e-9)
    nonzero = (sigma > thr[:, None]).sum(axis=1)
    top_equal = s1 - sigma[:, k - 1] <= 1e-6 * s1
    return (nonzero == k) & top_equal
