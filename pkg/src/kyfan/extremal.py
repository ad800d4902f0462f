"""Exhaustive extremal values and constructions that attain the bounds.

``search_xi(n, k)`` maximizes the Ky Fan k-norm over all labeled graphs of
order n; ``search_tau(n, k)`` maximizes the sum of the k largest adjacency
eigenvalues. Both split the bitset range into chunks whose partial maxima
merge associatively.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .batch import GraphBatch, chunks
from .bounds import check_tmoh
from .graphs import MAX_ENUM_ORDER, Graph, SizeError, adjacency, blow_up, complete, pair_count
from .linalg import ones
from .verify import default_threads

__all__ = [
    "SearchResult",
    "construct_blowup_extremal",
    "construct_orthogonal_rows",
    "construct_tnik_equality",
    "search_tau",
    "search_xi",
    "sylvester",
]

ARGMAX_TOL = 1e-6
# n = 8 is 2**28 graphs; allowed, but only on request
DEFAULT_SEARCH_CAP = 7


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    kind: str  # "XI" or "TAU"
    value: float
    argmax: tuple[str, ...]
    scanned: int


def _chunk_best(n: int, k: int, kind: str, lo: int, hi: int):
    b = GraphBatch(n, lo, hi)
    obj = b.ky_fan[:, k - 1] if kind == "XI" else b.top_sums[:, k - 1]
    best = float(obj.max())
    # keep a generous band; the final cut happens after merging
    keep = obj >= best - 2 * ARGMAX_TOL
    return best, list(zip(obj[keep].tolist(), b.graph6(keep)))


def _search(n: int, k: int, kind: str, threads: int | None, cap: int) -> SearchResult:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > min(cap, MAX_ENUM_ORDER):
        raise SizeError(f"n={n} exceeds the search cap {min(cap, MAX_ENUM_ORDER)}")
    threads = default_threads() if threads is None else max(1, threads)
    total = 1 << pair_count(n)
    tasks = list(chunks(0, total))
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _chunk_best(n, k, kind, *r), tasks))
    else:
        parts = [_chunk_best(n, k, kind, lo, hi) for lo, hi in tasks]
    value = max(p[0] for p in parts)
    argmax = sorted(g6 for _, cands in parts for v, g6 in cands if v >= value - ARGMAX_TOL)
    return SearchResult(n=n, k=k, kind=kind, value=value, argmax=tuple(argmax), scanned=total)


def search_xi(n: int, k: int, threads: int | None = None, cap: int = MAX_ENUM_ORDER) -> SearchResult:
    """Largest Ky Fan k-norm over all graphs of order ``n``.

    ``argmax`` lists every labeled attainer within 1e-6, sorted by graph6.
    """
    return _search(n, k, "XI", threads, cap)


def search_tau(n: int, k: int, threads: int | None = None, cap: int = MAX_ENUM_ORDER) -> SearchResult:
    """Largest sum of the ``k`` top adjacency eigenvalues over graphs of order ``n``."""
    return _search(n, k, "TAU", threads, cap)


# constructions


def sylvester(q: int) -> np.ndarray:
    """Sylvester Hadamard matrix of order ``q`` (a power of two), first row all ones."""
    if q < 1 or q & (q - 1):
        raise ValueError(f"Sylvester construction needs a power of two, got {q}")
    h = np.ones((1, 1))
    while h.shape[0] < q:
        h = np.block([[h, h], [h, -h]])
    return h


def construct_blowup_extremal(k: int = 4, t: int = 1, base: Graph | None = None) -> Graph:
    """Blow-up of a graph attaining the order-k bound with equality.

    Without ``base`` only ``k = 4`` is known here (base ``K4``). A supplied
    base must have order ``k`` and attain the bound itself.
    """
    if base is None:
        if k != 4:
            raise ValueError(f"no built-in extremal base for k={k}; pass one explicitly")
        base = complete(4)
    elif base.n != k:
        raise ValueError(f"base graph has order {base.n}, expected k={k}")
    if not check_tmoh(base, k).is_equality:
        raise ValueError("base graph does not attain the bound")
    return blow_up(base, t)


def construct_orthogonal_rows(k: int, q: int, c: float, r: int = 1, s: int = 1) -> np.ndarray:
    """``B kron J_{r,s}`` where ``B`` is ``k x q`` with orthogonal rows of length ``c``.

    ``B`` takes the first ``k`` rows of the Sylvester matrix of order ``q``
    scaled by ``c / sqrt(q)``, so ``q`` must be a power of two with
    ``q >= k``. The result has exactly ``k`` equal nonzero singular values.
    """
    if not 1 <= k <= q:
        raise ValueError(f"need 1 <= k <= q, got k={k}, q={q}")
    if c <= 0 or r < 1 or s < 1:
        raise ValueError("need c > 0 and r, s >= 1")
    b = sylvester(q)[:k] * (c / np.sqrt(q))
    return np.kron(b, ones(r, s))


def construct_tnik_equality(k: int, r: int = 1, s: int = 1) -> np.ndarray:
    """A (0,1)-matrix attaining the (0,1) Ky Fan bound at ``k``, blown up by ``J_{r,s}``.

    ``k = 1`` uses the 1x1 all-ones matrix, ``k = 4`` the adjacency matrix of
    ``K4`` (``2A - J = J - 2I`` is a plain Hadamard matrix).
    """
    if k == 1:
        base = ones(1, 1)
    elif k == 4:
        base = adjacency(complete(4))
    else:
        raise ValueError(f"no built-in equality matrix for k={k}")
    if r < 1 or s < 1:
        raise ValueError("need r, s >= 1")
    return np.kron(base, ones(r, s))
