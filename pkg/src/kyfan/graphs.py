"""Simple undirected graphs stored as edge bitsets.

Edge ``{i, j}`` with ``i < j`` lives at bit ``j*(j-1)/2 + i``, which is the
column-by-column upper-triangle order used by graph6. The integer bitset is
therefore the graph6 payload read as a little-endian bit string, and
enumerating integers ``0 .. 2**C(n,2)-1`` enumerates labeled graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels

__all__ = [
    "Graph",
    "GraphFormatError",
    "SizeError",
    "adjacency",
    "blow_up",
    "chromatic_number",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "empty",
    "enumerate_labeled",
    "graph6_decode",
    "graph6_encode",
    "is_complete_bipartite_plus_isolated",
    "is_complete_multipartite_plus_isolated",
    "is_triangle_free",
    "multipartite_parts",
    "pair_count",
    "path",
    "read_graph6_file",
    "write_graph6_file",
]

MAX_ORDER = 62
MAX_CHROMATIC_ORDER = 16
MAX_ENUM_ORDER = 8


class GraphFormatError(ValueError):
    """Malformed graph6 input."""


class SizeError(ValueError):
    """A size cap was exceeded."""


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_list(n: int) -> list[tuple[int, int]]:
    """All pairs ``(i, j)``, ``i < j``, in bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if self.n > MAX_ORDER:
            raise SizeError(f"order {self.n} exceeds {MAX_ORDER}")
        if self.bits < 0 or self.bits >> pair_count(self.n):
            raise ValueError("edge bitset does not fit the vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        bits = 0
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"invalid edge ({i}, {j}) for order {n}")
            bits |= 1 << pair_index(i, j)
        return cls(n, bits)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.bits >> pair_index(i, j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for idx, (i, j) in enumerate(pair_list(self.n)):
            if self.bits >> idx & 1:
                yield i, j

    def rows(self) -> list[int]:
        """Neighbourhood bitmasks, one per vertex."""
        rows = [0] * self.n
        for i, j in self.edges():
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return rows

    def __str__(self) -> str:
        return graph6_encode(self)


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = a[j, i] = 1.0
    return a


# graph6 codec


def graph6_encode(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise SizeError(f"graph6 short form supports n <= {MAX_ORDER}")
    p = pair_count(g.n)
    out = [chr(g.n + 63)]
    for start in range(0, p, 6):
        group = 0
        for off in range(6):
            idx = start + off
            group <<= 1
            if idx < p and g.bits >> idx & 1:
                group |= 1
        out.append(chr(group + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError:
            raise GraphFormatError("graph6 must be ASCII") from None
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    codes = [ord(ch) for ch in s]
    for c in codes:
        if c < 63 or c > 126:
            raise GraphFormatError(f"byte {c} outside graph6 range 63..126")
    n = codes[0] - 63
    if n > MAX_ORDER:
        raise GraphFormatError("multi-byte graph6 headers (n > 62) are not supported")
    if n == 0:
        raise GraphFormatError("graph6 header encodes zero vertices")
    p = pair_count(n)
    need = -(-p // 6)
    body = codes[1:]
    if len(body) < need:
        raise GraphFormatError(f"truncated payload: {len(body)} bytes, need {need}")
    if len(body) > need:
        raise GraphFormatError(f"trailing data: {len(body)} bytes, expected {need}")
    bits = 0
    for k, c in enumerate(body):
        group = c - 63
        for off in range(6):
            idx = 6 * k + off
            if group >> (5 - off) & 1:
                if idx >= p:
                    raise GraphFormatError("non-zero padding bits")
                bits |= 1 << idx
    return Graph(n, bits)


def read_graph6_file(path) -> list[Graph]:
    return [graph6_decode(line) for line in Path(path).read_text().splitlines() if line.strip()]


def write_graph6_file(graphs: Iterable[Graph | str], path) -> None:
    lines = [g if isinstance(g, str) else graph6_encode(g) for g in graphs]
    Path(path).write_text("".join(line + "\n" for line in lines))


# constructors


def empty(n: int) -> Graph:
    return Graph(n, 0)


def complete(n: int) -> Graph:
    return Graph(n, (1 << pair_count(n)) - 1)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: Sequence[int], isolated: int = 0) -> Graph:
    """Complete multipartite graph on ``parts`` plus ``isolated`` extra vertices.

    Parts occupy consecutive vertex ranges in the given order; the isolated
    vertices come last.
    """
    if not parts or any(p < 1 for p in parts) or isolated < 0:
        raise ValueError("parts must be non-empty positive sizes, isolated >= 0")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label) + isolated
    edges = [(i, j) for j in range(len(label)) for i in range(j) if label[i] != label[j]]
    return Graph.from_edges(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite((a, b))


def blow_up(g: Graph, t: int) -> Graph:
    """Replace every vertex by an independent ``t``-set; edges become complete joins.

    Vertex ``v`` becomes ``v*t .. v*t + t - 1``, so the adjacency matrix is
    ``adjacency(g) kron J_t``.
    """
    if t < 1:
        raise ValueError("blow-up factor must be positive")
    if g.n * t > MAX_ORDER:
        raise SizeError(f"blow-up order {g.n * t} exceeds {MAX_ORDER}")
    edges = [
        (u * t + a, v * t + b)
        for u, v in g.edges()
        for a in range(t)
        for b in range(t)
    ]
    return Graph.from_edges(g.n * t, edges)


# structural predicates


# below this order a plain Python search beats loading the compiled kernel
_SMALL_CHROMATIC_ORDER = 10


def _small_chromatic(rows: list[int], n: int) -> int:
    order = sorted(range(n), key=lambda v: -bin(rows[v]).count("1"))
    colour = [-1] * n

    def extend(i: int, used: int, c: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {colour[u] for u in range(n) if rows[v] >> u & 1}
        # a fresh colour is only tried once (the lowest unused one)
        for col in range(min(used + 1, c)):
            if col not in taken:
                colour[v] = col
                if extend(i + 1, max(used, col + 1), c):
                    return True
        colour[v] = -1
        return False

    c = 1
    while not extend(0, 0, c):
        c += 1
    return c


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number (DSATUR order, clique bound, backtracking)."""
    if g.n > MAX_CHROMATIC_ORDER:
        raise SizeError(f"exact colouring limited to n <= {MAX_CHROMATIC_ORDER}")
    if g.n <= _SMALL_CHROMATIC_ORDER:
        return _small_chromatic(g.rows(), g.n)
    rows = np.array(g.rows(), dtype=np.int64)
    return int(_kernels.chromatic_one(rows, g.n))


def is_triangle_free(g: Graph) -> bool:
    a = adjacency(g).astype(np.int64)
    return int(np.trace(a @ a @ a)) == 0


def multipartite_parts(g: Graph) -> int | None:
    """Number of parts if ``g`` minus isolated vertices is complete multipartite.

    Returns ``None`` otherwise, and 0 for an edgeless graph. In a complete
    multipartite graph two distinct vertices are non-adjacent exactly when
    they share a part, and then their neighbourhoods coincide.
    """
    rows = g.rows()
    active = [v for v in range(g.n) if rows[v]]
    classes: list[int] = []
    for v in active:
        for u in classes:
            if not rows[v] >> u & 1:
                if rows[u] != rows[v]:
                    return None
                break
        else:
            classes.append(v)
    # every pair of representatives must be adjacent
    for u, v in itertools.combinations(classes, 2):
        if not rows[u] >> v & 1:
            return None
    return len(classes)


def is_complete_multipartite_plus_isolated(g: Graph) -> bool:
    """True also for the edgeless graph (one part, the rest isolated)."""
    return multipartite_parts(g) is not None


def is_complete_bipartite_plus_isolated(g: Graph) -> bool:
    """Requires at least one edge; the edgeless graph is reported separately."""
    return multipartite_parts(g) == 2


# enumeration


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by increasing edge bitset.

    ``start``/``stop`` select a half-open bitset range for partitioned scans.
    """
    if n > MAX_ENUM_ORDER:
        raise SizeError(f"enumeration limited to n <= {MAX_ENUM_ORDER}")
    total = 1 << pair_count(n)
    stop = total if stop is None else min(stop, total)
    for bits in range(start, stop):
        yield Graph(n, bits)


def bitset_ranges(n: int, parts: int) -> list[tuple[int, int]]:
    """Split ``0 .. 2**C(n,2)`` into ``parts`` contiguous half-open ranges."""
    total = 1 << pair_count(n)
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]
