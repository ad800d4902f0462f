"""Independent reference computations used by the tests.

None of these go through the package's own spectral or structural code
paths: eigenvalues come from a hand-written Jacobi iteration or from sympy,
structure from networkx or brute force, and the multipartite census is
generated from set partitions rather than recognized.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx
import numpy as np
import sympy


def jacobi_eigenvalues(a, sweeps: int = 100, tol: float = 1e-14) -> np.ndarray:
    """Cyclic Jacobi rotations on a symmetric matrix; eigenvalues largest first."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * max(1.0, np.linalg.norm(a)):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))[::-1]


def charpoly_eigenvalues(a) -> np.ndarray:
    """Roots of the characteristic polynomial computed in exact arithmetic."""
    m = sympy.Matrix(np.asarray(a, dtype=int).tolist())
    x = sympy.Symbol("x")
    roots = sympy.Poly(m.charpoly(x).as_expr(), x).real_roots()
    return np.sort(np.array([float(r.evalf(30)) for r in roots]))[::-1]


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_triangle_free(g) -> bool:
    return not any(
        g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )


def brute_chromatic(g) -> int:
    edges = list(g.edges())
    for c in range(1, g.n + 1):
        for col in itertools.product(range(c), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return c
    return g.n


def nx_multipartite_plus_isolated(g) -> tuple[bool, int]:
    """(is it, number of parts) via the complement of the non-isolated core."""
    h = to_nx(g)
    core = h.subgraph([v for v in h if h.degree(v) > 0])
    if core.number_of_nodes() == 0:
        return True, 0
    comp = nx.complement(core)
    comps = list(nx.connected_components(comp))
    cliques = all(
        comp.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2 for c in comps
    )
    return cliques, len(comps)


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def multipartite_census(n: int, parts: int | None = None) -> set[int]:
    """Edge bitsets of all labeled complete multipartite graphs plus isolated vertices.

    With ``parts`` given, only cores with exactly that many parts (and at
    least one edge) are produced; otherwise every part count, including the
    edgeless graph.
    """
    out = set()
    for r in range(n + 1):
        for core in itertools.combinations(range(n), r):
            for part in set_partitions(core):
                if parts is not None and len(part) != parts:
                    continue
                label = {v: i for i, p in enumerate(part) for v in p}
                bits = 0
                for j in range(n):
                    for i in range(j):
                        if i in label and j in label and label[i] != label[j]:
                            bits |= 1 << (j * (j - 1) // 2 + i)
                out.add(bits)
    if parts is None:
        out.add(0)
    return out


def brute_ky_fan_graph(g, k: int) -> float:
    """Ky Fan norm from a full SVD of the dense adjacency matrix."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = a[j, i] = 1
    return float(np.sum(np.linalg.svd(a, compute_uv=False)[:k]))


def brute_top_sum(g, k: int) -> float:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = a[j, i] = 1
    return float(np.sum(jacobi_eigenvalues(a)[:k]))
