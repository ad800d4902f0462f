"""Ky Fan norms and the graph functionals built from adjacency spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, adjacency
from .linalg import DEFAULT_TOL, SingularSpectrum, Tolerance, as_matrix, singular_values, sym_eigenvalues

__all__ = [
    "GraphSpectrum",
    "NormReport",
    "energy",
    "f2_via_eigen",
    "graph_spectrum",
    "ky_fan",
    "ky_fan_values",
    "spread",
    "top_eigen_sum",
]


@dataclass(frozen=True)
class GraphSpectrum:
    """Adjacency eigenvalues, largest first."""

    mu: np.ndarray

    @property
    def n(self) -> int:
        return len(self.mu)


@dataclass(frozen=True)
class NormReport:
    k: int
    value: float
    spectrum: SingularSpectrum
    top_eigen_sum: float | None = None


def graph_spectrum(g: Graph) -> GraphSpectrum:
    return GraphSpectrum(sym_eigenvalues(adjacency(g)))


def _is_symmetric(a: np.ndarray, tol: Tolerance) -> bool:
    return a.shape[0] == a.shape[1] and np.max(np.abs(a - a.T)) <= tol.abs


def ky_fan(a, k: int, tol: Tolerance = DEFAULT_TOL) -> NormReport:
    """Sum of the ``k`` largest singular values of ``a``.

    Graphs are accepted and replaced by their adjacency matrix. For square
    symmetric input the report also carries the sum of the ``k`` largest
    eigenvalues.
    """
    if isinstance(a, Graph):
        a = adjacency(a)
    a = as_matrix(a)
    spec = singular_values(a)
    if not 1 <= k <= len(spec):
        raise ValueError(f"k={k} outside 1..{len(spec)}")
    top = None
    if _is_symmetric(a, tol):
        top = float(np.sum(sym_eigenvalues(a, tol)[:k]))
    return NormReport(k=k, value=float(np.sum(spec.values[:k])), spectrum=spec, top_eigen_sum=top)


def ky_fan_values(sigma) -> np.ndarray:
    """All Ky Fan norms at once: entry ``k-1`` is the k-norm.

    ``sigma`` may be a stack of spectra (last axis); it is sorted here.
    """
    s = -np.sort(-np.abs(np.asarray(sigma, dtype=float)), axis=-1)
    return np.cumsum(s, axis=-1)


def _spectrum(x) -> np.ndarray:
    if isinstance(x, Graph):
        return graph_spectrum(x).mu
    if isinstance(x, GraphSpectrum):
        return x.mu
    return -np.sort(-np.asarray(x, dtype=float))


def energy(g: Graph) -> float:
    return float(np.sum(np.abs(_spectrum(g))))


def f2_via_eigen(spec) -> float:
    """Ky Fan 2-norm of a graph from its two extreme-modulus candidates."""
    mu = _spectrum(spec)
    if len(mu) < 2:
        raise ValueError("need at least two eigenvalues")
    return float(max(abs(mu[0]) + abs(mu[1]), abs(mu[0]) + abs(mu[-1])))


def spread(spec) -> float:
    mu = _spectrum(spec)
    return float(mu[0] - mu[-1])


def top_eigen_sum(spec, k: int) -> float:
    mu = _spectrum(spec)
    if not 1 <= k <= len(mu):
        raise ValueError(f"k={k} outside 1..{len(mu)}")
    return float(np.sum(mu[:k]))
