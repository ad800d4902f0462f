"""Exhaustive verification of the inequalities over small graphs and matrices.

Both scans split the bitset range into disjoint chunks, evaluate each chunk
independently and merge the partial tallies in range order, so the outcome
does not depend on how many workers were used.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .batch import GraphBatch, chunks, sigma_profile_batch
from .bounds import EMNA_COEFF
from .graphs import MAX_ENUM_ORDER, SizeError, pair_count
from .linalg import DEFAULT_TOL, Tolerance

__all__ = [
    "GRAPH_THEOREMS",
    "MATRIX_THEOREMS",
    "SuiteReport",
    "TheoremTally",
    "default_threads",
    "verify_matrices",
    "verify_suite",
]

# theorems with one tally per k
K_INDEXED = {"TNIK", "TMOH", "MO1", "MO2", "MO3"}
GRAPH_THEOREMS = ("CAP", "EMNA", "HOFFMAN", "KOMO", "MO1", "MO2", "MO3", "THOF", "TMOH", "TNIK", "TTFREE")
MATRIX_THEOREMS = ("MO1", "MO2", "MO3", "TNIK")
MAX_MATRIX_ENTRIES = 16


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KYFAN_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class TheoremTally:
    """Aggregated outcome of one theorem (at one ``k``) over a scan.

    ``structural`` counts inputs whose structural equality characterization
    fires; ``mismatches`` lists inputs where it disagrees with the numeric
    equality flag. Both stay empty for theorems without such a test.
    """

    theorem_id: str
    k: int | None = None
    checked: int = 0
    violations: int = 0
    equalities: int = 0
    skipped: int = 0
    max_violation: float = 0.0
    equality_graphs: list = field(default_factory=list)
    structural: int = 0
    mismatches: list = field(default_factory=list)
    degenerate: list = field(default_factory=list)

    @property
    def key(self) -> str:
        return self.theorem_id if self.k is None else f"{self.theorem_id}[k={self.k}]"

    def merge(self, other: TheoremTally) -> None:
        self.checked += other.checked
        self.violations += other.violations
        self.equalities += other.equalities
        self.skipped += other.skipped
        self.max_violation = max(self.max_violation, other.max_violation)
        self.equality_graphs.extend(other.equality_graphs)
        self.structural += other.structural
        self.mismatches.extend(other.mismatches)
        self.degenerate.extend(other.degenerate)

    def finalize(self) -> None:
        for lst in (self.equality_graphs, self.mismatches, self.degenerate):
            lst.sort()

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "k": self.k,
            "checked": self.checked,
            "violations": self.violations,
            "equalities": self.equalities,
            "skipped": self.skipped,
            "max_violation": self.max_violation,
            "equality_graphs": list(self.equality_graphs),
            "structural": self.structural,
            "mismatches": list(self.mismatches),
            "degenerate": list(self.degenerate),
        }


@dataclass
class SuiteReport:
    nmax: int
    theorems: tuple[str, ...]
    tallies: dict[str, TheoremTally]
    scanned: int
    tolerance: Tolerance

    @property
    def violations(self) -> int:
        return sum(t.violations for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def get(self, theorem_id: str, k: int | None = None) -> TheoremTally:
        key = theorem_id if k is None else f"{theorem_id}[k={k}]"
        return self.tallies[key]

    def equality_set(self, theorem_id: str, k: int | None = None) -> set[str]:
        return set(self.get(theorem_id, k).equality_graphs)


def _tally(out: dict, theorem_id: str, k, label, lhs, rhs, sense, tol, mask=None,
           structural=None, degenerate=None) -> None:
    """Fold one vectorized theorem evaluation into ``out``.

    ``label(mask)`` turns a boolean row mask into printable identifiers.
    """
    t = out.setdefault((theorem_id, k), TheoremTally(theorem_id, k))
    if mask is None:
        mask = np.ones(lhs.shape, dtype=bool)
    t.skipped += int((~mask).sum())
    lhs, rhs = lhs[mask], rhs[mask]
    idx = np.flatnonzero(mask)
    slack = tol.abs + tol.rel * np.maximum(np.abs(lhs), np.abs(rhs))
    excess = (lhs - rhs) if sense == "upper" else (rhs - lhs)
    t.checked += len(lhs)
    t.violations += int((excess > slack).sum())
    if len(excess):
        t.max_violation = max(t.max_violation, float(max(excess.max(), 0.0)))
    eq = np.abs(lhs - rhs) <= tol.eq
    t.equalities += int(eq.sum())
    sel = np.zeros(mask.shape, dtype=bool)
    sel[idx[eq]] = True
    t.equality_graphs.extend(label(sel))
    if structural is not None:
        st = structural[mask]
        t.structural += int(st.sum())
        bad = np.zeros(mask.shape, dtype=bool)
        bad[idx[st != eq]] = True
        t.mismatches.extend(label(bad))
    if degenerate is not None:
        t.degenerate.extend(label(degenerate & mask))


def _scan_graph_chunk(n: int, lo: int, hi: int, theorems, tol: Tolerance) -> dict:
    b = GraphBatch(n, lo, hi)
    out: dict = {}
    label = b.graph6
    mu = b.mu
    has_edge = b.edge_count > 0

    if "CAP" in theorems:
        _tally(out, "CAP", None, label, b.ky_fan[:, -1], 2.0 * mu[:, 0], "lower", tol,
               structural=b.parts >= 0)
    if "EMNA" in theorems and n >= 2:
        _tally(out, "EMNA", None, label, np.abs(mu[:, 0]) + np.abs(mu[:, 1]),
               np.full(len(b), EMNA_COEFF * n), "upper", tol)
    if {"THOF", "HOFFMAN"} & set(theorems):
        chi = b.chi
        rows = np.arange(len(b))
        if "THOF" in theorems:
            lhs = b.ky_fan[rows, np.maximum(chi, 1) - 1]
            _tally(out, "THOF", None, label, lhs, 2.0 * mu[:, 0], "lower", tol, mask=has_edge)
        if "HOFFMAN" in theorems:
            # sum of |mu| over positions n-chi+1 .. n-1 (the chi-1 smallest)
            tail = np.cumsum(np.abs(mu[:, ::-1]), axis=1)
            lhs = tail[rows, np.maximum(chi - 2, 0)]
            lhs = np.where(chi >= 2, lhs, 0.0)
            _tally(out, "HOFFMAN", None, label, lhs, mu[:, 0], "lower", tol, mask=has_edge)
    if "TTFREE" in theorems and n >= 2:
        m = b.edge_count
        _tally(out, "TTFREE", None, label, b.ky_fan[:, 1], 2.0 * np.sqrt(m), "upper", tol,
               mask=b.triangle_free, structural=(b.parts == 2) | (m == 0), degenerate=m == 0)
    if {"KOMO", "TMOH", "TNIK"} & set(theorems):
        plain = np.abs(b.signed_plain_residual) <= tol.abs + tol.rel * b.signed_sigma[:, 0]
    if "KOMO" in theorems:
        _tally(out, "KOMO", None, label, b.ky_fan[:, -1],
               np.full(len(b), 0.5 * (1 + math.sqrt(n)) * n), "upper", tol,
               structural=plain & sigma_profile_batch(b.signed_sigma, n))
    for tid in ("TMOH", "TNIK"):
        if tid not in theorems:
            continue
        for k in range(1, n + 1):
            _tally(out, tid, k, label, b.ky_fan[:, k - 1],
                   np.full(len(b), 0.5 * (1 + math.sqrt(k)) * n), "upper", tol,
                   structural=plain & sigma_profile_batch(b.signed_sigma, k))
    if {"MO1", "MO2", "MO3"} & set(theorems):
        _matrix_family_tallies(out, theorems, b.sigma, b.adjacency, label, tol,
                               nonnegative=True)
    return out


def _matrix_family_tallies(out, theorems, sigma, mats, label, tol, nonnegative) -> None:
    """MO1/MO2/MO3 over a stack of matrices with precomputed singular values."""
    N, m, n = mats.shape
    frob = np.sqrt(np.sum(mats * mats, axis=(1, 2)))
    amax = np.max(np.abs(mats), axis=(1, 2))
    zero = amax == 0
    const = np.max(amax[:, None, None] - np.abs(mats), axis=(1, 2)) <= tol.abs + tol.rel * amax
    ky = np.cumsum(sigma, axis=1)
    for k in range(1, min(m, n) + 1):
        prof = sigma_profile_batch(sigma, k)
        if "MO1" in theorems:
            _tally(out, "MO1", k, label, ky[:, k - 1], math.sqrt(k) * frob, "upper", tol,
                   structural=prof | zero)
        if "MO2" in theorems:
            _tally(out, "MO2", k, label, ky[:, k - 1], math.sqrt(k * m * n) * amax, "upper", tol,
                   structural=(const & prof) | zero)
        if "MO3" in theorems and nonnegative:
            _tally(out, "MO3", k, label, ky[:, k - 1],
                   0.5 * (1 + math.sqrt(k)) * math.sqrt(m * n) * amax, "upper", tol)


def _run(tasks, worker, threads: int) -> dict:
    """Evaluate ``tasks`` (possibly in parallel) and merge in task order."""
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda t: worker(*t), tasks))
    else:
        parts = [worker(*t) for t in tasks]
    merged: dict = {}
    for part in parts:
        for key, tally in part.items():
            if key in merged:
                merged[key].merge(tally)
            else:
                merged[key] = tally
    for tally in merged.values():
        tally.finalize()
    return merged


def _normalize(theorems, allowed) -> tuple[str, ...]:
    if theorems is None or theorems == "all" or theorems == ("all",):
        return tuple(allowed)
    if isinstance(theorems, str):
        theorems = theorems.split(",")
    names = tuple(sorted({t.strip().upper() for t in theorems if t.strip()}))
    unknown = [t for t in names if t not in allowed]
    if unknown:
        raise ValueError(f"not verifiable by exhaustive scan: {', '.join(unknown)}")
    return names


def verify_suite(nmax: int, theorems=None, tol: Tolerance = DEFAULT_TOL,
                 threads: int | None = None, nmin: int = 1) -> SuiteReport:
    """Check the graph inequalities on every labeled graph of order ``nmin..nmax``.

    ``theorems`` is an iterable of ids, a comma-separated string, or
    ``None``/``"all"`` for every id in :data:`GRAPH_THEOREMS`.
    """
    if nmax > MAX_ENUM_ORDER:
        raise SizeError(f"nmax={nmax} exceeds {MAX_ENUM_ORDER}")
    names = _normalize(theorems, GRAPH_THEOREMS)
    threads = default_threads() if threads is None else max(1, threads)
    tasks = []
    scanned = 0
    for n in range(nmin, nmax + 1):
        total = 1 << pair_count(n)
        scanned += total
        tasks.extend((n, lo, hi, names, tol) for lo, hi in chunks(0, total))
    merged = _run(tasks, _scan_graph_chunk, threads)
    tallies = {t.key: t for t in sorted(merged.values(), key=lambda t: (t.theorem_id, t.k or 0))}
    return SuiteReport(nmax=nmax, theorems=names, tallies=tallies, scanned=scanned, tolerance=tol)


# (0,1)-matrices


def matrix_from_code(code: int, m: int, n: int) -> np.ndarray:
    """Row-major bit ``i*n + j`` of ``code`` is entry ``(i, j)``."""
    return ((code >> np.arange(m * n)) & 1).reshape(m, n).astype(float)


def _scan_matrix_chunk(m: int, n: int, lo: int, hi: int, theorems, tol: Tolerance) -> dict:
    codes = np.arange(lo, hi, dtype=np.int64)
    mats = ((codes[:, None] >> np.arange(m * n)) & 1).reshape(-1, m, n).astype(float)
    if m > n:
        mats = mats.transpose(0, 2, 1)
    rows, cols = mats.shape[1:]
    out: dict = {}

    def label(mask):
        return [int(c) for c in codes[mask]]

    sigma = np.linalg.svd(mats, compute_uv=False)
    if "TNIK" in theorems:
        signed = 2.0 * mats - 1.0
        ssig = np.linalg.svd(signed, compute_uv=False)
        residual = ssig[:, 0] - signed.sum(axis=(1, 2)) / math.sqrt(rows * cols)
        plain = np.abs(residual) <= tol.abs + tol.rel * ssig[:, 0]
        ky = np.cumsum(sigma, axis=1)
        for k in range(1, rows + 1):
            _tally(out, "TNIK", k, label, ky[:, k - 1],
                   np.full(len(codes), 0.5 * (1 + math.sqrt(k)) * math.sqrt(rows * cols)),
                   "upper", tol, structural=plain & sigma_profile_batch(ssig, k))
    _matrix_family_tallies(out, theorems, sigma, mats, label, tol, nonnegative=True)
    return out


def verify_matrices(m: int, n: int, theorems=None, tol: Tolerance = DEFAULT_TOL,
                    threads: int | None = None) -> SuiteReport:
    """Check the matrix inequalities on all ``2**(m*n)`` (0,1)-matrices.

    Equality lists hold row-major bit codes (see :func:`matrix_from_code`).
    """
    if m * n > MAX_MATRIX_ENTRIES:
        raise SizeError(f"{m}x{n} has more than {MAX_MATRIX_ENTRIES} entries")
    names = _normalize(theorems, MATRIX_THEOREMS)
    threads = default_threads() if threads is None else max(1, threads)
    total = 1 << (m * n)
    tasks = [(m, n, lo, hi, names, tol) for lo, hi in chunks(0, total)]
    merged = _run(tasks, _scan_matrix_chunk, threads)
    tallies = {t.key: t for t in sorted(merged.values(), key=lambda t: (t.theorem_id, t.k or 0))}
    return SuiteReport(nmax=max(m, n), theorems=names, tallies=tallies, scanned=total, tolerance=tol)
