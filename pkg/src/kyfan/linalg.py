"""Dense real linear algebra used throughout the package.

Matrices are plain 2-D ``float64`` numpy arrays. The heavy lifting goes to
LAPACK through :mod:`numpy.linalg`; this module adds input validation, the
sorting/clamping conventions, and the all-ones objects.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "DimensionError",
    "SingularSpectrum",
    "Tolerance",
    "as_matrix",
    "frobenius",
    "kronecker",
    "max_abs",
    "ones",
    "ones_vector",
    "read_csv",
    "singular_values",
    "sym_eigenvalues",
    "write_csv",
]

# guards np.kron against accidental huge allocations
MAX_ENTRIES = 1 << 24


class DimensionError(ValueError):
    """Raised for shape, symmetry or finiteness violations."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair plus the looser equality tolerance.

    ``abs`` and ``rel`` decide inequality verdicts; ``eq`` decides whether two
    sides of an inequality are declared equal.
    """

    abs: float = 1e-9
    rel: float = 1e-9
    eq: float = 1e-6

    def __post_init__(self):
        for name in ("abs", "rel", "eq"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"tolerance {name}={v!r} must be finite and non-negative")

    def slack(self, *scale: float) -> float:
        """Allowed deviation for quantities of the given magnitude."""
        return self.abs + self.rel * max((abs(s) for s in scale), default=0.0)

    def le(self, lhs: float, rhs: float) -> bool:
        return lhs <= rhs + self.slack(lhs, rhs)

    def ge(self, lhs: float, rhs: float) -> bool:
        return lhs >= rhs - self.slack(lhs, rhs)

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.slack(a, b)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values sorted non-increasingly, with the source shape."""

    values: np.ndarray
    source_dims: tuple[int, int]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def as_matrix(a) -> np.ndarray:
    """Validate and convert ``a`` to a finite 2-D float64 array."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionError("matrix has NaN or infinite entries")
    return arr


def sym_eigenvalues(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, largest first.

    Raises
    ------
    DimensionError
        If ``a`` is not square or deviates from symmetry by more than
        ``tol.abs`` in some entry.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.T)) > tol.abs:
        raise DimensionError("matrix is not symmetric")
    return np.linalg.eigvalsh(a)[::-1].copy()


def singular_values(a) -> SingularSpectrum:
    """Singular values of ``a`` as a :class:`SingularSpectrum`."""
    a = as_matrix(a)
    s = np.linalg.svd(a, compute_uv=False)
    s = np.maximum(s, 0.0)
    return SingularSpectrum(values=s, source_dims=a.shape)


def frobenius(a) -> float:
    return float(np.sqrt(np.sum(np.square(as_matrix(a)))))


def max_abs(a) -> float:
    return float(np.max(np.abs(as_matrix(a))))


def kronecker(b, c) -> np.ndarray:
    b, c = as_matrix(b), as_matrix(c)
    if b.size * c.size > MAX_ENTRIES:
        raise DimensionError(f"Kronecker product would have {b.size * c.size} entries")
    return np.kron(b, c)


def ones(m: int, n: int | None = None) -> np.ndarray:
    """The all-ones matrix of size ``m x n`` (square when ``n`` is omitted)."""
    n = m if n is None else n
    if m < 1 or n < 1:
        raise DimensionError(f"ones({m}, {n}): dimensions must be positive")
    return np.ones((m, n))


def ones_vector(n: int) -> np.ndarray:
    if n < 1:
        raise DimensionError("vector length must be positive")
    return np.ones(n)


def read_csv(source) -> np.ndarray:
    """Read a headerless comma-separated matrix from a path or text stream.

    Ragged rows raise :class:`DimensionError`.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([float(x) for x in line.split(",")])
        except ValueError as exc:
            raise DimensionError(f"line {lineno}: {exc}") from None
    if not rows:
        raise DimensionError("empty matrix file")
    width = len(rows[0])
    for lineno, row in enumerate(rows, 1):
        if len(row) != width:
            raise DimensionError(f"ragged row {lineno}: {len(row)} entries, expected {width}")
    return as_matrix(rows)


def _fmt(x: float) -> str:
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def write_csv(a, dest=None) -> str:
    """Serialize ``a`` as CSV; write to ``dest`` (path or stream) if given."""
    a = as_matrix(a)
    buf = io.StringIO()
    for row in a:
        buf.write(",".join(_fmt(x) for x in row))
        buf.write("\n")
    text = buf.getvalue()
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    elif dest is not None:
        dest.write(text)
    return text
