"""Inequality evaluators with equality certificates.

Every ``check_*`` function returns a :class:`Certificate` holding both sides
of one inequality, the verdict, a numeric equality flag, and witnesses that
explain the equality structure (plainness residuals, singular value
multiplicities, chromatic number, ...). Where the equality case has a
structural characterization, the witness ``structural_equality`` records it
and ``equality_consistent`` says whether it agrees with the numeric flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graphs import (
    Graph,
    adjacency,
    chromatic_number,
    is_triangle_free,
    multipartite_parts,
)
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, frobenius, max_abs, singular_values
from .spectral import graph_spectrum

__all__ = [
    "THEOREMS",
    "Certificate",
    "PreconditionError",
    "check_cap",
    "check_emna",
    "check_ghk_spread",
    "check_hoffman",
    "check_komo",
    "check_mo1",
    "check_mo2",
    "check_mo3",
    "check_mohar_lower",
    "check_thof",
    "check_tmoh",
    "check_tnik",
    "check_ttfree",
    "ghk_spread_floor",
    "is_hadamard_class",
    "is_plain",
    "mohar_bounds",
    "sigma_profile",
]

THEOREMS = (
    "TNIK", "TMOH", "KOMO", "MO1", "MO2", "MO3", "CAP", "THOF", "TTFREE",
    "EMNA", "HOFFMAN", "GHK_SPREAD", "MOHAR_LOWER",
)

EMNA_COEFF = 0.5 + math.sqrt(5.0 / 12.0)


class PreconditionError(ValueError):
    """The input is outside the hypotheses of the inequality."""


@dataclass(frozen=True)
class Certificate:
    """Outcome of one inequality check.

    ``sense`` is ``"upper"`` for ``lhs <= rhs``, ``"lower"`` for
    ``lhs >= rhs``, and ``"attain"`` for reference values a particular graph
    may or may not reach (no universal claim).
    """

    theorem_id: str
    holds: bool
    is_equality: bool
    lhs: float
    rhs: float
    sense: str
    witnesses: dict = field(default_factory=dict)

    @property
    def gap(self) -> float:
        """Distance to the bound, positive when strict."""
        return self.rhs - self.lhs if self.sense == "upper" else self.lhs - self.rhs


def _certify(theorem_id, lhs, rhs, sense, tol, **witnesses) -> Certificate:
    lhs, rhs = float(lhs), float(rhs)
    holds = tol.le(lhs, rhs) if sense == "upper" else tol.ge(lhs, rhs)
    return Certificate(
        theorem_id=theorem_id,
        holds=holds,
        is_equality=abs(lhs - rhs) <= tol.eq,
        lhs=lhs,
        rhs=rhs,
        sense=sense,
        witnesses=witnesses,
    )


# singular value structure


def _nonzero_threshold(s1: float) -> float:
    return 1e-6 * s1 if s1 > 1.0 else 1e-9


def sigma_profile(sigma, k: int) -> dict:
    """Whether a spectrum has exactly ``k`` nonzero, equal singular values.

    A value counts as nonzero above ``1e-6 * s1`` (``1e-9`` once ``s1 <= 1``);
    the top ``k`` count as equal when ``s1 - sk <= 1e-6 * s1``.
    """
    s = np.asarray(sigma, dtype=float)
    s1 = float(s[0]) if len(s) else 0.0
    nonzero = int(np.sum(s > _nonzero_threshold(s1)))
    top_equal = bool(s1 - s[k - 1] <= 1e-6 * s1) if k <= len(s) else False
    return {
        "nonzero_count": nonzero,
        "top_k_equal": top_equal,
        "exact_k_equal": nonzero == k and top_equal,
        "multiplicities": _multiplicities(s),
    }


def _multiplicities(s: np.ndarray) -> str:
    """Run-length profile such as ``"3^1,1^3"`` (values to 6 significant digits)."""
    groups: list[list] = []
    scale = max(float(s[0]), 1.0) if len(s) else 1.0
    for v in np.where(s > _nonzero_threshold(float(s[0]) if len(s) else 0.0), s, 0.0):
        if groups and abs(groups[-1][0] - v) <= 1e-6 * scale:
            groups[-1][1] += 1
        else:
            groups.append([float(v), 1])
    return ",".join(f"{v:.6g}^{c}" for v, c in groups)


def is_plain(a, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, float]:
    """Whether the all-ones vectors are a top singular pair of ``a``.

    Returns the verdict and the signed residual
    ``sigma_1(a) - <j_m, a j_n> / sqrt(mn)``.
    """
    a = as_matrix(a)
    m, n = a.shape
    s1 = float(singular_values(a).values[0])
    residual = s1 - float(a.sum()) / math.sqrt(m * n)
    return abs(residual) <= tol.slack(s1), residual


def is_hadamard_class(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Entries of one common nonzero modulus and pairwise orthogonal rows."""
    a = as_matrix(a)
    if a.shape[0] > a.shape[1]:
        raise ValueError("Hadamard class is defined for rows <= cols")
    mags = np.abs(a)
    c = float(mags.max())
    if c == 0.0 or np.max(np.abs(mags - c)) > tol.slack(c):
        return False
    gram = a @ a.T
    off = gram - np.diag(np.diag(gram))
    return bool(np.max(np.abs(off)) <= tol.slack(c * c * a.shape[1]))


# matrix inequalities


def _is_01(a: np.ndarray, tol: Tolerance) -> bool:
    return bool(np.all((np.abs(a) <= tol.abs) | (np.abs(a - 1.0) <= tol.abs)))


def _orient(a: np.ndarray) -> tuple[np.ndarray, bool]:
    return (a.T, True) if a.shape[0] > a.shape[1] else (a, False)


def _check_k(k: int, upper: int) -> None:
    if not 1 <= k <= upper:
        raise PreconditionError(f"k={k} outside 1..{upper}")


def check_tnik(a, k: int, tol: Tolerance = DEFAULT_TOL, theorem_id: str = "TNIK") -> Certificate:
    """Ky Fan norm of a (0,1)-matrix against ``(1 + sqrt k) sqrt(mn) / 2``.

    The structural equality test is: ``2A - J`` plain and ``J - 2A`` with
    exactly ``k`` nonzero equal singular values. The plainness residual of
    ``J - 2A`` is reported too (``statement_form_equality``); on ``A = I_4``
    that form predicts equality where none occurs.
    """
    a = as_matrix(a)
    if not _is_01(a, tol):
        raise PreconditionError("entries must be 0 or 1")
    a, transposed = _orient(np.round(a))
    m, n = a.shape
    _check_k(k, m)
    sigma = singular_values(a).values
    lhs = float(np.sum(sigma[:k]))
    rhs = 0.5 * (1.0 + math.sqrt(k)) * math.sqrt(m * n)

    signed = 2.0 * a - 1.0  # 2A - J
    plain_pos, res_pos = is_plain(signed, tol)
    plain_neg, res_neg = is_plain(-signed, tol)
    prof = sigma_profile(singular_values(signed).values, k)
    structural = plain_pos and prof["exact_k_equal"]
    cert = _certify(
        theorem_id, lhs, rhs, "upper", tol,
        m=m, n=n, k=k, transposed=transposed,
        plain_residual_2A_minus_J=res_pos,
        plain_residual_J_minus_2A=res_neg,
        nonzero_sigma_J_minus_2A=prof["nonzero_count"],
        top_k_equal_J_minus_2A=prof["top_k_equal"],
        sigma_profile_J_minus_2A=prof["multiplicities"],
        sigma_profile=sigma_profile(sigma, k)["multiplicities"],
        structural_equality=structural,
        statement_form_equality=plain_neg and prof["exact_k_equal"],
    )
    cert.witnesses["equality_consistent"] = structural == cert.is_equality
    return cert


def check_mo1(a, k: int, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """``||A||_{F_k} <= sqrt(k) |A|_2``; equal iff exactly k equal nonzero sigmas.

    The zero matrix meets the bound as ``0 = 0`` and is flagged
    ``degenerate_zero``.
    """
    a = as_matrix(a)
    _check_k(k, min(a.shape))
    sigma = singular_values(a).values
    prof = sigma_profile(sigma, k)
    zero = not np.any(a)
    structural = prof["exact_k_equal"] or zero
    cert = _certify(
        "MO1", np.sum(sigma[:k]), math.sqrt(k) * frobenius(a), "upper", tol,
        k=k, nonzero_sigma=prof["nonzero_count"], top_k_equal=prof["top_k_equal"],
        sigma_profile=prof["multiplicities"], degenerate_zero=zero,
        structural_equality=structural,
    )
    cert.witnesses["equality_consistent"] = structural == cert.is_equality
    return cert


def _constant_modulus(a: np.ndarray, tol: Tolerance) -> bool:
    mags = np.abs(a)
    c = float(mags.max())
    return bool(np.max(c - mags) <= tol.slack(c))


def check_mo2(a, k: int, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """``||A||_{F_k} <= sqrt(kmn) |A|_inf``."""
    a = as_matrix(a)
    m, n = a.shape
    _check_k(k, min(m, n))
    sigma = singular_values(a).values
    prof = sigma_profile(sigma, k)
    const = _constant_modulus(a, tol)
    zero = not np.any(a)
    structural = (const and prof["exact_k_equal"]) or zero
    cert = _certify(
        "MO2", np.sum(sigma[:k]), math.sqrt(k * m * n) * max_abs(a), "upper", tol,
        k=k, constant_modulus=const, degenerate_zero=zero, nonzero_sigma=prof["nonzero_count"],
        top_k_equal=prof["top_k_equal"], sigma_profile=prof["multiplicities"],
        structural_equality=structural,
    )
    cert.witnesses["equality_consistent"] = structural == cert.is_equality
    return cert


def check_mo3(a, k: int, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """Nonnegative matrices: ``||A||_{F_k} <= (1 + sqrt k) sqrt(mn) |A|_inf / 2``.

    The equality structure is read off ``A / |A|_inf``, which must be a
    (0,1)-matrix passing the :func:`check_tnik` structural test.
    """
    a = as_matrix(a)
    if np.any(a < 0):
        raise PreconditionError("matrix has negative entries")
    m, n = a.shape
    _check_k(k, min(m, n))
    scale = max_abs(a)
    sigma = singular_values(a).values
    rhs = 0.5 * (1.0 + math.sqrt(k)) * math.sqrt(m * n) * scale
    wit = {"k": k, "scale": scale}
    if scale == 0.0:
        wit.update(degenerate_zero=True, scalar_multiple_of_01=True, structural_equality=True)
    else:
        scaled = a / scale
        is01 = _is_01(scaled, Tolerance(abs=max(tol.abs, 1e-12), rel=tol.rel, eq=tol.eq))
        wit.update(degenerate_zero=False, scalar_multiple_of_01=is01)
        if is01:
            inner = check_tnik(scaled, k, tol)
            for key in ("plain_residual_2A_minus_J", "plain_residual_J_minus_2A",
                        "sigma_profile_J_minus_2A", "structural_equality"):
                wit[key] = inner.witnesses[key]
        else:
            wit["structural_equality"] = False
    cert = _certify("MO3", np.sum(sigma[:k]), rhs, "upper", tol, **wit)
    cert.witnesses["equality_consistent"] = wit["structural_equality"] == cert.is_equality
    return cert


# graph inequalities


def _graph_input(g) -> Graph:
    if not isinstance(g, Graph):
        raise TypeError("expected a Graph")
    return g


def check_tmoh(g: Graph, k: int, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """``||G||_{F_k} <= (1 + sqrt k) n / 2`` for a graph of order ``n >= k``."""
    g = _graph_input(g)
    _check_k(k, g.n)
    return check_tnik(adjacency(g), k, tol, theorem_id="TMOH")


def check_komo(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """The order-``k`` case ``||G||_{F_k} <= (1 + sqrt k) k / 2``, with ``k = n``."""
    g = _graph_input(g)
    return check_tnik(adjacency(g), g.n, tol, theorem_id="KOMO")


def check_cap(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """Energy is at least twice the spectral radius."""
    g = _graph_input(g)
    mu = graph_spectrum(g).mu
    parts = multipartite_parts(g)
    cert = _certify(
        "CAP", np.sum(np.abs(mu)), 2.0 * mu[0], "lower", tol,
        n=g.n, multipartite_plus_isolated=parts is not None,
        parts=-1 if parts is None else parts,
        structural_equality=parts is not None,
    )
    cert.witnesses["equality_consistent"] = (parts is not None) == cert.is_equality
    return cert


def _require_edge(g: Graph) -> None:
    if g.edge_count == 0:
        raise PreconditionError("graph has no edges (chromatic number < 2)")


def check_thof(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """``||G||_{F_chi} >= 2 mu_1`` where ``chi`` is the chromatic number."""
    g = _graph_input(g)
    _require_edge(g)
    chi = chromatic_number(g)
    mu = graph_spectrum(g).mu
    sigma = np.sort(np.abs(mu))[::-1]
    parts = multipartite_parts(g)
    return _certify(
        "THOF", np.sum(sigma[:chi]), 2.0 * mu[0], "lower", tol,
        n=g.n, chi=chi, complete_chi_partite_plus_isolated=parts == chi,
    )


def check_hoffman(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """The ``chi - 1`` most negative eigenvalues outweigh ``mu_1`` in modulus."""
    g = _graph_input(g)
    _require_edge(g)
    chi = chromatic_number(g)
    mu = graph_spectrum(g).mu
    return _certify(
        "HOFFMAN", np.sum(np.abs(mu[g.n - chi + 1:])), mu[0], "lower", tol,
        n=g.n, chi=chi,
    )


def check_ttfree(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """Triangle-free graphs: ``||G||_{F_2} <= 2 sqrt(m)`` with ``m`` edges.

    The edgeless graph meets the bound as ``0 = 0``; it is flagged with
    ``degenerate_edgeless`` rather than counted as complete bipartite.
    """
    g = _graph_input(g)
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if not is_triangle_free(g):
        raise PreconditionError("graph contains a triangle")
    mu = graph_spectrum(g).mu
    sigma = np.sort(np.abs(mu))[::-1]
    m = g.edge_count
    bip = multipartite_parts(g) == 2
    cert = _certify(
        "TTFREE", sigma[0] + sigma[1], 2.0 * math.sqrt(m), "upper", tol,
        n=g.n, m=m, bipartite_plus_isolated=bip, degenerate_edgeless=m == 0,
        structural_equality=bip or m == 0,
    )
    cert.witnesses["equality_consistent"] = (bip or m == 0) == cert.is_equality
    return cert


def check_emna(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """``|mu_1| + |mu_2| <= (1/2 + sqrt(5/12)) n``."""
    g = _graph_input(g)
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    mu = graph_spectrum(g).mu
    return _certify("EMNA", abs(mu[0]) + abs(mu[1]), EMNA_COEFF * g.n, "upper", tol, n=g.n)


# reference values without a universal claim


def mohar_bounds(k: int, eps: float = 0.0) -> tuple[float, float]:
    """Normalized lower/upper reference values for the top-k eigenvalue sum.

    ``lower = (1/2 + sqrt k - eps k^(-2/5)) / 2``, ``upper = (1 + sqrt k) / 2``.
    """
    if k < 1 or eps < 0:
        raise ValueError("need k >= 1 and eps >= 0")
    rk = math.sqrt(k)
    return 0.5 * (0.5 + rk - eps * k ** -0.4), 0.5 * (1.0 + rk)


def ghk_spread_floor(n: int) -> float:
    """Spread reached by the best known construction on ``n`` vertices."""
    if n < 2:
        raise ValueError("need n >= 2")
    return (2 * n - 1) / math.sqrt(3.0)


def check_ghk_spread(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """Does ``g`` reach the ``(2n - 1)/sqrt 3`` spread value?"""
    g = _graph_input(g)
    mu = graph_spectrum(g).mu
    return _certify("GHK_SPREAD", mu[0] - mu[-1], ghk_spread_floor(g.n), "attain", tol, n=g.n)


def check_mohar_lower(g: Graph, k: int, eps: float = 0.0, tol: Tolerance = DEFAULT_TOL) -> Certificate:
    """Does ``(mu_1 + ... + mu_k) / n`` reach the normalized lower value?"""
    g = _graph_input(g)
    _check_k(k, g.n)
    mu = graph_spectrum(g).mu
    lower, upper = mohar_bounds(k, eps)
    return _certify(
        "MOHAR_LOWER", np.sum(mu[:k]) / g.n, lower, "attain", tol,
        n=g.n, k=k, eps=eps, upper=upper, eps_term=eps * k ** -0.4,
    )
