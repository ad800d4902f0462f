"""Ky Fan k-norms of graphs and matrices: evaluation, bound certificates,
exhaustive extremal search and equality constructions."""

from .bounds import (
    Certificate,
    PreconditionError,
    check_cap,
    check_emna,
    check_ghk_spread,
    check_hoffman,
    check_komo,
    check_mo1,
    check_mo2,
    check_mo3,
    check_mohar_lower,
    check_thof,
    check_tmoh,
    check_tnik,
    check_ttfree,
    ghk_spread_floor,
    is_hadamard_class,
    is_plain,
    mohar_bounds,
)
from .extremal import (
    SearchResult,
    construct_blowup_extremal,
    construct_orthogonal_rows,
    construct_tnik_equality,
    search_tau,
    search_xi,
    sylvester,
)
from .graphs import (
    Graph,
    adjacency,
    blow_up,
    chromatic_number,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    empty,
    enumerate_labeled,
    graph6_decode,
    graph6_encode,
    is_complete_bipartite_plus_isolated,
    is_complete_multipartite_plus_isolated,
    is_triangle_free,
    path,
)
from .linalg import (
    SingularSpectrum,
    Tolerance,
    frobenius,
    kronecker,
    max_abs,
    ones,
    singular_values,
    sym_eigenvalues,
)
from .spectral import (
    GraphSpectrum,
    NormReport,
    energy,
    f2_via_eigen,
    graph_spectrum,
    ky_fan,
    spread,
    top_eigen_sum,
)
from .verify import SuiteReport, TheoremTally, verify_matrices, verify_suite

__version__ = "0.1.0"
