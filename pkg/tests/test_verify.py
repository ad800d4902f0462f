import numpy as np
import pytest

from kyfan.bounds import check_cap, check_tnik, check_ttfree, is_hadamard_class, is_plain
from kyfan.graphs import Graph, enumerate_labeled, graph6_decode, graph6_encode, is_triangle_free
from kyfan.linalg import ones
from kyfan.verify import matrix_from_code, verify_matrices, verify_suite
from oracles import multipartite_census


@pytest.fixture(scope="module")
def suite6():
    return verify_suite(6)


def _bits(names):
    return {graph6_decode(s).bits for s in names}


def test_suite_has_no_violations(suite6):
    assert suite6.ok
    assert suite6.scanned == sum(1 << (n * (n - 1) // 2) for n in range(1, 7))
    for t in suite6.tallies.values():
        assert t.violations == 0, t.key
        assert t.mismatches == [], t.key


def test_tmoh_equality_is_k4_only(suite6):
    assert suite6.equality_set("TMOH", 4) == {"C~"}
    # sigma_1 <= n - 1 < n, so k = 1 is never tight
    assert suite6.equality_set("TMOH", 1) == set()


def test_cap_census_matches_multipartite(suite6):
    eq = suite6.equality_set("CAP")
    for n in range(1, 7):
        got = {graph6_decode(s).bits for s in eq if graph6_decode(s).n == n}
        assert got == multipartite_census(n), n


def test_ttfree_census_matches_bipartite(suite6):
    tally = suite6.get("TTFREE")
    for n in range(2, 7):
        got = {graph6_decode(s).bits for s in tally.equality_graphs if graph6_decode(s).n == n}
        assert got == multipartite_census(n, parts=2) | {0}, n
    assert {graph6_decode(s).edge_count for s in tally.degenerate} == {0}
    assert len(tally.degenerate) == 5


def test_batch_tallies_match_scalar_certificates():
    rep = verify_suite(5, ["CAP", "TTFREE"], nmin=5)
    cap = {graph6_encode(g) for g in enumerate_labeled(5) if check_cap(g).is_equality}
    assert rep.equality_set("CAP") == cap
    tf = [g for g in enumerate_labeled(5) if is_triangle_free(g)]
    assert rep.get("TTFREE").checked == len(tf)
    assert rep.equality_set("TTFREE") == {graph6_encode(g) for g in tf if check_ttfree(g).is_equality}


def test_thread_count_does_not_change_result():
    a = verify_suite(6, ["CAP", "TMOH", "THOF"], threads=1)
    b = verify_suite(6, ["CAP", "TMOH", "THOF"], threads=3)
    assert {k: t.as_dict() for k, t in a.tallies.items()} == {k: t.as_dict() for k, t in b.tallies.items()}


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        verify_suite(3, ["NOPE"])


def test_matrix_from_code_row_major():
    np.testing.assert_array_equal(matrix_from_code(0b1001, 2, 2), np.eye(2))
    np.testing.assert_array_equal(matrix_from_code(0b110, 1, 3), [[0, 1, 1]])


def test_verify_matrices_3x3_against_scalar():
    rep = verify_matrices(3, 3)
    assert rep.ok
    for k in (1, 2, 3):
        expect = {c for c in range(512) if check_tnik(matrix_from_code(c, 3, 3), k).is_equality}
        assert set(rep.get("TNIK", k).equality_graphs) == expect


def test_verify_matrices_4x4_tnik_equality_set():
    rep = verify_matrices(4, 4, ["TNIK"])
    assert rep.ok
    eq = set(rep.get("TNIK", 4).equality_graphs)
    j = ones(4)
    expect = set()
    for c in range(1 << 16):
        a = matrix_from_code(c, 4, 4)
        if is_plain(2 * a - j)[0] and is_hadamard_class(j - 2 * a):
            expect.add(c)
    assert eq == expect and len(eq) == 24
    assert 0b1000010000100001 not in eq  # the identity


def test_verify_matrices_size_guard():
    with pytest.raises(Exception):
        verify_matrices(5, 4)
