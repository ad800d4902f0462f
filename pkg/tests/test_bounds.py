import math

import numpy as np
import pytest

from kyfan.bounds import (
    EMNA_COEFF,
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
    sigma_profile,
)
from kyfan.extremal import sylvester
from kyfan.graphs import (
    adjacency,
    blow_up,
    complete,
    complete_bipartite,
    cycle,
    empty,
    enumerate_labeled,
    is_triangle_free,
)
from kyfan.linalg import ones

H4 = sylvester(4)
K4 = adjacency(complete(4))


def test_is_plain_examples():
    assert is_plain(ones(3, 4)) == (True, pytest.approx(0, abs=1e-12))
    ok, res = is_plain(ones(4) - 2 * np.eye(4))
    assert ok and res == pytest.approx(0, abs=1e-12)
    # <j, H j>/4 = 1 while sigma_1 = 2
    assert H4.sum() / 4 == 1
    ok, res = is_plain(H4)
    assert not ok and res == pytest.approx(1)


def test_is_hadamard_class_examples():
    assert is_hadamard_class(H4)
    m = ones(4) - 2 * np.eye(4)
    assert np.all(m @ m.T - np.diag(np.diag(m @ m.T)) == 0)
    assert is_hadamard_class(m)
    assert not is_hadamard_class(ones(2, 2))
    assert not is_hadamard_class(np.zeros((2, 2)))
    assert is_hadamard_class(3 * H4[:2])


def test_sigma_profile():
    p = sigma_profile([2, 2, 2, 2], 4)
    assert p["exact_k_equal"] and p["multiplicities"] == "2^4"
    assert not sigma_profile([3, 1, 1, 1], 4)["exact_k_equal"]
    assert sigma_profile([5, 1e-12, 0], 1)["exact_k_equal"]


# (0,1)-matrix bound


def test_tnik_k4_equality():
    c = check_tnik(K4, 4)
    assert c.holds and c.is_equality
    assert c.lhs == pytest.approx(6) and c.rhs == pytest.approx(6)
    assert c.witnesses["structural_equality"]
    assert c.witnesses["equality_consistent"]


def test_tnik_identity_counterexample():
    c = check_tnik(np.eye(4), 4)
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(4)
    # J - 2I is a plain Hadamard matrix, so the literal statement form fires
    assert is_plain(ones(4) - 2 * np.eye(4))[0] and is_hadamard_class(ones(4) - 2 * np.eye(4))
    assert c.witnesses["statement_form_equality"]
    assert not c.witnesses["structural_equality"]
    assert c.witnesses["plain_residual_2A_minus_J"] == pytest.approx(4)


def test_tnik_zero_matrix_and_orientation():
    c = check_tnik(np.zeros((2, 3)), 1)
    assert c.holds and c.lhs == 0 and c.rhs == pytest.approx(math.sqrt(6))
    c = check_tnik(np.zeros((3, 2)), 2)
    assert c.witnesses["transposed"] and c.witnesses["m"] == 2


def test_tnik_preconditions():
    with pytest.raises(PreconditionError):
        check_tnik([[0.5, 1]], 1)
    with pytest.raises(PreconditionError):
        check_tnik(np.ones((2, 5)), 3)


def test_tmoh_examples():
    c = check_tmoh(complete(4), 4)
    assert c.is_equality and c.rhs == pytest.approx(0.5 * 3 * 4)
    c = check_tmoh(blow_up(complete(4), 2), 4)
    assert c.is_equality and c.lhs == pytest.approx(12) and c.rhs == pytest.approx(12)
    c = check_tmoh(empty(5), 2)
    assert c.holds and not c.is_equality and c.lhs == 0
    assert c.rhs == pytest.approx(0.5 * (1 + math.sqrt(2)) * 5)
    with pytest.raises(PreconditionError):
        check_tmoh(empty(3), 4)


def test_komo_examples():
    assert check_komo(complete(4)).is_equality
    c = check_komo(cycle(5))
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(6.472, abs=1e-3)
    assert c.rhs == pytest.approx(0.5 * (1 + math.sqrt(5)) * 5)
    assert c.rhs == pytest.approx(8.09, abs=1e-2)
    c = check_komo(empty(3))
    assert c.holds and not c.is_equality


def test_mo1_examples():
    c = check_mo1(ones(3, 4), 1)
    assert c.is_equality and c.lhs == pytest.approx(math.sqrt(12))
    c = check_mo1(H4, 4)
    assert c.is_equality and c.lhs == pytest.approx(8)
    c = check_mo1(K4, 2)
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(4) and c.rhs == pytest.approx(math.sqrt(2) * math.sqrt(12))


def test_mo2_examples():
    c = check_mo2(H4, 4)
    assert c.is_equality and c.rhs == pytest.approx(8)
    c = check_mo2(np.kron(H4, ones(2, 3)), 4)
    assert c.is_equality and c.witnesses["constant_modulus"]
    c = check_mo2(K4, 4)
    assert c.holds and not c.is_equality and c.lhs == pytest.approx(6) and c.rhs == pytest.approx(8)


def test_mo_zero_matrix_degenerate():
    for check in (check_mo1, check_mo2, check_mo3):
        c = check(np.zeros((2, 2)), 1)
        assert c.is_equality and c.witnesses["degenerate_zero"]
        assert c.witnesses["equality_consistent"]


def test_mo3_examples():
    c = check_mo3(3 * K4, 4)
    assert c.is_equality and c.lhs == pytest.approx(18) and c.rhs == pytest.approx(18)
    assert check_mo3(K4, 4).is_equality
    c = check_mo3(np.array([[0.5, 1], [1, 0]]), 1)
    assert c.holds and not c.is_equality
    assert not c.witnesses["scalar_multiple_of_01"]
    with pytest.raises(PreconditionError):
        check_mo3(-K4, 2)


@pytest.mark.parametrize("scale", [1e-3, 0.5, 2.0, 7.0, 1e3])
def test_mo3_scale_invariant_verdicts(scale, rng):
    for _ in range(20):
        a = rng.integers(0, 2, size=(3, 4)).astype(float)
        for k in range(1, 4):
            base, scaled = check_mo3(a, k), check_mo3(scale * a, k)
            assert (base.holds, base.is_equality) == (scaled.holds, scaled.is_equality)


# graph bounds


def test_cap_examples():
    c = check_cap(complete_bipartite(2, 3))
    assert c.is_equality and c.lhs == pytest.approx(2 * math.sqrt(6))
    c = check_cap(complete(4))
    assert c.is_equality and c.lhs == pytest.approx(6) and c.rhs == pytest.approx(6)
    c = check_cap(cycle(5))
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(6.472, abs=1e-3) and c.rhs == pytest.approx(4)


def test_thof_examples():
    c = check_thof(complete_bipartite(3, 3))
    assert c.is_equality and c.witnesses["chi"] == 2 and c.lhs == pytest.approx(6)
    c = check_thof(complete(4))
    assert c.is_equality and c.witnesses["chi"] == 4
    c = check_thof(cycle(5))
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(2 + 2 * 1.618034, abs=1e-5)
    with pytest.raises(PreconditionError):
        check_thof(empty(3))


def test_hoffman_examples():
    c = check_hoffman(complete_bipartite(3, 3))
    assert c.is_equality and c.lhs == pytest.approx(3)
    c = check_hoffman(complete(4))
    assert c.is_equality and c.lhs == pytest.approx(3)
    c = check_hoffman(cycle(5))
    assert c.holds and c.lhs == pytest.approx(2 * 1.618034, abs=1e-5)
    with pytest.raises(PreconditionError):
        check_hoffman(empty(2))


def test_ttfree_examples():
    c = check_ttfree(complete_bipartite(2, 3))
    assert c.is_equality and c.rhs == pytest.approx(2 * math.sqrt(6))
    c = check_ttfree(cycle(5))
    assert c.holds and not c.is_equality
    assert c.lhs == pytest.approx(3.618, abs=1e-3) and c.rhs == pytest.approx(4.472, abs=1e-3)
    c = check_ttfree(complete(2))
    assert c.is_equality and c.lhs == pytest.approx(2)
    c = check_ttfree(empty(3))
    assert c.is_equality and c.witnesses["degenerate_edgeless"]
    assert not c.witnesses["bipartite_plus_isolated"]
    with pytest.raises(PreconditionError):
        check_ttfree(complete(4))


def test_emna_examples():
    c = check_emna(complete(4))
    assert c.holds and c.lhs == pytest.approx(4) and c.rhs == pytest.approx(4.58199, abs=1e-5)
    assert check_emna(empty(2)).lhs == 0
    c = check_emna(complete_bipartite(3, 3))
    assert c.holds and c.lhs == pytest.approx(3) and c.rhs == pytest.approx(6.87, abs=1e-2)
    assert EMNA_COEFF < 1.146


def test_mohar_bounds():
    assert mohar_bounds(4) == pytest.approx((1.25, 1.5))
    assert mohar_bounds(1) == pytest.approx((0.75, 1.0))
    for k in range(1, 50):
        lo, hi = mohar_bounds(k)
        assert hi - lo == pytest.approx(0.25, abs=1e-12)
    lo, _ = mohar_bounds(32, eps=1.0)
    assert lo == pytest.approx(0.5 * (0.5 + math.sqrt(32) - 32 ** -0.4), abs=1e-12)
    with pytest.raises(ValueError):
        mohar_bounds(0)


def test_mohar_upper_matches_tmoh_coefficient():
    for k in range(1, 8):
        _, hi = mohar_bounds(k)
        assert check_tmoh(complete(k), k).rhs == pytest.approx(hi * k, abs=1e-12)


def test_ghk_spread_floor():
    assert ghk_spread_floor(2) == pytest.approx(math.sqrt(3), abs=1e-12)
    assert ghk_spread_floor(13) == pytest.approx(25 / math.sqrt(3), abs=1e-12)
    assert ghk_spread_floor(13) == pytest.approx(14.43, abs=1e-2)
    n = 10 ** 6
    assert ghk_spread_floor(n) / n == pytest.approx(2 / math.sqrt(3), abs=1e-6)
    with pytest.raises(ValueError):
        ghk_spread_floor(1)


def test_attainment_certificates():
    c = check_ghk_spread(complete(2))
    assert c.sense == "attain" and c.lhs == pytest.approx(2) and c.holds
    c = check_mohar_lower(complete(4), 1)
    assert c.lhs == pytest.approx(3 / 4) and c.rhs == pytest.approx(0.75) and c.is_equality


def test_certificate_invariants_exhaustive_n5():
    checks = [check_cap, check_emna, check_komo]
    for n in range(2, 6):
        for g in enumerate_labeled(n):
            certs = [f(g) for f in checks]
            certs += [check_tmoh(g, k) for k in range(1, n + 1)]
            if g.edge_count:
                certs += [check_thof(g), check_hoffman(g)]
            if is_triangle_free(g):
                certs.append(check_ttfree(g))
            for c in certs:
                assert c.holds, (c.theorem_id, g)
                if c.is_equality:
                    assert abs(c.lhs - c.rhs) <= 1e-6
                if "equality_consistent" in c.witnesses:
                    assert c.witnesses["equality_consistent"], (c.theorem_id, str(g))


def test_matrix_bounds_exhaustive_2x3_and_3x3():
    for m, n in [(2, 3), (3, 3)]:
        for code in range(1 << (m * n)):
            a = np.array([(code >> i) & 1 for i in range(m * n)], dtype=float).reshape(m, n)
            for k in range(1, m + 1):
                for c in (check_tnik(a, k), check_mo1(a, k), check_mo2(a, k), check_mo3(a, k)):
                    assert c.holds
                    assert c.witnesses["equality_consistent"], (c.theorem_id, code, k)
