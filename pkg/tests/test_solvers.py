from collections import Counter
from functools import partial
from math import comb

import pytest

import oracles
from vincular import dyck, solvers
from vincular.permutations import enumerate_avoiders, occurrences
from vincular.poly import LaurentPoly
from vincular.series import Series, catalan, make_B, make_C
from vincular.statistics import distribution, maj

q = LaurentPoly.x()
N = 24


def hist(values):
    return LaurentPoly.from_dict(Counter(values))


def test_des_equation():
    F = solvers.solve_des_equation(N)
    assert solvers.des_residual(F).is_zero()
    assert F.at_marker_one() == make_C(N)
    B, C, z = make_B(N), make_C(N), Series.z(N)
    assert solvers.extract_F1(N) == z * z * B * C * C
    assert solvers.extract_F1(N)[3] == comb(4, 1)
    for n in range(9):
        assert F[n] == hist(len(dyck.triple_occurrences(p, "UDD")) for p in oracles.dyck_paths(n))


def test_hhat_cubic():
    H = solvers.solve_Hhat_cubic(N)
    assert solvers.hhat_cubic(H).is_zero()
    assert H.at_marker_one() == make_C(N)
    B, C, z = make_B(N), make_C(N), Series.z(N)
    H1 = H.marker_derivative_at_one()
    assert H1 == z ** 3 * B * C ** 4
    assert H1[4] == comb(6, 1)


def test_J():
    J = solvers.solve_J(N)
    B, C, z = make_B(N), make_C(N), Series.z(N)
    J1 = J.marker_derivative_at_one()
    assert J1 == z ** 4 * B * C ** 6
    assert J1[5] == comb(8, 1)


def test_bivariate_against_dyck_statistics():
    H = solvers.solve_Hhat_cubic(9)
    J = solvers.solve_J(9)
    for n in range(10):
        paths = list(dyck.enumerate_dyck(n))
        assert H[n] == hist(dyck.dud_block_stats(p)[0] for p in paths)
        assert J[n] == hist(dyck.dud_block_stats(p)[1] for p in paths)


def test_contfrac():
    F = solvers.contfrac_F(N)
    assert F[3] == 4 + q
    assert F.at_marker_one() == make_C(N)
    assert solvers.contfrac_truncated(N) == solvers.contfrac_fixed_point(N)


def test_contfrac_q_truncation():
    full = solvers.contfrac_F(10)
    cut = solvers.contfrac_F(10, N_q=2)
    for n in range(11):
        c = full[n] if isinstance(full[n], LaurentPoly) else LaurentPoly([full[n]])
        assert cut[n] == LaurentPoly.from_dict({e: v for e, v in c.terms() if e <= 2})


@pytest.mark.parametrize("n", range(10))
def test_contfrac_matches_31_2_and_13_2(n):
    F = solvers.contfrac_F(9)
    cls = list(enumerate_avoiders(n, "231"))
    assert hist(occurrences("31-2", p) for p in cls) == F[n]
    assert hist(occurrences("13-2", p) for p in cls) == F[n]


def test_weighted_dyck_schemes():
    n_max = 9
    F = solvers.contfrac_F(n_max)
    peak = solvers.weighted_dyck_gf(n_max, "peak_height_minus_1")
    ceil_ = solvers.weighted_dyck_gf(n_max, "ceil_half_U")
    floor_ = solvers.weighted_dyck_gf(n_max, "floor_half_U")
    z = Series.z(n_max)
    assert peak == ceil_
    assert F * (1 - z * peak) == 1
    assert floor_ == F
    assert peak[1] == 1
    assert [peak[n].at_one() for n in range(n_max + 1)] == [catalan(n) for n in range(n_max + 1)]


def test_gaussian_binomials():
    assert solvers.q_binomial(2, 1) == 1 + q + q ** 2
    assert solvers.gaussian_binomial(4, 2).at_one() == 6
    assert solvers.gaussian_binomial(4, 2) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert solvers.gaussian_binomial(3, 5) == 0
    for n in range(9):
        for k in range(n + 1):
            assert solvers.gaussian_binomial(n, k).at_one() == comb(n, k)
    with pytest.raises(ValueError):
        solvers.q_binomial(-1, 2)


def test_polyominoes():
    P = solvers.polyomino_gf(8)
    assert P[0] == P[1] == 0
    for n in range(2, 9):
        assert P[n] == hist(g.area for g in dyck.enumerate_polyominoes(n))
    ok, lhs, rhs = solvers.flajolet_identity_check(8)
    assert ok
    assert lhs[1] == rhs[1] == 2


def test_maj_generating_function():
    h = solvers.maj_gf_two_ways(N)
    assert h[0] == h[1] == 0
    assert h[2] == 1
    assert h[3] == 7
    for n in range(9):
        assert h[n] == sum(maj(p) for p in enumerate_avoiders(n, "231"))


def test_des_distribution_from_F():
    F = solvers.solve_des_equation(9)
    for n in range(10):
        assert F[n] == LaurentPoly.from_dict(distribution(n, "321", "des").coefficients)


def test_contfrac_callable_statistic():
    cf = solvers.contfrac_F(6)
    assert LaurentPoly.from_dict(distribution(6, "231", partial(occurrences, "31-2")).coefficients) == cf[6]
