from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vincular.expr import ExpressionError, evaluate
from vincular.poly import LaurentPoly
from vincular.series import (
    Series,
    binomial,
    catalan,
    catalan_fixed_point,
    lemma_identities_check,
    make_B,
    make_C,
)

q = LaurentPoly.x()

laurent = st.builds(LaurentPoly, st.lists(st.integers(-20, 20), max_size=6), st.integers(-4, 4))
int_series = st.lists(st.integers(-50, 50), min_size=1, max_size=10).map(lambda c: Series(c, 9))


# --- Laurent polynomials ----------------------------------------------------------

def test_poly_normalisation():
    assert LaurentPoly([0, 0, 1, 0], low=-1) == LaurentPoly([1], 1)
    assert LaurentPoly([0, 0]) == 0
    assert LaurentPoly([3]) == 3
    assert (q - q).is_zero()


def test_poly_basics():
    p = (1 + q) ** 3
    assert p.dense() == [1, 3, 3, 1]
    assert p.at_one() == 8
    assert p(2) == 27
    assert p.derivative() == 3 * (1 + q) ** 2
    assert (q + q.inv()).terms() == [(-1, 1), (1, 1)]
    assert (q ** -2)(2) == Fraction(1, 4)
    assert (1 + 2 * q ** 3).reciprocal_variable() == 1 + 2 * q ** -3
    assert (1 - q + q ** 2).format() == "1 - q + q^2"
    with pytest.raises(ZeroDivisionError):
        (1 + q).inv()
    with pytest.raises(ArithmeticError):
        (1 + 2 * q).exact_div(2)


@given(laurent, laurent, laurent)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(laurent, laurent)
def test_poly_evaluation_is_a_homomorphism(a, b):
    x = Fraction(3, 2)
    assert (a * b)(x) == a(x) * b(x)
    assert a.reciprocal_variable()(x) == a(1 / x)


# --- truncated series --------------------------------------------------------------

def test_geometric():
    assert (1 - Series.z(10)).reciprocal() == [1] * 11


def test_truncation_to_smaller_order():
    a = Series([1, 1, 1, 1, 1], 4)
    b = Series([1, 2, 3], 2)
    assert (a + b).order == 2
    assert (a * b).to_list() == [1, 3, 6]


def test_substitute_z_times():
    s = Series([5, 7, 11], 2).substitute_z_times(q)
    assert s.to_list() == [5, 7 * q, 11 * q ** 2]


def test_reciprocal_requires_unit():
    with pytest.raises(ZeroDivisionError):
        Series([2, 1], 3).reciprocal()
    with pytest.raises(ArithmeticError):
        Series([3, 4], 1).exact_div(2)


@given(int_series, int_series, int_series)
def test_series_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(int_series)
def test_reciprocal_roundtrip(a):
    u = Series([1] + a.to_list()[1:], a.order)
    assert u * u.reciprocal() == 1


def test_B_and_C():
    assert make_C(5).to_list() == [1, 1, 2, 5, 14, 42]
    assert make_B(4).to_list() == [1, 2, 6, 20, 70]
    assert make_B(0)[0] == make_C(0)[0] == 1
    assert catalan_fixed_point(12) == make_C(12)
    assert [catalan(n) for n in range(-1, 4)] == [0, 1, 1, 2, 5]
    assert binomial(3, 5) == binomial(-1, 0) == 0


def test_bc_identity_spot_checks():
    B, C, z = make_B(20), make_C(20), Series.z(20)
    assert (B * C ** 2)[3] == comb(8, 3) == 56
    assert (1 - 2 * z * C).reciprocal()[0] == 1
    assert (z * C).derivative() == B.truncate(19)


def test_all_bc_identities_at_30():
    results = lemma_identities_check(30)
    assert len(results) >= 20
    assert all(ok for _, ok in results), [name for name, ok in results if not ok]


# --- expression mini-language --------------------------------------------------------

@pytest.mark.parametrize("text, order, expect", [
    ("z^2*B^3", 5, [0, 0, 1, 6, 30, 140]),
    ("C", 4, [1, 1, 2, 5, 14]),
    ("B-1-2*z*B*C", 10, [0] * 11),
    ("-(1+z)^2", 3, [-1, -2, -1, 0]),
    ("2*z - z", 2, [0, 1, 0]),
])
def test_evaluate(text, order, expect):
    assert evaluate(text, order).to_list() == expect


def test_evaluate_maj_formula():
    s = evaluate("z^2*B^3", 12)
    for n in range(1, 13):
        assert 2 * s[n] == (n - 1) * comb(2 * n - 2, n - 1)


@pytest.mark.parametrize("bad", ["", "B+", "x", "B^C", "(B", "B)", "2 3"])
def test_evaluate_rejects(bad):
    with pytest.raises(ExpressionError):
        evaluate(bad, 4)


def test_evaluate_rejects_negative_order():
    with pytest.raises(ExpressionError):
        evaluate("B", -1)
