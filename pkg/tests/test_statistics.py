from functools import partial
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vincular.permutations import enumerate_avoiders, occurrences, rc
from vincular.statistics import (
    StatDistribution,
    den,
    des,
    distribution,
    excedance_split,
    inv,
    maj,
    right_to_left_minima,
    simion_schmidt,
)


def perms_of(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_identity_statistics():
    e = tuple(range(1, 7))
    assert inv(e) == des(e) == maj(e) == den(e) == 0


def test_den_small():
    assert den((2, 1)) == 1
    assert den((1,)) == 0


def test_class_sums():
    assert sum(maj(p) for p in enumerate_avoiders(3, "321")) == 6
    assert sum(inv(p) for p in enumerate_avoiders(3, "321")) == 6
    assert sum(den(p) for p in enumerate_avoiders(2, "321")) == 1


@given(perms_of(9))
def test_maj_rc_identity(perm):
    n = len(perm)
    assert maj(perm) + maj(rc(perm)) == n * des(perm)


def test_statistics_match_pattern_engine():
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            assert des(p) == occurrences("21", p)
            assert inv(p) == occurrences("2-1", p)


def test_den_on_321_is_sum_of_non_rlmin_positions():
    for n in range(10):
        for p in enumerate_avoiders(n, "321"):
            exc, nexc = excedance_split(p)
            assert exc == sorted(exc) and nexc == sorted(nexc)
            keep = set(right_to_left_minima(p))
            assert den(p) == sum(i for i in range(1, n + 1) if i not in keep)


def test_right_to_left_minima():
    assert right_to_left_minima((3, 1, 4, 6, 2, 8, 5, 7)) == [2, 5, 7, 8]
    assert right_to_left_minima(()) == []


def test_simion_schmidt_example():
    assert simion_schmidt((3, 1, 4, 6, 2, 8, 5, 7)) == (8, 1, 4, 3, 2, 6, 5, 7)
    assert simion_schmidt(tuple(range(1, 8))) == tuple(range(1, 8))


def test_simion_schmidt_rejects_non_321_avoiders():
    with pytest.raises(ValueError):
        simion_schmidt((3, 2, 1))


def test_simion_schmidt_bijective_and_transports_den():
    for n in range(10):
        images = set()
        for p in enumerate_avoiders(n, "321"):
            s = simion_schmidt(p)
            assert maj(s) == den(p)
            assert right_to_left_minima(s) == right_to_left_minima(p)
            images.add(s)
        assert images == set(enumerate_avoiders(n, "231"))


def test_distribution_examples():
    assert distribution(2, "321", "den") == {0: 1, 1: 1}
    for cls in ("231", "321", "1-2-3"):
        for stat in ("inv", "des", "maj", "den"):
            assert distribution(0, cls, stat) == {0: 1}


def test_unknown_statistic():
    with pytest.raises(KeyError):
        distribution(3, "321", "exc")


@pytest.mark.parametrize("n", range(10))
def test_den_maj_equidistributed(n):
    assert distribution(n, "321", "den") == distribution(n, "231", "maj")


def test_distribution_counts_sum_to_catalan():
    d = distribution(7, "231", partial(occurrences, "31-2"))
    assert d.size == 429
    assert d.total == sum(occurrences("31-2", p) for p in enumerate_avoiders(7, "231"))
    assert d.as_list()[0] == d.coefficients[0]
    assert [k for k, _ in d.items()] == sorted(d.coefficients)


def test_merge():
    a = StatDistribution({0: 1, 2: 3})
    b = StatDistribution({2: 1, 5: 1})
    assert a.merge(b) == {0: 1, 2: 4, 5: 1}
