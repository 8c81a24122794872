from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from vincular.permutations import (
    CLASSICAL_3,
    AvoidanceClass,
    VincularPattern,
    avoids,
    classify_high_low,
    enumerate_avoiders,
    inverse,
    is_plus_indecomposable,
    naive_avoiders,
    occurrences,
    occurrences_2_13_low,
    parse_pattern,
    rc,
    total_occurrences,
)

LENGTH3 = ["1-2-3", "1-23", "12-3", "123", "1-3-2", "1-32", "13-2", "132",
           "2-1-3", "2-13", "21-3", "213", "2-3-1", "2-31", "23-1", "231",
           "3-1-2", "3-12", "31-2", "312", "3-2-1", "3-21", "32-1", "321"]


def perms_of(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


# --- parsing --------------------------------------------------------------------

@pytest.mark.parametrize("text, letters, glued", [
    ("2-31", (2, 3, 1), {2}),
    ("231", (2, 3, 1), {1, 2}),
    ("2-3-1", (2, 3, 1), set()),
    ("1", (1,), set()),
])
def test_parse(text, letters, glued):
    p = parse_pattern(text)
    assert p.letters == letters
    assert p.glued == frozenset(glued)
    assert str(p) == text


@pytest.mark.parametrize("bad", ["", "2--1", "-21", "21-", "22", "13", "2a1", "0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_pattern(bad)


def test_anchor_rendering():
    assert str(parse_pattern("2-1", "first")) == "[2-1)"
    assert str(parse_pattern("21", "last")) == "(21]"
    with pytest.raises(ValueError):
        parse_pattern("21", "middle")


def test_pattern_validation():
    with pytest.raises(ValueError):
        VincularPattern((1, 2), frozenset({2}))
    with pytest.raises(ValueError):
        VincularPattern((1, 3))


# --- occurrences ----------------------------------------------------------------

def test_occurrence_examples():
    assert occurrences("23-1", (2, 3, 1)) == 1
    assert occurrences("2-13", (2, 1, 3)) == 1
    assert occurrences("2-13", (3, 1, 2)) == 0
    assert occurrences("2-1", ()) == 0
    assert occurrences("1-2-3", (1, 2)) == 0


def test_avoids_examples():
    assert avoids((1, 2, 3), "3-2-1")
    assert not avoids((3, 2, 1), "3-2-1")
    assert sum(avoids(p, "2-3-1") for p in permutations(range(1, 5))) == 14


@settings(max_examples=150, deadline=None)
@given(perms_of(7), st.sampled_from(LENGTH3 + ["2-1", "21", "1-2", "12", "1"]),
       st.sampled_from(["none", "first", "last"]))
def test_occurrences_match_oracle(perm, text, anchor):
    assert occurrences(parse_pattern(text, anchor), perm) == oracles.count(text, perm, anchor)


@settings(max_examples=100, deadline=None)
@given(perms_of(8), st.sampled_from(["12", "21", "123", "132", "213", "231", "312", "321"]))
def test_fully_glued_matches_sliding_window(perm, text):
    assert occurrences(text, perm) == oracles.sliding_window(text, perm)


@settings(max_examples=100, deadline=None)
@given(perms_of(7), st.sampled_from(LENGTH3))
def test_first_anchor_splits_count(perm, text):
    # [tau)pi plus the occurrences avoiding position 1 gives (tau)pi
    rest = occurrences(text, perm[1:]) if perm else 0
    assert occurrences(parse_pattern(text, "first"), perm) + rest == occurrences(text, perm)


# --- small maps -----------------------------------------------------------------

def test_rc_inverse():
    assert rc((1, 2, 3)) == (1, 2, 3)
    assert rc((2, 1, 3)) == (1, 3, 2)
    assert inverse((3, 1, 2)) == (2, 3, 1)


@given(perms_of(8))
def test_rc_and_inverse_are_involutions(perm):
    perm = tuple(perm)
    assert rc(rc(perm)) == perm
    assert inverse(inverse(perm)) == perm


def test_plus_indecomposable():
    assert is_plus_indecomposable((1,))
    assert is_plus_indecomposable((2, 1))
    assert not is_plus_indecomposable((1, 2))
    assert is_plus_indecomposable((2, 3, 1))
    assert not is_plus_indecomposable((2, 1, 3))


def test_high_low():
    assert classify_high_low((1, 2, 3)) == ((1, 2, 3), ())
    assert classify_high_low((2, 1)) == ((1,), (2,))
    assert classify_high_low((3, 1, 4, 2)) == ((1, 3), (2, 4))
    with pytest.raises(ValueError):
        classify_high_low((3, 2, 1))


# --- enumeration ----------------------------------------------------------------

def test_small_classes():
    assert list(enumerate_avoiders(0, "2-3-1")) == [()]
    assert list(enumerate_avoiders(3, "2-3-1")) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1)]


@pytest.mark.parametrize("tau", CLASSICAL_3, ids=str)
def test_generators_agree_with_naive_filter(tau):
    for n in range(8):
        got = list(enumerate_avoiders(n, tau))
        assert got == naive_avoiders(n, tau)
        assert got == sorted(got)


@pytest.mark.parametrize("tau", CLASSICAL_3, ids=str)
def test_naive_filter_against_oracle(tau):
    text = "-".join(map(str, tau.letters))
    for n in range(6):
        assert naive_avoiders(n, tau) == oracles.avoiders(n, text)


@pytest.mark.parametrize("tau", CLASSICAL_3, ids=str)
def test_catalan_sizes(tau):
    assert [sum(1 for _ in enumerate_avoiders(n, tau)) for n in range(11)] == [oracles.catalan(n) for n in range(11)]


def test_avoidance_class_type():
    cls = AvoidanceClass(parse_pattern("3-2-1"), 4)
    assert len(list(cls)) == 14
    with pytest.raises(ValueError):
        AvoidanceClass(parse_pattern("32-1"), 4)


# --- totals ---------------------------------------------------------------------

def test_total_examples():
    assert total_occurrences(3, "321", "2-1") == 6
    assert total_occurrences(2, "231", "21") == 1
    assert total_occurrences(3, "231", "31-2") == 1
    # brute force gives 7 = C(7,1) at n=4
    assert total_occurrences(4, "231", "2-13") == 7 == comb(7, 1)


@pytest.mark.parametrize("text", LENGTH3 + ["2-1", "21", "1"])
@pytest.mark.parametrize("anchor", ["none", "first", "last"])
def test_totals_against_oracle(text, anchor):
    for n in range(7):
        assert total_occurrences(n, "231", text, anchor) == oracles.total(n, "2-3-1", text, anchor)


@pytest.mark.parametrize("text", LENGTH3)
def test_empty_permutation(text):
    assert total_occurrences(0, "231", text) == 0
    assert total_occurrences(0, "321", text) == 0


def test_321_decomposition():
    for n in range(9):
        for p in enumerate_avoiders(n, "321"):
            assert occurrences("2-1", p) == occurrences("21", p) + occurrences("31-2", p) + occurrences("23-1", p)


def test_rc_inverse_symmetry_on_231():
    for n in range(11):
        cls = list(enumerate_avoiders(n, "231"))
        assert sum(occurrences("1-3-2", p) for p in cls) == sum(occurrences("2-1-3", rc(inverse(p))) for p in cls)


def test_2_13_low():
    assert all(occurrences_2_13_low(p) == 0 for n in range(4) for p in enumerate_avoiders(n, "321"))
    assert sum(occurrences_2_13_low(p) for p in enumerate_avoiders(4, "321")) == 1
    assert sum(occurrences_2_13_low(p) for p in enumerate_avoiders(6, "321")) == 45


def test_2_13_low_oracle():
    # occurrences b-ac of 2-13 where the '3' sits at a low (non left-to-right maximum) position
    for n in range(7):
        for p in enumerate_avoiders(n, "321"):
            expect = 0
            for j in range(1, n - 1):
                if max(p[:j + 2]) != p[j + 1]:
                    expect += sum(1 for i in range(j) if p[j] < p[i] < p[j + 1])
            assert occurrences_2_13_low(p) == expect
