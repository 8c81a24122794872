from math import comb

import pytest

import oracles
from vincular.closed_forms import (
    TABLE,
    TRANSFER_RULES,
    apply_transfer,
    brute_force_total,
    closed_form_table,
    lookup,
    transfer_pattern,
)
from vincular.expr import evaluate
from vincular.permutations import is_plus_indecomposable, parse_pattern, total_occurrences
from vincular.series import Series
from vincular.statistics import den, inv, maj
from vincular.verify import TRANSFER_APPLICATIONS

STAT_ORACLES = {"inv": lambda p: oracles.count("2-1", p), "des": lambda p: oracles.count("21", p),
                "maj": maj, "den": den}
KEYS = sorted(TABLE)


def oracle_total(entry, n):
    cls = oracles.avoiders(n, "-".join(entry.avoided))
    if entry.target == "2-13L":
        return None
    if entry.target in STAT_ORACLES:
        return sum(STAT_ORACLES[entry.target](p) for p in cls)
    return sum(oracles.count(entry.target, p, entry.anchor) for p in cls)


@pytest.mark.parametrize("key", KEYS, ids=lambda k: "/".join(k))
def test_entry_against_independent_oracle(key):
    entry = TABLE[key]
    s = entry.series(7)
    for n in range(8):
        expect = oracle_total(entry, n)
        if expect is None:
            continue
        assert s[n] == expect
        if entry.closed_form:
            assert entry.closed_form(n) == expect


@pytest.mark.parametrize("key", KEYS, ids=lambda k: "/".join(k))
def test_entry_to_n_10(key):
    entry = TABLE[key]
    s = entry.series(10)
    for n in range(11):
        b = brute_force_total(entry, n)
        assert s[n] == b
        if entry.closed_form:
            assert entry.closed_form(n) == b


def test_table_examples():
    e = lookup("2-13", "2-3-1")
    assert e.expression == "z^3*B*C^5"
    assert [e.closed_form(n) for n in range(8)] == [comb(2 * n - 1, n - 3) if n >= 3 else 0 for n in range(8)]
    m = lookup("maj", "321")
    assert all(2 * m.closed_form(n) == (n - 1) * comb(2 * n - 2, n - 1) for n in range(1, 12))
    assert lookup("2-1", "321").closed_form(1) == 0
    assert lookup(parse_pattern("1-2", "last"), "231").expression == "z^2*B*C^4"


def test_lookup_errors():
    with pytest.raises(KeyError):
        lookup("1-2-3-4", "231")
    with pytest.raises(KeyError):
        lookup("2-1", "132")


def test_table_copy_is_independent():
    t = closed_form_table()
    t.clear()
    assert TABLE


def test_inv_formula_values():
    assert [total_occurrences(n, "321", "2-1") for n in range(7)] == [0, 0, 1, 6, 29, 130, 562]
    assert [4 ** (n - 1) - comb(2 * n - 1, n) for n in range(1, 7)] == [0, 1, 6, 29, 130, 562]


# --- transfer rules ------------------------------------------------------------------

def test_transfer_patterns():
    rho = parse_pattern("21")
    assert str(transfer_pattern("m-rho", rho)) == "3-21"
    assert str(transfer_pattern("mrho", rho)) == "321"
    assert str(transfer_pattern("1-rho'", rho)) == "1-32"
    assert str(transfer_pattern("1rho'", rho)) == "132"
    assert str(transfer_pattern("rho-m", rho)) == "21-3"
    assert str(transfer_pattern("rhom", rho)) == "213"
    with pytest.raises(KeyError):
        transfer_pattern("sideways", rho)


def test_transfer_examples():
    N = 10
    out = apply_transfer("m-rho", {"g": evaluate("z^2*B*C^3", N)}, rho="21")
    assert out["f"] == evaluate("z^3*B^2*C^4", N)
    out = apply_transfer("1rho'", {"g_hat": Series.zero(N)}, plus_indecomposable=True)
    assert out["f"].is_zero()
    out = apply_transfer("rho-m", {"g": evaluate("z*B*C^2", N)}, rho="1")
    assert out["f"] == evaluate("z^2*B^3*C^2", N)


def test_right_rules_need_indecomposable():
    g = {"g": Series.zero(5), "g_tilde": Series.zero(5)}
    for rule in ("rho-m", "rhom"):
        with pytest.raises(ValueError):
            apply_transfer(rule, g, rho="12")
    # left 1-rules only give the anchored output for a decomposable rho
    assert set(apply_transfer("1-rho'", {"g": Series.zero(5)}, rho="12")) == {"f_hat"}


def _brute(text, anchor, N):
    return Series([total_occurrences(n, "231", text, anchor) for n in range(N + 1)], N)


RHOS = ["1", "21", "12", "2-1", "1-2", "231", "2-31", "3-12", "1-32", "132", "21-3", "3-2-1", "2-1-3"]
OUT_ANCHOR = {"f": "none", "f_hat": "first", "f_tilde": "last"}


@pytest.mark.parametrize("rule", sorted(TRANSFER_RULES))
@pytest.mark.parametrize("rho", RHOS)
def test_transfer_soundness(rule, rho):
    N = 8
    bundle = {"g": _brute(rho, "none", N), "g_hat": _brute(rho, "first", N), "g_tilde": _brute(rho, "last", N)}
    letters = parse_pattern(rho).letters
    if rule in ("rho-m", "rhom") and not is_plus_indecomposable(letters):
        with pytest.raises(ValueError):
            apply_transfer(rule, bundle, rho=rho)
        return
    tau = transfer_pattern(rule, rho)
    for name, series in apply_transfer(rule, bundle, rho=rho).items():
        assert series == _brute(tau.text, OUT_ANCHOR[name], N), (rule, rho, name)


@pytest.mark.parametrize("rule, rho", TRANSFER_APPLICATIONS)
def test_applications_reach_n_9(rule, rho):
    N = 9
    bundle = {"g": _brute(rho, "none", N), "g_hat": _brute(rho, "first", N), "g_tilde": _brute(rho, "last", N)}
    tau = transfer_pattern(rule, rho)
    produced = apply_transfer(rule, bundle, rho=rho)
    assert produced
    for name, series in produced.items():
        assert series == _brute(tau.text, OUT_ANCHOR[name], N)


def test_inv_stat_is_2_1():
    assert TABLE[("inv", "none", "321")].expression == TABLE[("2-1", "none", "321")].expression
    assert all(inv(p) == oracles.count("2-1", p) for p in oracles.avoiders(5, "3-2-1"))
