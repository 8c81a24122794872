"""
Verification suites: each check compares an enumeration result with a
closed form, a series coefficient or an independent brute-force count and
emits one :class:`CheckRecord` per claim.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from math import comb

from . import dyck, solvers, statistics
from .closed_forms import TABLE, apply_transfer, brute_force_total, transfer_pattern
from .permutations import (
    CLASSICAL_3,
    enumerate_avoiders,
    inverse,
    naive_avoiders,
    occurrences,
    occurrences_2_13_low,
    rc,
    total_occurrences,
)
from .poly import LaurentPoly
from .series import Series, binomial, catalan, lemma_identities_check, make_B, make_C

log = logging.getLogger(__name__)

__all__ = [
    "CheckRecord", "VerificationReport", "SUITES", "run_suite",
    "TRANSFER_APPLICATIONS",
]

PASS, FAIL = "PASS", "FAIL"

EXAMPLE_PERM = (4, 5, 1, 7, 2, 3, 9, 12, 6, 8, 10, 11, 15, 13, 14)


@dataclass
class CheckRecord:
    label: str
    scope: str
    source: str
    observed: str
    status: str
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    duration: float = 0.0

    @property
    def status(self) -> str:
        return PASS if all(r.status == PASS for r in self.records) else FAIL

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status != PASS]

    # duration is left out of every rendering so output is reproducible
    def to_text(self) -> str:
        headers = ("status", "check", "scope", "source", "observed")
        rows = [(r.status, r.label, r.scope, r.source, r.observed) for r in self.records]
        widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
                  for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        for row, r in zip(rows, self.records):
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            if r.detail:
                lines.append(f"      {r.detail}")
        lines.append(f"suite {self.suite}: {self.status} "
                     f"({len(self.records) - len(self.failures)}/{len(self.records)} checks passed)")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "label", "scope", "source", "observed", "status", "detail"])
        for r in self.records:
            w.writerow([self.suite, r.label, r.scope, r.source, r.observed, r.status, r.detail])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"suite": self.suite, "status": self.status,
               "checks": [asdict(r) for r in self.records]}
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str = "text") -> str:
        return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def _rec(label, scope, source, ok, observed="", detail=""):
    return CheckRecord(label, scope, source, str(observed), PASS if ok else FAIL, "" if ok else detail)


# --- series suite ----------------------------------------------------------------

def check_bc_identities(order: int) -> list[CheckRecord]:
    return [_rec(f"B/C identity: {name}", f"order {order}", "series", ok, "holds" if ok else "fails")
            for name, ok in lemma_identities_check(order)]


def check_B_C(order: int) -> list[CheckRecord]:
    try:
        C, B = make_C(order), make_B(order)
        ok = C.to_list()[:6] == [1, 1, 2, 5, 14, 42] and B.to_list()[:5] == [1, 2, 6, 20, 70]
        err = ""
    except ArithmeticError as e:
        ok, err = False, str(e)
    return [_rec("B and C by binomials and by fixed point", f"order {order}", "series", ok,
                 "agree" if ok else "disagree", err)]


def check_des_equation(order: int) -> list[CheckRecord]:
    N = order
    B, C, z = make_B(N), make_C(N), Series.z(N)
    F = solvers.solve_des_equation(N)
    out = [
        _rec("F(t,z) = 1 + z(1+(t-1)z)F^2 residual", f"order {N}", "series",
             solvers.des_residual(F).is_zero(), "0"),
        _rec("F(1,z) = C", f"order {N}", "series", F.at_marker_one() == C, "equal"),
    ]
    F1 = F.marker_derivative_at_one()
    n = F1.first_mismatch(z * z * B * C * C)
    out.append(_rec("F_1(1,z) = z^2BC^2", f"order {N}", "series", n is None, "equal",
                    f"first mismatch at z^{n}"))
    return out


def check_hhat(order: int) -> list[CheckRecord]:
    N = order
    B, C, z = make_B(N), make_C(N), Series.z(N)
    H = solvers.solve_Hhat_cubic(N)
    J = solvers.solve_J(N)
    H1 = H.marker_derivative_at_one()
    J1 = J.marker_derivative_at_one()
    return [
        _rec("H-hat cubic residual", f"order {N}", "series", solvers.hhat_cubic(H).is_zero(), "0"),
        _rec("H-hat(1,z) = C", f"order {N}", "series", H.at_marker_one() == C, "equal"),
        _rec("H-hat_1(1,z) = z^3BC^4", f"order {N}", "series", H1 == z ** 3 * B * C ** 4, "equal",
             f"first mismatch at z^{H1.first_mismatch(z ** 3 * B * C ** 4)}"),
        _rec("J_1(1,z) = z^4BC^6", f"order {N}", "series", J1 == z ** 4 * B * C ** 6, "equal",
             f"first mismatch at z^{J1.first_mismatch(z ** 4 * B * C ** 6)}"),
    ]


def check_contfrac(order: int) -> list[CheckRecord]:
    N = order
    a = solvers.contfrac_truncated(N)
    b = solvers.contfrac_fixed_point(N)
    n = a.first_mismatch(b)
    return [
        _rec("continued fraction: truncation = recursion F(q,z) = 1/(1-z/(1-zF(q,zq)))",
             f"order {N}", "series", n is None, "agree", f"first mismatch at z^{n}"),
        _rec("F(1,z) = C", f"order {N}", "series", a.at_marker_one() == make_C(N), "equal"),
    ]


def check_maj_two_ways(order: int) -> list[CheckRecord]:
    try:
        solvers.maj_gf_two_ways(order)
        ok, err = True, ""
    except (ArithmeticError, solvers.ConvergenceError) as e:
        ok, err = False, str(e)
    return [_rec("maj on S_n(231): pattern sum = linear equation = z^2B^3C = closed form",
                 f"order {order}", "series", ok, "agree" if ok else "disagree", err)]


# --- bijections suite ------------------------------------------------------------

def _dyck_set(n):
    return set(dyck.enumerate_dyck(n))


def check_phi_321(n_max: int) -> list[CheckRecord]:
    out = []
    example_heights = dyck.peak_heights(dyck.phi_321(EXAMPLE_PERM))
    out.append(_rec("phi(4 5 1 7 2 3 9 12 6 8 10 11 15 13 14) peak heights", "n=15", "worked example",
                    example_heights == [4, 4, 4, 3, 5, 3], example_heights))
    for n in range(n_max + 1):
        perms = list(enumerate_avoiders(n, "321"))
        images = {}
        bad = None
        for p in perms:
            path = dyck.phi_321(p)
            images[path] = p
            ph = dyck.peak_heights(path)
            if (not dyck.is_dyck(path) or dyck.phi_321_inv(path) != p
                    or statistics.inv(p) != sum(h - 1 for h in ph)
                    or statistics.des(p) != len(dyck.triple_occurrences(path, "UDD"))):
                bad = p
                break
            h = dyck.heights(path)
            pk = dyck.peaks(path)
            after_d = [h[j + 1] for j in pk if j + 2 < len(path) and path[j + 2] == "D"]
            after_u = [h[j + 1] for j in pk if j + 2 < len(path) and path[j + 2] == "U"]
            if (occurrences("21", p) != len(after_d)
                    or occurrences("31-2", p) != sum(x - 2 for x in after_d)
                    or occurrences("23-1", p) != sum(x - 1 for x in after_u)):
                bad = p
                break
        ok = bad is None and set(images) == _dyck_set(n)
        out.append(_rec("phi: S_n(321) -> D_n bijective; inv, des, 21, 31-2, 23-1 transported",
                        f"n={n}", "brute force", ok, f"{len(perms)} round trips",
                        f"offending permutation {bad}" if bad is not None else "image is not D_n"))
    return out


def check_simion_schmidt(n_max: int) -> list[CheckRecord]:
    example = statistics.simion_schmidt((3, 1, 4, 6, 2, 8, 5, 7))
    out = [_rec("psi(31462857) = 81432657", "n=8", "worked example",
                example == (8, 1, 4, 3, 2, 6, 5, 7), "".join(map(str, example)))]
    for n in range(n_max + 1):
        target = set(enumerate_avoiders(n, "231"))
        seen = set()
        bad = None
        for p in enumerate_avoiders(n, "321"):
            s = statistics.simion_schmidt(p)
            if (s not in target or statistics.maj(s) != statistics.den(p)
                    or statistics.right_to_left_minima(s) != statistics.right_to_left_minima(p)):
                bad = p
                break
            seen.add(s)
        ok = bad is None and seen == target
        out.append(_rec("psi: S_n(321) -> S_n(231) bijective, maj(psi) = den", f"n={n}",
                        "brute force", ok, f"{len(seen)} images",
                        f"offending permutation {bad}" if bad is not None else "not onto"))
    return out


def check_phi_kratt(n_max: int) -> list[CheckRecord]:
    out = []
    for n in range(n_max + 1):
        images = set()
        bad = None
        for s in enumerate_avoiders(n, "231"):
            path = dyck.phi_kratt(s)
            if dyck.phi_kratt_inv(path) != s or dyck.mass(path) != occurrences("31-2", s):
                bad = s
                break
            images.add(path)
        ok = bad is None and images == _dyck_set(n)
        out.append(_rec("Krattenthaler phi: S_n(231) -> D_n bijective, mass = (31-2)",
                        f"n={n}", "brute force", ok, f"{len(images)} images",
                        f"offending permutation {bad}" if bad is not None else "image is not D_n"))
    return out


def check_theta(n_max: int) -> list[CheckRecord]:
    out = []
    for n in range(n_max + 1):
        paths = _dyck_set(n)
        bad = None
        images = set()
        for p in sorted(paths):
            t = dyck.theta(p)
            if dyck.mass(t) != dyck.t_stat(p) or dyck.theta_inverse(t) != p:
                bad = p
                break
            images.add(t)
        ok = bad is None and images == paths
        out.append(_rec("theta: D_n -> D_n bijective, mass(theta) = t", f"n={n}", "brute force",
                        ok, f"{len(images)} images", f"offending path {bad}"))
    return out


def check_xi(n_max: int) -> list[CheckRecord]:
    out = []
    for n in range(2, n_max + 1):
        polys = list(dyck.enumerate_polyominoes(n))
        bad = None
        images = set()
        for g in polys:
            p = dyck.xi(g)
            if dyck.t_stat(p) + p.count("U") != dyck.area(g) or dyck.xi_inverse(p) != g:
                bad = g
                break
            images.add(p)
        ok = bad is None and images == _dyck_set(n - 1)
        out.append(_rec("xi: polyominoes -> D_(n-1) bijective, area = sum(floor(h/2)+1)",
                        f"semiperimeter {n}", "brute force", ok, f"{len(images)} images",
                        f"offending polyomino {bad}"))
    return out


def check_dud_blocks(n_max: int) -> list[CheckRecord]:
    out = []
    for n in range(n_max + 1):
        bad = None
        tot = off = 0
        for p in enumerate_avoiders(n, "321"):
            t, e = dyck.dud_block_stats(dyck.phi_321(inverse(p)))
            # occurrences of 2-13 whose '3' is not an excedance
            not_exc = sum(1 for j in range(1, n - 1) for i in range(j)
                          if p[j] < p[i] < p[j + 1] and p[j + 1] <= j + 2)
            if t != not_exc or e != occurrences_2_13_low(p):
                bad = p
                break
            tot += t
            off += e
        ok = bad is None and tot == binomial(2 * n - 2, n - 3) and off == binomial(2 * n - 2, n - 4)
        out.append(_rec("phi(pi^-1): D-blocks before DUD = (2-13, '3' non-excedance); off-axis = (2-13^L)",
                        f"n={n}", "closed form", ok, f"{tot}, {off}", f"offending permutation {bad}"))
    return out


# --- totals suite ----------------------------------------------------------------

def check_catalan(n_max: int) -> list[CheckRecord]:
    out = []
    for tau in CLASSICAL_3:
        name = "-".join(map(str, tau.letters))
        sizes = [sum(1 for _ in enumerate_avoiders(n, tau)) for n in range(n_max + 1)]
        ok = sizes == [catalan(n) for n in range(n_max + 1)]
        agree = all(list(enumerate_avoiders(n, tau)) == naive_avoiders(n, tau)
                    for n in range(min(n_max, 7) + 1))
        out.append(_rec(f"|S_n({name})| = C_n; generator = naive filter (n<=7)",
                        f"n<={n_max}", "closed form", ok and agree, sizes[-1]))
    return out


def check_table_entry(key, n_max: int) -> list[CheckRecord]:
    entry = TABLE[key]
    s = entry.series(n_max)
    bad = None
    for n in range(n_max + 1):
        b = brute_force_total(entry, n)
        cf = entry.closed_form(n) if entry.closed_form else b
        if not (b == s[n] == cf):
            bad = (n, b, s[n], cf)
            break
    target, anchor, avoided = key
    shown = {"first": f"[{target})", "last": f"({target}]"}.get(anchor, f"({target})")
    source = "series + closed form" if entry.closed_form else "series"
    label = f"{shown} S_n({avoided}) <-> {entry.expression}"
    if entry.closed_form:
        label += f" = {entry.closed_form.name}"
    return [_rec(label, f"n<={n_max}", source, bad is None,
                 brute_force_total(entry, n_max),
                 f"n={bad[0]}: brute {bad[1]}, series {bad[2]}, closed {bad[3]}" if bad else "")]


def check_equalities(n_max: int) -> list[CheckRecord]:
    groups = [("12-3", "21-3", "1-32"), ("3-21", "3-12", "32-1", "31-2", "13-2"),
              ("123", "321", "132"), ("213", "312"), ("1-3-2", "2-1-3", "3-1-2")]
    out = []
    for g in groups:
        vals = [[total_occurrences(n, "231", p) for n in range(n_max + 1)] for p in g]
        out.append(_rec(" = ".join(f"({p})" for p in g) + " on S_n(231)", f"n<={n_max}",
                        "brute force", all(v == vals[0] for v in vals), vals[0][-1]))
    five = ("3-2-1", "3-1-2", "2-1-3", "1-3-2", "1-2-3")
    sums = [sum(total_occurrences(n, "231", p) for p in five) for n in range(n_max + 1)]
    out.append(_rec("sum of the five classical length-3 totals = binom(n,3) C_n", f"n<={n_max}",
                    "closed form", sums == [comb(n, 3) * catalan(n) for n in range(n_max + 1)], sums[-1]))
    sym_ok = True
    for n in range(min(n_max, 10) + 1):
        a = sum(occurrences("1-3-2", p) for p in enumerate_avoiders(n, "231"))
        b = sum(occurrences("2-1-3", rc(inverse(p))) for p in enumerate_avoiders(n, "231"))
        sym_ok &= a == b
    out.append(_rec("pi -> (pi^-1)^rc maps 1-3-2 totals to 2-1-3 totals", f"n<={min(n_max, 10)}",
                    "brute force", sym_ok, "equal"))
    t312 = [total_occurrences(n, "321", "31-2") for n in range(n_max + 1)]
    t231 = [total_occurrences(n, "321", "23-1") for n in range(n_max + 1)]
    out.append(_rec("(31-2) S_n(321) = (23-1) S_n(321)", f"n<={n_max}", "brute force",
                    t312 == t231, t312[-1]))
    bad = None
    for n in range(n_max + 1):
        for p in enumerate_avoiders(n, "321"):
            if occurrences("2-1", p) != occurrences("21", p) + occurrences("31-2", p) + occurrences("23-1", p):
                bad = p
                break
        if bad:
            break
    out.append(_rec("(2-1) = (21) + (31-2) + (23-1) on each 321-avoider", f"n<={n_max}",
                    "brute force", bad is None, "holds", f"offending permutation {bad}"))
    return out


# (rule, rho, anchor of the rho series consumed) for every application the
# the closed-form table relies on
TRANSFER_APPLICATIONS = [
    ("m-rho", "1"), ("mrho", "1"), ("1-rho'", "1"), ("1rho'", "1"),
    ("m-rho", "2-1"), ("1-rho'", "2-1"), ("m-rho", "1-2"),
    ("m-rho", "21"), ("mrho", "21"), ("1-rho'", "21"), ("1rho'", "21"),
    ("m-rho", "12"), ("mrho", "12"),
    ("mrho", "2-1"), ("1rho'", "2-1"), ("mrho", "1-2"),
    ("rho-m", "1"), ("rhom", "1"),
    ("rho-m", "21"), ("rhom", "2-1"), ("rhom", "21"),
]

_OUTPUT_ANCHOR = {"f": "none", "f_hat": "first", "f_tilde": "last"}
_INPUT_ANCHOR = {"g": "none", "g_hat": "first", "g_tilde": "last"}


def _brute_series(pattern, anchor, N):
    return Series([total_occurrences(n, "231", pattern, anchor) for n in range(N + 1)], N)


def check_transfer(n_max: int) -> list[CheckRecord]:
    out = []
    for rule, rho in TRANSFER_APPLICATIONS:
        bundle = {k: _brute_series(rho, a, n_max) for k, a in _INPUT_ANCHOR.items()}
        tau = transfer_pattern(rule, rho)
        produced = apply_transfer(rule, bundle, rho=rho)
        for name, series in produced.items():
            expect = _brute_series(tau, _OUTPUT_ANCHOR[name], n_max)
            n = series.first_mismatch(expect)
            shown = str(tau.with_anchor(_OUTPUT_ANCHOR[name]))
            out.append(_rec(f"transfer {rule} on rho={rho}: {name} = {shown}", f"n<={n_max}",
                            "brute force", n is None, "equal", f"first mismatch at n={n}"))
    return out


def check_grand_dyck(n_max: int) -> list[CheckRecord]:
    N = n_max
    B, C, z = make_B(N), make_C(N), Series.z(N)
    gf2 = z ** 3 * B ** 2 * C ** 4
    gf1 = z ** 2 * B ** 2 * C ** 2
    ok2 = ok1 = True
    for n in range(1, N + 1):
        paths = list(dyck.enumerate_grand_dyck(n - 1))
        ok2 &= sum(dyck.points_at_height(p, 2) for p in paths) == gf2[n]
        ok1 &= sum(dyck.points_at_height(p, 1) for p in paths) == gf1[n]
    return [
        _rec("points at height 2 on Grand-Dyck paths of semilength n-1 <-> z^3B^2C^4",
             f"n<={N}", "series", ok2, "equal"),
        _rec("points at height 1 on Grand-Dyck paths of semilength n-1 <-> z^2B^2C^2",
             f"n<={N}", "series", ok1, "equal"),
    ]


# --- distributions suite -----------------------------------------------------------

def _as_poly(dist) -> LaurentPoly:
    return LaurentPoly.from_dict(dist.coefficients if hasattr(dist, "coefficients") else dist)


def check_den_maj(n_max: int) -> list[CheckRecord]:
    out = []
    for n in range(n_max + 1):
        d = statistics.distribution(n, "321", "den")
        m = statistics.distribution(n, "231", "maj")
        out.append(_rec("q^den over S_n(321) = q^maj over S_n(231)", f"n={n}", "brute force",
                        d == m, _as_poly(d).format()))
    return out


def check_contfrac_distributions(n_max: int) -> list[CheckRecord]:
    F = solvers.contfrac_F(n_max)
    out = []
    for n in range(n_max + 1):
        a = statistics.distribution(n, "231", partial(occurrences, "31-2"))
        b = statistics.distribution(n, "231", partial(occurrences, "13-2"))
        ok = _as_poly(a) == _as_poly(b) == F[n]
        out.append(_rec("q^(31-2) = q^(13-2) over S_n(231) = [z^n] continued fraction",
                        f"n={n}", "series", ok, _as_poly(a).format()))
    return out


def _dyck_histogram(n, fn):
    return LaurentPoly.from_dict(Counter(fn(p) for p in dyck.enumerate_dyck(n)))


def check_bivariate_solvers(n_max: int) -> list[CheckRecord]:
    N = n_max
    F = solvers.solve_des_equation(N)
    H = solvers.solve_Hhat_cubic(N)
    J = solvers.solve_J(N)
    ok_f = all(F[n] == _dyck_histogram(n, lambda p: len(dyck.triple_occurrences(p, "UDD")))
               == _as_poly(statistics.distribution(n, "321", "des")) for n in range(N + 1))
    ok_h = all(H[n] == _dyck_histogram(n, lambda p: dyck.dud_block_stats(p)[0]) for n in range(N + 1))
    ok_j = all(J[n] == _dyck_histogram(n, lambda p: dyck.dud_block_stats(p)[1]) for n in range(N + 1))
    return [
        _rec("[z^n] F(t,z) = t^des over S_n(321) = t^|UDD| over D_n", f"n<={N}", "brute force", ok_f, "equal"),
        _rec("[z^n] H-hat(t,z) = t^(D-blocks before DUD) over D_n", f"n<={N}", "brute force", ok_h, "equal"),
        _rec("[z^n] J(t,z) = t^(off-axis D-blocks before DUD) over D_n", f"n<={N}", "brute force", ok_j, "equal"),
    ]


def check_weighted_dyck(n_max: int) -> list[CheckRecord]:
    N = n_max
    F = solvers.contfrac_F(N)
    peak = solvers.weighted_dyck_gf(N, "peak_height_minus_1")
    ceil_ = solvers.weighted_dyck_gf(N, "ceil_half_U")
    floor_ = solvers.weighted_dyck_gf(N, "floor_half_U")
    mass_ = solvers.weighted_dyck_gf(N, dyck.mass)
    z = Series.z(N)
    return [
        _rec("peak weights q^(h-1) = U weights q^ceil(h/2)", f"order {N}", "brute force", peak == ceil_, "equal"),
        _rec("F(q,z) (1 - z J(q,1;z)) = 1, peak scheme", f"order {N}", "series",
             F * (1 - z * peak) == 1, "holds"),
        _rec("F(q,z) (1 - z J(q,1;z)) = 1, ceil scheme", f"order {N}", "series",
             F * (1 - z * ceil_) == 1, "holds"),
        _rec("U weights q^floor(h/2) reproduce F(q,z)", f"order {N}", "series", floor_ == F, "equal"),
        _rec("q^mass = q^t over D_n", f"order {N}", "brute force", mass_ == floor_, "equal"),
    ]


def check_peak_identity(n_max: int) -> list[CheckRecord]:
    out = []
    ok = True
    for n in range(n_max + 1):
        paths = list(dyck.enumerate_dyck(n))
        a = sum(y for p in paths for _, y in dyck.triple_occurrences(p, "UUD"))
        b = sum(y for p in paths for _, y in dyck.triple_occurrences(p, "UDU"))
        ok &= a == b
    out.append(_rec("sum of y over UUD = sum of y over UDU, over D_n", f"n<={n_max}", "brute force", ok, "equal"))
    return out


# --- polyomino suite ---------------------------------------------------------------

def check_polyominoes(n_max: int) -> list[CheckRecord]:
    N = n_max
    P = solvers.polyomino_gf(N)
    bad = None
    for n in range(2, N + 1):
        areas = Counter(dyck.area(g) for g in dyck.enumerate_polyominoes(n))
        if P[n] != LaurentPoly.from_dict(areas):
            bad = n
            break
    ok_low = P[0] == 0 and P[1] == 0
    ok, lhs, rhs = solvers.flajolet_identity_check(N)
    return [
        _rec("P(q,z) = z(F(q,zq) - 1) = area polynomials of staircase polyominoes",
             f"semiperimeter<={N}", "brute force", bad is None and ok_low, "equal",
             f"first mismatch at semiperimeter {bad}"),
        _rec("P(q,z) + P(1/q,z) + 2z = 1 - 1/sum z^(i+j)[i+j,i]_q[i+j,i]_(1/q)",
             f"order {N}", "series", ok, "holds", f"first mismatch at z^{lhs.first_mismatch(rhs)}"),
        _rec("[3 choose 2]_q = 1 + q + q^2", "", "closed form",
             solvers.q_binomial(2, 1) == LaurentPoly([1, 1, 1]), solvers.q_binomial(2, 1).format()),
    ]


# --- registry ------------------------------------------------------------------------

def _series_checks(n_max, order):
    return [partial(check_bc_identities, max(order, 30)), partial(check_B_C, order),
            partial(check_des_equation, order), partial(check_hhat, order),
            partial(check_contfrac, order), partial(check_maj_two_ways, order)]


def _bijection_checks(n_max, order):
    return [partial(f, n_max) for f in (check_phi_321, check_simion_schmidt, check_phi_kratt,
                                        check_theta, check_xi, check_dud_blocks)]


def _totals_checks(n_max, order):
    return ([partial(check_catalan, n_max)]
            + [partial(check_table_entry, key, n_max) for key in TABLE]
            + [partial(check_equalities, n_max), partial(check_transfer, n_max),
               partial(check_grand_dyck, n_max)])


def _distribution_checks(n_max, order):
    return [partial(f, n_max) for f in (check_den_maj, check_contfrac_distributions,
                                        check_bivariate_solvers, check_weighted_dyck,
                                        check_peak_identity)]


def _polyomino_checks(n_max, order):
    return [partial(check_polyominoes, max(n_max, 8))]


SUITES = {
    "series": _series_checks,
    "bijections": _bijection_checks,
    "totals": _totals_checks,
    "distributions": _distribution_checks,
    "polyomino": _polyomino_checks,
}


def _call(check):
    return check()


def run_suite(suite: str = "all", n_max: int = 9, order: int = 24, jobs: int = 1) -> VerificationReport:
    """Run one suite (or ``"all"``) and collect the records in registry order."""
    if suite != "all" and suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; expected 'all' or one of {sorted(SUITES)}")
    names = list(SUITES) if suite == "all" else [suite]
    checks = [c for name in names for c in SUITES[name](n_max, order)]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_call, checks))
    else:
        results = [c() for c in checks]
    report = VerificationReport(suite, [r for rs in results for r in rs])
    report.duration = time.perf_counter() - start
    log.info("suite %s finished in %.2fs", suite, report.duration)
    return report
