"""
Solvers for the functional equations behind the enumeration results.

Bivariate series are :class:`Series` in ``z`` whose coefficients are
:class:`LaurentPoly` in the marker (t or q).  Every solver certifies its
answer by substituting back and checking the residual vanishes to the
requested order.
"""

from __future__ import annotations

from typing import Callable

from . import dyck
from .poly import LaurentPoly
from .series import DEFAULT_ORDER, Series, binomial, make_B, make_C

__all__ = [
    "ConvergenceError", "solve_des_equation", "des_residual", "extract_F1",
    "hhat_cubic", "solve_Hhat_cubic", "solve_J", "contfrac_F",
    "contfrac_truncated", "contfrac_fixed_point", "weighted_dyck_gf",
    "WEIGHTS", "gaussian_binomial", "q_binomial", "polyomino_gf",
    "flajolet_identity_check", "maj_gf_two_ways",
]

T = LaurentPoly.x()


class ConvergenceError(RuntimeError):
    pass


def _poly_series(N: int) -> Series:
    # zero series whose arithmetic stays in the polynomial ring
    return Series([LaurentPoly()], N)


# --- descents on 321-avoiders: F = 1 + z(1 + (t-1)z) F^2 ---------------------

def des_residual(F: Series) -> Series:
    N = F.order
    z = Series.z(N)
    kernel = z * (1 + (T - 1) * z)
    return F - 1 - kernel * F * F


def solve_des_equation(N: int = DEFAULT_ORDER) -> Series:
    """``F(t, z)``: 321-avoiders by size and number of descents."""
    z = Series.z(N)
    kernel = z * (1 + (T - 1) * z)
    F = Series.one(N) + _poly_series(N)
    for _ in range(N + 1):
        F = 1 + kernel * F * F
    if not des_residual(F).is_zero():
        raise ConvergenceError("fixed point of the descent equation did not converge")
    return F


def extract_F1(N: int = DEFAULT_ORDER) -> Series:
    """``dF/dt`` at ``t = 1``: total descents over 321-avoiders."""
    return solve_des_equation(N).marker_derivative_at_one()


# --- the cubic for H(t, 1, z) --------------------------------------------------

def _cubic_coefficients(N: int):
    z = Series.z(N)
    a3 = T * z * z
    a2 = -(z * (1 + T - z + T * z))
    a1 = 1 + T * z + T * z * z - z * z
    return a3, a2, a1


def hhat_cubic(H: Series) -> Series:
    """Left side of ``t z^2 H^3 - z(1+t-z+tz) H^2 + (1+tz+tz^2-z^2) H - 1``."""
    a3, a2, a1 = _cubic_coefficients(H.order)
    H2 = H * H
    return a3 * H2 * H + a2 * H2 + a1 * H - 1


def solve_Hhat_cubic(N: int = DEFAULT_ORDER) -> Series:
    """Newton iteration from ``H = 1``; correct orders double each step."""
    a3, a2, a1 = _cubic_coefficients(N)
    H = Series.one(N) + _poly_series(N)
    max_steps = N + 2
    for _ in range(max_steps):
        p = hhat_cubic(H)
        if p.is_zero():
            return H
        H2 = H * H
        dp = 3 * a3 * H2 + 2 * a2 * H + a1
        H = H - p * dp.reciprocal()
    if hhat_cubic(H).is_zero():
        return H
    raise ConvergenceError(f"Newton iteration for the cubic did not converge in {max_steps} steps")


def solve_J(N: int = DEFAULT_ORDER) -> Series:
    """``J(t, z) = 1 / (1 - z H(t, 1, z))``."""
    H = solve_Hhat_cubic(N)
    return (1 - Series.z(N) * H).reciprocal()


# --- the continued fraction for 31-2 / 13-2 on 231-avoiders --------------------

def contfrac_truncated(N: int = DEFAULT_ORDER, depth: int | None = None) -> Series:
    """Evaluate ``1/(1 - z/(1 - z/(1 - zq/(1 - zq/(1 - zq^2/...)))))`` bottom-up.

    Level ``i`` (1-based) carries ``z q^((i-1)//2)``; the tail below ``depth``
    is cut off, which leaves coefficients up to ``z^(depth-1)`` exact.
    """
    if depth is None:
        depth = 2 * N + 2
    z = Series.z(N)
    tail = Series.one(N) + _poly_series(N)
    for i in range(depth, 0, -1):
        level = z * T ** ((i - 1) // 2)
        tail = (1 - level * tail).reciprocal()
    return tail


def contfrac_fixed_point(N: int = DEFAULT_ORDER) -> Series:
    """Iterate ``F(q,z) = 1/(1 - z/(1 - z F(q, zq)))``."""
    z = Series.z(N)
    F = Series.one(N) + _poly_series(N)
    for _ in range(N + 1):
        inner = (1 - z * F.substitute_z_times(T)).reciprocal()
        F = (1 - z * inner).reciprocal()
    check = (1 - z * (1 - z * F.substitute_z_times(T)).reciprocal()).reciprocal()
    if check != F:
        raise ConvergenceError("continued fraction recursion did not converge")
    return F


def contfrac_F(N_z: int = DEFAULT_ORDER, N_q: int | None = None) -> Series:
    """``F(q, z)`` computed two independent ways, which must agree.

    ``N_q`` optionally drops powers of q above ``N_q`` from the result.
    """
    a = contfrac_truncated(N_z)
    b = contfrac_fixed_point(N_z)
    n = a.first_mismatch(b)
    if n is not None:
        raise ArithmeticError(f"continued fraction evaluations disagree at z^{n}")
    if N_q is not None:
        a = a.map(lambda c: LaurentPoly.from_dict({e: v for e, v in c.terms() if e <= N_q})
                  if isinstance(c, LaurentPoly) else c)
    return a


# --- weighted Dyck paths -------------------------------------------------------

WEIGHTS: dict[str, Callable[[str], int]] = {
    "peak_height_minus_1": dyck.peak_weight,
    "ceil_half_U": dyck.ceil_half_weight,
    "floor_half_U": dyck.floor_half_weight,
}


def weighted_dyck_gf(n_max: int, weight: str | Callable[[str], int]) -> Series:
    """``sum over Dyck paths of q^weight(p) z^semilength`` by enumeration."""
    fn = WEIGHTS[weight] if isinstance(weight, str) else weight
    coeffs = []
    for n in range(n_max + 1):
        counts: dict[int, int] = {}
        for p in dyck.enumerate_dyck(n):
            w = fn(p)
            counts[w] = counts.get(w, 0) + 1
        coeffs.append(LaurentPoly.from_dict(counts))
    return Series(coeffs, n_max)


# --- q-binomials and staircase polyominoes -------------------------------------

def gaussian_binomial(n: int, k: int) -> LaurentPoly:
    """``[n choose k]_q`` from the product formula, by exact polynomial division."""
    if k < 0 or k > n:
        return LaurentPoly()
    num = LaurentPoly([1])
    den = LaurentPoly([1])
    for i in range(1, k + 1):
        num = num * (1 - T ** (n - k + i))
        den = den * (1 - T ** i)
    return _poly_divide(num, den)


def q_binomial(i: int, j: int) -> LaurentPoly:
    """``[i+j choose i]_q``, indexed by the two part sizes."""
    if i < 0 or j < 0:
        raise ValueError("part sizes must be nonnegative")
    return gaussian_binomial(i + j, i)


def _poly_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division of polynomials with nonnegative exponents."""
    a = num.dense()
    b = den.dense()
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    lead = b[-1]
    out = [0] * max(len(a) - len(b) + 1, 0)
    a = a[:]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(a[k + len(b) - 1], lead)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        out[k] = q
        for j, c in enumerate(b):
            a[k + j] -= q * c
    if any(a):
        raise ArithmeticError("polynomial division is not exact")
    return LaurentPoly(out)


def polyomino_gf(N: int) -> Series:
    """``P(q, z) = z (F(q, zq) - 1)``: staircase polyominoes by semiperimeter and area."""
    F_hat = contfrac_F(N).substitute_z_times(T)
    return (F_hat - 1).shift(1)


def flajolet_identity_check(N: int = 8) -> tuple[bool, Series, Series]:
    """Compare ``P(q,z) + P(1/q,z) + 2z`` with ``1 - 1/sum z^(i+j) [i+j,i]_q [i+j,i]_{1/q}``.

    Returns ``(ok, lhs, rhs)`` with Laurent-polynomial coefficients.
    """
    P = polyomino_gf(N)
    lhs = P + P.reciprocal_marker() + Series.z(N) * 2
    coeffs = []
    for k in range(N + 1):
        acc = LaurentPoly()
        for i in range(k + 1):
            g = q_binomial(i, k - i)
            acc = acc + g * g.reciprocal_variable()
        coeffs.append(acc)
    S = Series(coeffs, N)
    rhs = 1 - S.reciprocal()
    return lhs == rhs, lhs, rhs


# --- the major index on 231-avoiders -------------------------------------------

def maj_gf_two_ways(N: int = DEFAULT_ORDER) -> Series:
    """``h(z) = sum maj(S_n(231)) z^n`` via a pattern sum and via its linear equation.

    Raises if the two routes, the target ``z^2 B^3 C`` and the closed form
    ``(n binom(2n-1, n) - 4^(n-1)) / 2`` do not all agree.
    """
    B, C, z = make_B(N), make_C(N), Series.z(N)
    z2, z3 = z * z, z * z * z
    by_patterns = z2 * B * C ** 3 + z3 * B ** 3 * C ** 3 + z3 * B ** 2 * C ** 4

    forcing = z2 * B * B * C
    h = Series.zero(N)
    for _ in range(N + 1):
        h = 2 * z * C * h + forcing
    if h != 2 * z * C * h + forcing:
        raise ConvergenceError("linear equation for h did not converge")

    target = z2 * B ** 3 * C
    if not (by_patterns == h == target):
        raise ArithmeticError("major index generating functions disagree")
    for n in range(1, N + 1):
        twice = n * binomial(2 * n - 1, n) - 4 ** (n - 1)
        if twice % 2 or target[n] != twice // 2:
            raise ArithmeticError(f"closed form for maj fails at n={n}")
    return h
