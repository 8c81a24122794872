"""
Exact power series in ``z`` truncated at a fixed order.

Coefficients are Python ints or :class:`~vincular.poly.LaurentPoly` values in
a marker variable (q, t or u).  A series of order ``N`` knows the
coefficients of ``z^0 .. z^N``; binary operations on series of different
orders truncate to the smaller one.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Iterable

from .poly import LaurentPoly, at_one, derivative_at_one

__all__ = [
    "Series", "make_B", "make_C", "catalan_fixed_point", "binomial",
    "catalan", "lemma_identities_check", "DEFAULT_ORDER",
]

DEFAULT_ORDER = 24


def _is_zero(c) -> bool:
    return c == 0


class Series:
    """Truncated power series ``sum(coeffs[n] * z**n for n <= order)``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = c[:order + 1]
        c.extend([0] * (order + 1 - len(c)))
        self.coeffs = c
        self.order = order

    # --- constructors ---
    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def z(cls, order: int, power: int = 1) -> Series:
        return cls([0] * power + [1], order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> Series:
        return cls([f(n) for n in range(order + 1)], order)

    # --- access ---
    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> Series:
        return Series(self.coeffs, min(order, self.order))

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return n
        return None

    # --- arithmetic ---
    def _other(self, other) -> Series | None:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return Series([other], self.order)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        return Series([self.coeffs[n] + o.coeffs[n] for n in range(N + 1)], N)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        N = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i in range(N + 1):
            x = a[i]
            if _is_zero(x):
                continue
            for j in range(N + 1 - i):
                y = b[j]
                if not _is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return Series(out, N)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        out = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.reciprocal()
        if isinstance(other, int):
            return self.exact_div(other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def reciprocal(self) -> Series:
        """Multiplicative inverse; the constant term must be a unit (+-1 or +-x^k)."""
        c0 = self.coeffs[0]
        if isinstance(c0, int):
            if c0 not in (1, -1):
                raise ZeroDivisionError(f"constant term {c0} is not invertible over the integers")
            inv0 = c0
        elif isinstance(c0, LaurentPoly) and c0.is_unit():
            inv0 = c0.inv()
        else:
            raise ZeroDivisionError(f"constant term {c0} is not invertible")
        N = self.order
        a = self.coeffs
        r = [0] * (N + 1)
        r[0] = inv0
        for n in range(1, N + 1):
            acc = 0
            for k in range(1, n + 1):
                if not _is_zero(a[k]) and not _is_zero(r[n - k]):
                    acc = acc + a[k] * r[n - k]
            r[n] = -(acc * inv0)
        return Series(r, N)

    def exact_div(self, d: int) -> Series:
        """Divide every coefficient by the integer ``d``; inexact division raises."""
        out = []
        for c in self.coeffs:
            if isinstance(c, LaurentPoly):
                out.append(c.exact_div(d))
            else:
                q, r = divmod(c, d)
                if r:
                    raise ArithmeticError(f"coefficient {c} is not divisible by {d}")
                out.append(q)
        return Series(out, self.order)

    def derivative(self) -> Series:
        """d/dz; the result has order one less (at least 0)."""
        N = max(self.order - 1, 0)
        return Series([(n + 1) * self[n + 1] for n in range(N + 1)], N)

    def shift(self, k: int = 1) -> Series:
        """Multiply by ``z**k`` keeping the order."""
        return Series([0] * k + self.coeffs[:self.order + 1 - k], self.order)

    def substitute_z_times(self, marker: LaurentPoly | None = None) -> Series:
        """``A(z) -> A(z * marker)``: coefficient ``n`` is multiplied by ``marker**n``."""
        if marker is None:
            marker = LaurentPoly.x()
        out = []
        power = LaurentPoly([1])
        for c in self.coeffs:
            out.append(c * power if not _is_zero(c) else 0)
            power = power * marker
        return Series(out, self.order)

    def map(self, f: Callable) -> Series:
        return Series([f(c) for c in self.coeffs], self.order)

    def at_marker_one(self) -> Series:
        return self.map(at_one)

    def marker_derivative_at_one(self) -> Series:
        """``d/dt`` at ``t = 1`` of a bivariate series."""
        return self.map(derivative_at_one)

    def reciprocal_marker(self) -> Series:
        """Coefficientwise ``q -> 1/q``."""
        return self.map(lambda c: c.reciprocal_variable() if isinstance(c, LaurentPoly) else c)

    # --- comparison / display ---
    def __eq__(self, other):
        o = self._other(other) if not isinstance(other, (list, tuple)) else Series(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        return all(self.coeffs[n] == o.coeffs[n] for n in range(N + 1))

    __hash__ = None

    def first_mismatch(self, other: Series) -> int | None:
        N = min(self.order, other.order)
        for n in range(N + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __repr__(self):
        return f"Series({self.coeffs!r}, order={self.order})"

    def to_list(self) -> list:
        return list(self.coeffs)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan(n: int) -> int:
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


def catalan_fixed_point(N: int) -> Series:
    """Solve ``C = 1 + z C^2`` by iteration; each pass fixes one more coefficient."""
    z = Series.z(N)
    C = Series.one(N)
    for _ in range(N + 1):
        C = 1 + z * C * C
    return C


def make_C(N: int = DEFAULT_ORDER) -> Series:
    """Catalan series from binomials, confirmed against the fixed point of ``C = 1 + zC^2``."""
    direct = Series.from_function(catalan, N)
    if direct != catalan_fixed_point(N):
        raise ArithmeticError("binomial and fixed-point Catalan series disagree")
    return direct


def make_B(N: int = DEFAULT_ORDER) -> Series:
    """Central binomial series ``1/sqrt(1-4z)``, confirmed against ``B = 1 + 2zBC``."""
    direct = Series.from_function(lambda n: comb(2 * n, n), N)
    z, C = Series.z(N), make_C(N)
    B = Series.one(N)
    for _ in range(N + 1):
        B = 1 + 2 * z * B * C
    if direct != B:
        raise ArithmeticError("binomial and fixed-point central binomial series disagree")
    return direct


def lemma_identities_check(N: int = 30) -> list[tuple[str, bool]]:
    """Check the standard B/C identities to order ``N``; returns ``(name, ok)`` pairs."""
    if N < 1:
        raise ValueError("order must be at least 1")
    B, C, z = make_B(N), make_C(N), Series.z(N)
    one = Series.one(N)
    out: list[tuple[str, bool]] = []

    def record(name, ok):
        out.append((name, bool(ok)))

    for k in range(1, 7):
        Ck = C ** k
        ok = True
        for n in range(N + 1):
            num = k * comb(2 * n + k, n)
            ok &= num % (2 * n + k) == 0 and Ck[n] == num // (2 * n + k)
        record(f"C^{k} <-> k/(2n+k) binom(2n+k, n)", ok)
    for k in range(0, 7):
        BCk = B * C ** k
        record(f"BC^{k} <-> binom(2n+k, n)", all(BCk[n] == comb(2 * n + k, n) for n in range(N + 1)))
    zBC2 = z * z * B * B * C * C
    record("z^2B^2C^2 <-> 4^(n-1) - binom(2n-1, n)",
           zBC2[0] == 0 and all(zBC2[n] == 4 ** (n - 1) - comb(2 * n - 1, n) for n in range(1, N + 1)))
    record("B = 1 + 2zBC", B == 1 + 2 * z * B * C)
    record("B = 1/(1 - 2zC)", B == (1 - 2 * z * C).reciprocal())
    half = (B + 1).exact_div(2)
    record("(B+1)/2 = B/C", half == B * C.reciprocal())
    record("(B+1)/2 = 1 + zBC", half == 1 + z * B * C)
    record("(B+1)/2 = 1/(1 - zC^2)", half == (1 - z * C * C).reciprocal())
    record("C = 1/(1 - zC)", C == (1 - z * C).reciprocal())
    record("C = 2B/(B+1)", C * (B + 1) == 2 * B)
    record("C = 1 + zC^2", C == one + z * C * C)
    record("C' = BC^2", C.derivative() == B * C * C)
    record("B' = 2B^3", B.derivative() == 2 * B ** 3)
    zC = z * C
    record("(zC)' = C + zBC^2", zC.derivative() == C + z * B * C * C)
    record("(zC)' = B", zC.derivative() == B)
    return out

