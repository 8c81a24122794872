"""Laurent polynomials in one marker variable with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class LaurentPoly:
    """``sum(c[k] * x**(low + k))`` with integer ``c``.

    Instances are immutable and normalised (no leading/trailing zero
    coefficients; the zero polynomial has ``low == 0`` and no coefficients),
    so equality is structural.  Plain ``int`` operands are coerced.

    >>> q = LaurentPoly.x()
    >>> (1 + q) ** 2
    LaurentPoly([1, 2, 1], low=0)
    >>> (q + q.inv()).terms()
    [(-1, 1), (1, 1)]
    """

    __slots__ = ("coeffs", "low")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        if start == end:
            self.coeffs: tuple[int, ...] = ()
            self.low = 0
        else:
            self.coeffs = tuple(int(v) for v in c[start:end])
            self.low = low + start

    @classmethod
    def x(cls, power: int = 1) -> LaurentPoly:
        return cls([1], power)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls([c])

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> LaurentPoly:
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo)

    # --- structure ---
    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs, ascending."""
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c]

    def coeff(self, e: int) -> int:
        k = e - self.low
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def to_dict(self) -> dict[int, int]:
        return dict(self.terms())

    def dense(self) -> list[int]:
        """Coefficients of x^0..x^high; requires no negative exponents."""
        if self.is_zero():
            return []
        if self.low < 0:
            raise ValueError("polynomial has negative exponents")
        return [0] * self.low + list(self.coeffs)

    # --- arithmetic ---
    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        lo = min(self.low, o.low)
        hi = max(self.high, o.high)
        c = [0] * (hi - lo + 1)
        for k, v in enumerate(self.coeffs):
            c[self.low - lo + k] += v
        for k, v in enumerate(o.coeffs):
            c[o.low - lo + k] += v
        return LaurentPoly(c, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-v for v in self.coeffs], self.low)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([v * other for v in self.coeffs], self.low)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return LaurentPoly(c, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = LaurentPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_unit(self) -> bool:
        """Units of Z[x, 1/x] are the monomials with coefficient +-1."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def inv(self) -> LaurentPoly:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not invertible")
        return LaurentPoly([self.coeffs[0]], -self.low)

    def exact_div(self, d: int) -> LaurentPoly:
        """Divide every coefficient by ``d``; non-exact division is an error."""
        out = []
        for v in self.coeffs:
            q, r = divmod(v, d)
            if r:
                raise ArithmeticError(f"{v} is not divisible by {d}")
            out.append(q)
        return LaurentPoly(out, self.low)

    # --- substitutions ---
    def __call__(self, x):
        if self.is_zero():
            return 0
        if self.low < 0 and not isinstance(x, Fraction):
            x = Fraction(x)
        total = 0
        for e, c in self.terms():
            total += c * x ** e
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def at_one(self) -> int:
        return sum(self.coeffs)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly([(self.low + k) * c for k, c in enumerate(self.coeffs)], self.low - 1)

    def reciprocal_variable(self) -> LaurentPoly:
        """Substitute ``x -> 1/x``."""
        return LaurentPoly(self.coeffs[::-1], -self.high) if self.coeffs else LaurentPoly()

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``x**k``."""
        return LaurentPoly(self.coeffs, self.low + k)

    # --- comparison / display ---
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.low == o.low and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)}, low={self.low})"

    def format(self, var: str = "q") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                mono = str(c)
            else:
                base = var if e == 1 else f"{var}^{e}"
                mono = base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = format


def poly(coeffs: Sequence[int], low: int = 0) -> LaurentPoly:
    return LaurentPoly(coeffs, low)


def at_one(c) -> int:
    """Evaluate a coefficient (int or polynomial) at marker = 1."""
    return c.at_one() if isinstance(c, LaurentPoly) else c


def derivative_at_one(c) -> int:
    """d/dx of a coefficient evaluated at x = 1 (0 for plain ints)."""
    return c.derivative().at_one() if isinstance(c, LaurentPoly) else 0
