"""
Dyck paths, Grand-Dyck paths and staircase polyominoes, with the bijections
that carry permutation statistics onto path statistics.

Paths are strings over ``"UD"``; polyominoes are pairs of strings over ``"NE"``.
Step indices reported to callers are 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .permutations import (
    Permutation,
    _require_321,
    avoids,
    is_permutation,
)

__all__ = [
    "is_dyck", "heights", "peak_heights", "peaks", "triple_occurrences",
    "matching", "mass", "t_stat", "prime_factors", "theta", "theta_inverse",
    "phi_321", "phi_321_inv", "phi_kratt", "phi_kratt_inv", "dud_block_stats",
    "enumerate_dyck", "enumerate_grand_dyck", "points_at_height",
    "StaircasePolyomino", "enumerate_polyominoes", "area", "xi", "xi_inverse",
    "peak_weight", "ceil_half_weight", "floor_half_weight",
]


def is_dyck(path: str) -> bool:
    h = 0
    for s in path:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def _check_steps(path: str):
    if any(s not in "UD" for s in path):
        raise ValueError(f"path {path!r} has steps outside U/D")


def heights(path: str) -> list[int]:
    """Heights of the lattice points 0..len(path)."""
    out = [0]
    for s in path:
        out.append(out[-1] + (1 if s == "U" else -1))
    return out


def peaks(path: str) -> list[int]:
    """0-based indices ``j`` with ``path[j:j+2] == "UD"``."""
    return [j for j in range(len(path) - 1) if path[j] == "U" and path[j + 1] == "D"]


def peak_heights(path: str) -> list[int]:
    h = heights(path)
    return [h[j + 1] for j in peaks(path)]


def triple_occurrences(path: str, word: str) -> list[tuple[int, int]]:
    """Pairs ``(j, y(j))`` where steps ``j, j+1, j+2`` (1-indexed) spell ``word``.

    ``y(j)`` is the height of the leftmost point of step ``j``.
    """
    if len(word) != 3 or any(s not in "UD" for s in word):
        raise ValueError(f"word must be three U/D steps, got {word!r}")
    h = heights(path)
    return [(j + 1, h[j]) for j in range(len(path) - 2) if path[j:j + 3] == word]


def matching(path: str) -> list[int]:
    """``m[j]`` = index of the step matching step ``j`` (0-based, stack scan)."""
    m = [-1] * len(path)
    stack = []
    for j, s in enumerate(path):
        if s == "U":
            stack.append(j)
        else:
            if not stack:
                raise ValueError(f"{path!r} is not a Dyck path")
            i = stack.pop()
            m[i], m[j] = j, i
    if stack:
        raise ValueError(f"{path!r} is not a Dyck path")
    return m


def mass(path: str) -> int:
    """Sum over UU factors of half the number of steps between their matching Ds."""
    m = matching(path)
    total = 0
    for j in range(len(path) - 1):
        if path[j] == "U" and path[j + 1] == "U":
            gap = m[j] - m[j + 1] - 1
            if gap % 2:
                raise AssertionError(f"odd gap in {path!r}")
            total += gap // 2
    return total


def t_stat(path: str) -> int:
    """Sum over U steps of floor(h/2), h the height where the step starts."""
    h = heights(path)
    return sum(h[j] // 2 for j, s in enumerate(path) if s == "U")


# weights used by the weighted-path generating functions

def peak_weight(path: str) -> int:
    return sum(h - 1 for h in peak_heights(path))


def ceil_half_weight(path: str) -> int:
    h = heights(path)
    return sum((h[j] + 1) // 2 for j, s in enumerate(path) if s == "U")


floor_half_weight = t_stat


def prime_factors(path: str) -> list[str]:
    """Split a Dyck path into its elevated components (returns to the axis)."""
    out = []
    h = 0
    start = 0
    for j, s in enumerate(path):
        h += 1 if s == "U" else -1
        if h == 0:
            out.append(path[start:j + 1])
            start = j + 1
    return out


def theta(path: str) -> str:
    """Recursive bijection on Dyck paths with ``mass(theta(p)) == t_stat(p)``."""
    out = []
    for prime in prime_factors(path):
        inner = prime_factors(prime[1:-1])
        cs = [c[1:-1] for c in inner]
        out.append("U" * (len(cs) + 1) + "D")
        for c in cs:
            out.append(theta(c) + "D")
    return "".join(out)


def theta_inverse(path: str) -> str:
    out = []
    for prime in prime_factors(path):
        s = len(prime) - len(prime.lstrip("U")) - 1
        # after U^{s+1} D we sit at height s; each block returns one level lower
        rest = prime[s + 2:]
        blocks = []
        h = 0
        start = 0
        for j, step in enumerate(rest):
            h += 1 if step == "U" else -1
            if h == -1:
                blocks.append(rest[start:j])
                start = j + 1
                h = 0
        out.append("U" + "".join("U" + theta_inverse(c) + "D" for c in blocks) + "D")
    return "".join(out)


# --- 321-avoiders <-> Dyck paths ---------------------------------------------

def phi_321(perm: Sequence[int]) -> str:
    """Path on the n x n array turning right at the crosses ``(i, perm[i])`` with ``perm[i] >= i``.

    North steps read as U, east steps as D.
    """
    _require_321(perm)
    n = len(perm)
    high = [(i, v) for i, v in enumerate(perm, start=1) if v >= i]
    out = []
    prev = 0
    for k, (i, v) in enumerate(high):
        nxt = high[k + 1][0] if k + 1 < len(high) else n + 1
        out.append("U" * (v - prev) + "D" * (nxt - i))
        prev = v
    return "".join(out)


def phi_321_inv(path: str) -> Permutation:
    if not is_dyck(path):
        raise ValueError(f"{path!r} is not a Dyck path")
    n = len(path) // 2
    perm = [0] * n
    x = y = 0
    for j, s in enumerate(path):
        if s == "U":
            y += 1
            if j + 1 < len(path) and path[j + 1] == "D":
                perm[x] = y
        else:
            x += 1
    rest = iter(sorted(set(range(1, n + 1)) - set(perm)))
    return tuple(v if v else next(rest) for v in perm)


def dud_block_stats(path: str) -> tuple[int, int]:
    """D steps in maximal D-blocks directly before a DUD factor.

    The D that starts the DUD is not counted.  The second value skips blocks
    whose DUD ends on the x-axis.
    """
    _check_steps(path)
    h = heights(path)
    total = off_axis = 0
    n = len(path)
    j = 0
    while j < n:
        if path[j] != "D":
            j += 1
            continue
        k = j
        while k < n and path[k] == "D":
            k += 1
        if path[k:k + 2] == "UD":
            total += k - j - 1
            if h[k + 2] != 0:
                off_axis += k - j - 1
        j = k
    return total, off_axis


# --- 231-avoiders <-> Dyck paths ---------------------------------------------

def phi_kratt(perm: Sequence[int]) -> str:
    """``phi(k s1 s2') = U phi(s1) D phi(s2)`` on 231-avoiders."""
    perm = tuple(perm)
    if not is_permutation(perm) or not avoids(perm, "2-3-1"):
        raise ValueError(f"{perm} is not a 231-avoiding permutation")
    return _phi_kratt(perm)


def _phi_kratt(perm: tuple[int, ...]) -> str:
    if not perm:
        return ""
    k = perm[0]
    s1 = perm[1:k]
    s2 = tuple(v - k for v in perm[k:])
    return "U" + _phi_kratt(s1) + "D" + _phi_kratt(s2)


def phi_kratt_inv(path: str, base: int = 0) -> Permutation:
    if not path:
        return ()
    if not is_dyck(path):
        raise ValueError(f"{path!r} is not a Dyck path")
    first = prime_factors(path)[0]
    inner, tail = first[1:-1], path[len(first):]
    k = len(inner) // 2 + 1
    return (base + k,) + phi_kratt_inv(inner, base) + phi_kratt_inv(tail, base + k)


# --- enumeration ---------------------------------------------------------------

def enumerate_dyck(n: int) -> Iterator[str]:
    """All Dyck paths of semilength n, U before D at each branch."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    buf = []

    def extend(up, down):
        if up == down == n:
            yield "".join(buf)
            return
        if up < n:
            buf.append("U")
            yield from extend(up + 1, down)
            buf.pop()
        if down < up:
            buf.append("D")
            yield from extend(up, down + 1)
            buf.pop()

    yield from extend(0, 0)


def enumerate_grand_dyck(n: int) -> Iterator[str]:
    """All U/D words with n of each letter, in the order of U-position subsets."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for ups in combinations(range(2 * n), n):
        w = ["D"] * (2 * n)
        for i in ups:
            w[i] = "U"
        yield "".join(w)


def points_at_height(path: str, h: int) -> int:
    """Lattice points of the path (both endpoints included) at height ``h``."""
    _check_steps(path)
    return heights(path).count(h)


# --- staircase polyominoes -----------------------------------------------------

@dataclass(frozen=True)
class StaircasePolyomino:
    """Region between two N/E paths from (0,0) meeting only at their endpoints."""

    upper: str
    lower: str

    def __post_init__(self):
        if not _valid_polyomino(self.upper, self.lower):
            raise ValueError(f"invalid staircase polyomino {self.upper}/{self.lower}")

    @property
    def semiperimeter(self) -> int:
        return len(self.upper)

    @property
    def area(self) -> int:
        return area(self)


def _valid_polyomino(upper: str, lower: str) -> bool:
    n = len(upper)
    if n < 2 or len(lower) != n or any(s not in "NE" for s in upper + lower):
        return False
    yu = yl = 0
    for k in range(n):
        yu += upper[k] == "N"
        yl += lower[k] == "N"
        if k < n - 1 and yu <= yl:
            return False
    return yu == yl and 0 < yu < n


def area(poly: StaircasePolyomino) -> int:
    """Unit cells enclosed: column heights of the upper path minus the lower."""

    def column_sum(path):
        y = total = 0
        for s in path:
            if s == "N":
                y += 1
            else:
                total += y
        return total

    return column_sum(poly.upper) - column_sum(poly.lower)


def enumerate_polyominoes(n: int) -> Iterator[StaircasePolyomino]:
    """All staircase polyominoes of semiperimeter n, built step by step in pairs."""
    if n < 2:
        raise ValueError("semiperimeter must be at least 2")
    up: list[str] = []
    lo: list[str] = []

    def extend(k, yu, yl):
        # both paths have taken k steps; strictly separated for 0 < k < n
        if k == n:
            if yu == yl:
                yield StaircasePolyomino("".join(up), "".join(lo))
            return
        for su in "NE":
            for sl in "NE":
                nu = yu + (su == "N")
                nl = yl + (sl == "N")
                if k + 1 < n and nu <= nl:
                    continue
                if k + 1 == n and nu != nl:
                    continue
                # upper must still be able to come back down to the lower path
                if nu - nl > n - k - 1 and k + 1 < n:
                    continue
                up.append(su)
                lo.append(sl)
                yield from extend(k + 1, nu, nl)
                up.pop()
                lo.pop()

    yield from extend(0, 0, 0)


def xi(poly: StaircasePolyomino) -> str:
    """Polyomino of semiperimeter n to a Dyck path of semilength n - 1."""
    if not isinstance(poly, StaircasePolyomino):
        poly = StaircasePolyomino(*poly)
    out = ["U"]
    for p, q in zip(poly.upper[1:-1], poly.lower[1:-1]):
        out.append("U" if p == "N" else "D")
        out.append("U" if q == "E" else "D")
    out.append("D")
    return "".join(out)


def xi_inverse(path: str) -> StaircasePolyomino:
    if not is_dyck(path) or not path:
        raise ValueError(f"{path!r} is not a nonempty Dyck path")
    mid = path[1:-1]
    upper = "N" + "".join("N" if s == "U" else "E" for s in mid[0::2]) + "E"
    lower = "E" + "".join("E" if s == "U" else "N" for s in mid[1::2]) + "N"
    return StaircasePolyomino(upper, lower)
