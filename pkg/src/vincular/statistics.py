"""Classical permutation statistics and the Simion-Schmidt bijection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .permutations import (
    Permutation,
    _avoided_letters,
    _require_321,
    enumerate_avoiders,
)

__all__ = [
    "inv", "des", "maj", "den", "excedance_split", "right_to_left_minima",
    "simion_schmidt", "StatDistribution", "distribution", "STATISTICS",
]


def inv(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def descent_positions(perm: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(perm)) if perm[i - 1] > perm[i]]


def des(perm: Sequence[int]) -> int:
    return len(descent_positions(perm))


def maj(perm: Sequence[int]) -> int:
    return sum(descent_positions(perm))


def excedance_split(perm: Sequence[int]) -> tuple[list[int], list[int]]:
    """Entries with ``perm[i] > i`` and entries with ``perm[i] <= i``, in position order."""
    exc, nexc = [], []
    for i, v in enumerate(perm, start=1):
        (exc if v > i else nexc).append(v)
    return exc, nexc


def den(perm: Sequence[int]) -> int:
    """Denert's statistic."""
    exc, nexc = excedance_split(perm)
    return inv(exc) + inv(nexc) + sum(i for i, v in enumerate(perm, start=1) if v > i)


def right_to_left_minima(perm: Sequence[int]) -> list[int]:
    """1-indexed positions of right-to-left minima."""
    out = []
    running = len(perm) + 1
    for i in range(len(perm), 0, -1):
        if perm[i - 1] < running:
            out.append(i)
            running = perm[i - 1]
    return out[::-1]


def simion_schmidt(perm: Sequence[int]) -> Permutation:
    """Map a 321-avoider to a 231-avoider with the same right-to-left minima.

    The remaining values are placed in increasing order, each in the rightmost
    free position where some smaller, already placed value lies to its right.
    """
    _require_321(perm)
    n = len(perm)
    out = [0] * n
    keep = right_to_left_minima(perm)
    for i in keep:
        out[i - 1] = perm[i - 1]
    kept = {perm[i - 1] for i in keep}
    for v in range(1, n + 1):
        if v in kept:
            continue
        smallest_right = n + 1
        slot = None
        for p in range(n - 1, -1, -1):
            if out[p] == 0 and smallest_right < v:
                slot = p
                break
            if out[p]:
                smallest_right = min(smallest_right, out[p])
        if slot is None:
            raise AssertionError(f"no slot for {v} while mapping {tuple(perm)}")
        out[slot] = v
    return tuple(out)


STATISTICS: dict[str, Callable[[Sequence[int]], int]] = {
    "inv": inv,
    "des": des,
    "maj": maj,
    "den": den,
}


@dataclass
class StatDistribution:
    """Sparse histogram ``{value: count}`` of a statistic over a class."""

    coefficients: dict[int, int] = field(default_factory=dict)
    n: int = 0
    label: str = ""

    @property
    def total(self) -> int:
        """Sum of the statistic over the class (the q-derivative at 1)."""
        return sum(k * c for k, c in self.coefficients.items())

    @property
    def size(self) -> int:
        return sum(self.coefficients.values())

    def as_list(self) -> list[int]:
        """Dense coefficient list, index = statistic value."""
        if not self.coefficients:
            return []
        top = max(self.coefficients)
        return [self.coefficients.get(k, 0) for k in range(top + 1)]

    def items(self):
        return sorted(self.coefficients.items())

    def __eq__(self, other):
        if isinstance(other, StatDistribution):
            return self.coefficients == other.coefficients
        if isinstance(other, dict):
            return self.coefficients == other
        return NotImplemented

    def merge(self, other: StatDistribution) -> StatDistribution:
        c = Counter(self.coefficients)
        c.update(other.coefficients)
        return StatDistribution(dict(c), self.n, self.label)


def distribution(n: int, avoided, stat: str | Callable[[Sequence[int]], int]) -> StatDistribution:
    """Histogram of ``stat`` over ``S_n(avoided)``.

    ``stat`` is one of ``inv|des|maj|den`` or any callable on permutations
    (e.g. ``functools.partial(occurrences, "31-2")``).
    """
    if isinstance(stat, str):
        if stat not in STATISTICS:
            raise KeyError(f"unknown statistic {stat!r}; expected one of {sorted(STATISTICS)}")
        name, fn = stat, STATISTICS[stat]
    else:
        name, fn = getattr(stat, "__name__", repr(stat)), stat
    letters = _avoided_letters(avoided)
    counts = Counter(fn(p) for p in enumerate_avoiders(n, letters))
    label = f"{name} on S_{n}({'-'.join(map(str, letters))})"
    return StatDistribution(dict(sorted(counts.items())), n, label)
