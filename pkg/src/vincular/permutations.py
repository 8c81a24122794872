"""
Permutations in one-line notation, vincular patterns and occurrence counting.

Permutations are plain tuples of the integers 1..n.  Positions are 1-indexed
whenever they are reported to the caller (descent positions, high/low split).

>>> p = parse_pattern("2-13")
>>> p.letters, sorted(p.glued)
((2, 1, 3), [2])
>>> occurrences(p, (2, 1, 3)), occurrences(p, (3, 1, 2))
(1, 0)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, permutations
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "Permutation", "VincularPattern", "AvoidanceClass", "ANCHORS",
    "parse_pattern", "as_pattern", "is_permutation", "occurrences", "avoids",
    "enumerate_avoiders", "naive_avoiders", "total_occurrences", "rc",
    "inverse", "is_plus_indecomposable", "classify_high_low",
    "occurrences_2_13_low", "CLASSICAL_3",
]

Permutation = tuple[int, ...]

ANCHORS = ("none", "first", "last")

_PATTERN_RE = re.compile(r"^[1-9](-?[1-9])*$")

# rows handed to numpy at once when totalling over a class
_CHUNK = 1 << 16

# classes up to this size are materialised and cached
_CACHE_MAX_N = 11


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


@dataclass(frozen=True)
class VincularPattern:
    """A short permutation with adjacency constraints and an optional anchor.

    ``glued`` holds 1-indexed ``i`` such that letters ``i`` and ``i + 1`` must
    sit in adjacent positions of the host.  ``anchor="first"`` forces the
    occurrence to use the host's first entry, ``"last"`` its last entry.
    """

    letters: tuple[int, ...]
    glued: frozenset[int] = field(default_factory=frozenset)
    anchor: str = "none"

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "glued", frozenset(self.glued))
        m = len(self.letters)
        if m == 0:
            raise ValueError("pattern must have at least one letter")
        if not is_permutation(self.letters):
            raise ValueError(f"letters {self.letters} are not a permutation of 1..{m}")
        if not all(1 <= i < m for i in self.glued):
            raise ValueError(f"glued positions {sorted(self.glued)} out of range for length {m}")
        if self.anchor not in ANCHORS:
            raise ValueError(f"anchor must be one of {ANCHORS}, got {self.anchor!r}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        out = str(self.letters[0])
        for i, c in enumerate(self.letters[1:], start=1):
            out += ("" if i in self.glued else "-") + str(c)
        if self.anchor == "first":
            return f"[{out})"
        if self.anchor == "last":
            return f"({out}]"
        return out

    @property
    def text(self) -> str:
        """Dash notation without the anchor brackets."""
        return str(self.with_anchor("none"))

    @property
    def is_classical(self) -> bool:
        return not self.glued and self.anchor == "none"

    def with_anchor(self, anchor: str) -> VincularPattern:
        return VincularPattern(self.letters, self.glued, anchor)


def parse_pattern(text: str, anchor: str = "none") -> VincularPattern:
    """Read dash notation such as ``"2-31"``; missing dashes mean adjacency."""
    text = text.strip()
    if not text:
        raise ValueError("empty pattern")
    if not _PATTERN_RE.match(text):
        raise ValueError(f"malformed pattern {text!r}")
    letters = []
    glued = set()
    dash = True
    for ch in text:
        if ch == "-":
            dash = True
            continue
        if letters and not dash:
            glued.add(len(letters))
        letters.append(int(ch))
        dash = False
    return VincularPattern(tuple(letters), frozenset(glued), anchor)


def as_pattern(p: VincularPattern | str, anchor: str | None = None) -> VincularPattern:
    if isinstance(p, str):
        return parse_pattern(p, anchor or "none")
    if anchor is not None and anchor != p.anchor:
        return p.with_anchor(anchor)
    return p


@dataclass(frozen=True)
class AvoidanceClass:
    """``S_n(avoided)`` for a classical pattern of length 3."""

    avoided: VincularPattern
    n: int

    def __post_init__(self):
        if len(self.avoided) != 3 or self.avoided.glued or self.avoided.anchor != "none":
            raise ValueError("avoided pattern must be classical of length 3")
        if self.n < 0:
            raise ValueError("n must be nonnegative")

    def __iter__(self):
        return enumerate_avoiders(self.n, self.avoided)


CLASSICAL_3 = tuple(VincularPattern(p) for p in permutations((1, 2, 3)))


@lru_cache(maxsize=None)
def _position_tuples(n: int, m: int, glued: frozenset, anchor: str) -> tuple:
    """All index tuples (0-based) an occurrence may use in a host of length n."""
    if m > n:
        return ()
    out = []

    def extend(prefix):
        k = len(prefix)
        if k == m:
            if anchor == "last" and prefix[-1] != n - 1:
                return
            out.append(tuple(prefix))
            return
        if k == 0:
            starts = [0] if anchor == "first" else range(n - m + 1)
        elif k in glued:
            starts = [prefix[-1] + 1]
        else:
            starts = range(prefix[-1] + 1, n - (m - k) + 1)
        for s in starts:
            if s <= n - (m - k):
                prefix.append(s)
                extend(prefix)
                prefix.pop()

    extend([])
    return tuple(out)


def _letter_order(letters: tuple[int, ...]) -> tuple[int, ...]:
    # pattern indices listed by increasing letter value
    return tuple(sorted(range(len(letters)), key=letters.__getitem__))


def occurrences(p: VincularPattern | str, perm: Sequence[int]) -> int:
    """Number of occurrences of ``p`` in ``perm`` (glue and anchor respected)."""
    p = as_pattern(p)
    order = _letter_order(p.letters)
    count = 0
    for pos in _position_tuples(len(perm), len(p), p.glued, p.anchor):
        vals = [perm[pos[j]] for j in order]
        if all(vals[k] < vals[k + 1] for k in range(len(vals) - 1)):
            count += 1
    return count


def avoids(perm: Sequence[int], p: VincularPattern | str) -> bool:
    return occurrences(p, perm) == 0


def rc(perm: Sequence[int]) -> Permutation:
    """Reverse-complement: ``(n+1-perm[n]) ... (n+1-perm[1])``."""
    n = len(perm)
    return tuple(n + 1 - v for v in reversed(perm))


def inverse(perm: Sequence[int]) -> Permutation:
    out = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        out[v - 1] = i
    return tuple(out)


def is_plus_indecomposable(perm: Sequence[int]) -> bool:
    """False iff ``perm`` splits as a nonempty prefix lying entirely below the suffix."""
    running_max = 0
    for i, v in enumerate(perm[:-1], start=1):
        running_max = max(running_max, v)
        if running_max == i:
            return False
    return len(perm) > 0


# --- avoidance classes ---------------------------------------------------------

def _gen_231(n: int, base: int = 0) -> Iterator[Permutation]:
    # sigma = k sigma_1 sigma_2' with sigma_1 < k < sigma_2'; lexicographic in k first
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for s1 in _gen_231(k - 1, base):
            for s2 in _gen_231(n - k, base + k):
                yield (base + k,) + s1 + s2


def _forbidden_after(prefix: list[int], v: int, letters: tuple[int, ...], n: int) -> int:
    """Bitmask of values ``c`` completing an occurrence ``(a, v, c)`` with ``a`` in ``prefix``."""
    ra, rb, rc_ = letters
    rising = ra < rb
    if rc_ < min(ra, rb):
        # c below both: only the largest usable min(a, v) matters
        cut = max([(a if rising else v) for a in prefix if (a < v) == rising], default=0)
        return (1 << cut) - 2 if cut > 1 else 0
    if rc_ > max(ra, rb):
        cut = min([(v if rising else a) for a in prefix if (a < v) == rising], default=n)
        return ((1 << (n + 1)) - 1) ^ ((1 << (cut + 1)) - 1)
    mask = 0
    for a in prefix:
        if (a < v) == rising:
            lo, hi = (a, v) if rising else (v, a)
            mask |= ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)
    return mask


def _gen_backtrack(n: int, letters: tuple[int, ...]) -> Iterator[Permutation]:
    """Pruned backtracking: each placed entry marks the values that may no longer follow."""
    out: list[Permutation] = []
    prefix: list[int] = []
    values = [(v, 1 << v) for v in range(1, n + 1)]

    def extend(blocked: int):
        k = len(prefix)
        if k == n:
            out.append(tuple(prefix))
            return
        for v, bit in values:
            if not blocked & bit:
                # the last entry constrains nothing further
                extra = _forbidden_after(prefix, v, letters, n) if k < n - 1 else 0
                prefix.append(v)
                extend(blocked | bit | extra)
                prefix.pop()

    extend(0)
    return iter(out)


def _avoided_letters(avoided: VincularPattern | str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(avoided, VincularPattern):
        p = avoided
    elif isinstance(avoided, str):
        text = avoided if "-" in avoided or len(avoided) == 1 else "-".join(avoided)
        p = parse_pattern(text)
    else:
        p = VincularPattern(tuple(avoided))
    if len(p) != 3 or p.glued or p.anchor != "none":
        raise ValueError(f"avoided pattern must be classical of length 3, got {p}")
    return p.letters


@lru_cache(maxsize=None)
def _avoider_list(n: int, letters: tuple[int, ...]) -> tuple[Permutation, ...]:
    return tuple(_generate(n, letters))


def _generate(n: int, letters: tuple[int, ...]) -> Iterator[Permutation]:
    if letters == (2, 3, 1):
        return _gen_231(n)
    return _gen_backtrack(n, letters)


def enumerate_avoiders(n: int, avoided) -> Iterator[Permutation]:
    """Yield ``S_n(avoided)`` in lexicographic order.

    ``avoided`` may be a classical pattern object, a string (``"231"`` or
    ``"2-3-1"``) or a sequence of letters.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    letters = _avoided_letters(avoided)
    if n <= _CACHE_MAX_N:
        return iter(_avoider_list(n, letters))
    return _generate(n, letters)


def naive_avoiders(n: int, avoided) -> list[Permutation]:
    """Filter all of ``S_n``; reference for the specialised generators."""
    p = VincularPattern(_avoided_letters(avoided))
    return [q for q in permutations(range(1, n + 1)) if avoids(q, p)]


def total_occurrences(n: int, avoided, p: VincularPattern | str, anchor: str | None = None) -> int:
    """Total number of occurrences of ``p`` summed over ``S_n(avoided)``."""
    p = as_pattern(p, anchor)
    positions = _position_tuples(n, len(p), p.glued, p.anchor)
    if not positions:
        return 0
    order = _letter_order(p.letters)
    total = 0
    perms = enumerate_avoiders(n, avoided)
    while True:
        chunk = list(islice(perms, _CHUNK))
        if not chunk:
            break
        arr = np.array(chunk, dtype=np.int16)
        if len(order) == 1:
            total += len(chunk) * len(positions)
            continue
        for pos in positions:
            cols = [arr[:, pos[j]] for j in order]
            mask = cols[0] < cols[1]
            for k in range(1, len(cols) - 1):
                mask &= cols[k] < cols[k + 1]
            total += int(np.count_nonzero(mask))
    return total


# --- structure of 321-avoiders -------------------------------------------------

_321 = VincularPattern((3, 2, 1))


def _require_321(perm: Sequence[int]):
    if not is_permutation(perm) or not avoids(perm, _321):
        raise ValueError(f"{tuple(perm)} is not a 321-avoiding permutation")


def classify_high_low(perm: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split positions of a 321-avoider into left-to-right maxima (high) and the rest."""
    _require_321(perm)
    high, low = [], []
    running = 0
    for i, v in enumerate(perm, start=1):
        if v > running:
            high.append(i)
            running = v
        else:
            low.append(i)
    return tuple(high), tuple(low)


def occurrences_2_13_low(perm: Sequence[int]) -> int:
    """Occurrences of 2-13 in a 321-avoider whose '3' is a low entry."""
    _, low = classify_high_low(perm)
    low = set(low)
    count = 0
    n = len(perm)
    for j in range(1, n - 1):
        if j + 2 not in low:
            continue
        lo, hi = perm[j], perm[j + 1]
        count += sum(1 for i in range(j) if lo < perm[i] < hi)
    return count

