"""
Generating functions and binomial closed forms for total occurrences, plus
the block-decomposition transfer rules that produce them.

Keys of :data:`TABLE` are ``(target, anchor, avoided)``: ``target`` is a
pattern in dash notation or a statistic name (``inv``, ``des``, ``maj``,
``den``, ``2-13L``); ``avoided`` is ``"231"`` or ``"321"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .expr import evaluate
from .permutations import VincularPattern, as_pattern, is_plus_indecomposable
from .series import Series, binomial, catalan

__all__ = [
    "ClosedForm", "TableEntry", "TABLE", "closed_form_table", "lookup",
    "TRANSFER_RULES", "transfer_pattern", "apply_transfer", "brute_force_total",
]


@dataclass(frozen=True)
class ClosedForm:
    name: str
    eval: Callable[[int], int]

    def __call__(self, n: int) -> int:
        return self.eval(n)


@dataclass(frozen=True)
class TableEntry:
    target: str
    anchor: str
    avoided: str
    expression: str
    closed_form: ClosedForm | None = None

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.target, self.anchor, self.avoided)

    def series(self, order: int) -> Series:
        return evaluate(self.expression, order)


def _inversions_321(n):
    return 4 ** (n - 1) - binomial(2 * n - 1, n) if n >= 1 else 0


def _half_exact(v: int) -> int:
    q, r = divmod(v, 2)
    if r:
        raise ArithmeticError(f"{v} is odd")
    return q


def _den_maj(n):
    return _half_exact(n * binomial(2 * n - 1, n) - 4 ** (n - 1)) if n >= 1 else 0


def _maj_321(n):
    return binomial(n, 2) * catalan(n - 1) if n >= 1 else 0


CF = {
    "inv321": ClosedForm("4^(n-1) - binom(2n-1, n)", _inversions_321),
    "maj321": ClosedForm("binom(n, 2) C_(n-1)", _maj_321),
    "den": ClosedForm("(n binom(2n-1, n) - 4^(n-1)) / 2", _den_maj),
    "213L": ClosedForm("binom(2n-2, n-4)", lambda n: binomial(2 * n - 2, n - 4)),
    "des231": ClosedForm("binom(2n-1, n-2)", lambda n: binomial(2 * n - 1, n - 2)),
    "2-13": ClosedForm("binom(2n-1, n-3)", lambda n: binomial(2 * n - 1, n - 3)),
    "213": ClosedForm("binom(2n-3, n-3)", lambda n: binomial(2 * n - 3, n - 3)),
    "123": ClosedForm("binom(2n-2, n-3)", lambda n: binomial(2 * n - 2, n - 3)),
    "des321": ClosedForm("binom(2n-2, n-2)", lambda n: binomial(2 * n - 2, n - 2)),
    "ones": ClosedForm("n C_n", lambda n: n * catalan(n)),
    "first1": ClosedForm("C_n [n >= 1]", lambda n: catalan(n) if n >= 1 else 0),
}

_ROWS: list[tuple] = [
    # 321-avoiders
    ("2-1", "none", "321", "z^2*B^2*C^2", CF["inv321"]),
    ("inv", "none", "321", "z^2*B^2*C^2", CF["inv321"]),
    ("21", "none", "321", "z^2*B*C^2", CF["des321"]),
    ("des", "none", "321", "z^2*B*C^2", CF["des321"]),
    ("31-2", "none", "321", "z^3*B^2*C^3", None),
    ("23-1", "none", "321", "z^3*B^2*C^3", None),
    ("maj", "none", "321", "z^2*B^3", CF["maj321"]),
    ("den", "none", "321", "z^2*B^3*C", CF["den"]),
    ("2-13L", "none", "321", "z^4*B*C^6", CF["213L"]),
    # 231-avoiders, length 1
    ("1", "none", "231", "z*B*C^2", CF["ones"]),
    ("1", "first", "231", "z*C^2", CF["first1"]),
    ("1", "last", "231", "z*C^2", CF["first1"]),
    # length 2
    ("2-1", "none", "231", "z^2*B^2*C^3", None),
    ("1-2", "none", "231", "z^2*B^3*C^2", None),
    ("21", "none", "231", "z^2*B*C^3", CF["des231"]),
    ("12", "none", "231", "z^2*B*C^3", CF["des231"]),
    ("des", "none", "231", "z^2*B*C^3", CF["des231"]),
    ("2-1", "first", "231", "z^2*B*C^3", CF["des231"]),
    ("1-2", "first", "231", "z^2*B*C^3", CF["des231"]),
    ("21", "first", "231", "z^2*C^3", None),
    ("12", "first", "231", "z^2*C^2", None),
    ("1-2", "last", "231", "z^2*B*C^4", None),
    ("2-1", "last", "231", "z^2*C^4", None),
    ("12", "last", "231", "z^2*C^3", None),
    ("21", "last", "231", "z^2*C^2", None),
    # classical length 3
    ("3-2-1", "none", "231", "z^3*B^3*C^4", None),
    ("3-1-2", "none", "231", "z^3*B^4*C^3", None),
    ("1-3-2", "none", "231", "z^3*B^4*C^3", None),
    ("2-1-3", "none", "231", "z^3*B^4*C^3", None),
    ("1-2-3", "none", "231", "z^3*B^5*C^3", None),
    ("2-3-1", "none", "231", "0", None),
    # vincular length 3
    ("3-21", "none", "231", "z^3*B^2*C^4", None),
    ("3-12", "none", "231", "z^3*B^2*C^4", None),
    ("32-1", "none", "231", "z^3*B^2*C^4", None),
    ("31-2", "none", "231", "z^3*B^2*C^4", None),
    ("13-2", "none", "231", "z^3*B^2*C^4", None),
    ("1-32", "none", "231", "z^3*B^3*C^3", None),
    ("21-3", "none", "231", "z^3*B^3*C^3", None),
    ("12-3", "none", "231", "z^3*B^3*C^3", None),
    ("2-13", "none", "231", "z^3*B*C^5", CF["2-13"]),
    ("1-23", "none", "231", "z^3*B^3*C^3+z^4*B^2*C^6", None),
    ("321", "none", "231", "z^3*B*C^4", None),
    ("132", "none", "231", "z^3*B*C^4", None),
    ("123", "none", "231", "z^3*B*C^4", CF["123"]),
    ("312", "none", "231", "z^3*B*C^3", None),
    ("213", "none", "231", "z^3*B*C^3", CF["213"]),
    ("23-1", "none", "231", "0", None),
    ("2-31", "none", "231", "0", None),
    ("231", "none", "231", "0", None),
    ("maj", "none", "231", "z^2*B^3*C", CF["den"]),
]

TABLE: dict[tuple[str, str, str], TableEntry] = {
    (t, a, c): TableEntry(t, a, c, e, f) for t, a, c, e, f in _ROWS
}

STAT_TARGETS = ("inv", "des", "maj", "den", "2-13L")


def closed_form_table() -> dict[tuple[str, str, str], TableEntry]:
    return dict(TABLE)


def _class_key(avoided) -> str:
    s = str(avoided).replace("-", "")
    if s not in ("231", "321"):
        raise KeyError(f"no table entries for class {avoided!r}")
    return s


def lookup(target: str | VincularPattern, avoided, anchor: str = "none") -> TableEntry:
    """Table entry for a pattern (or statistic) on a class; ``KeyError`` if absent."""
    if isinstance(target, VincularPattern):
        target, anchor = target.text, target.anchor
    key = (target, anchor, _class_key(avoided))
    if key not in TABLE:
        raise KeyError(f"no closed form for {key}")
    return TABLE[key]


# --- transfer rules ------------------------------------------------------------

# rule -> (outputs it can produce, which input each output consumes,
#          outputs that require rho plus-indecomposable)
TRANSFER_RULES = {
    "m-rho": {"f": ("g", "zBC"), "f_hat": ("g", "zC")},
    "mrho": {"f": ("g_hat", "zBC"), "f_hat": ("g_hat", "zC")},
    "1-rho'": {"f": ("g", "zB^2"), "f_hat": ("g", "zC")},
    "1rho'": {"f": ("g_hat", "zBC"), "f_hat": ("g_hat", "z")},
    "rho-m": {"f": ("g", "zB^2"), "f_tilde": ("g", "zC^2")},
    "rhom": {"f": ("g_tilde", "zBC"), "f_tilde": ("g_tilde", "zC")},
}

_NEEDS_INDECOMPOSABLE = {("1-rho'", "f"), ("1rho'", "f"),
                         ("rho-m", "f"), ("rho-m", "f_tilde"),
                         ("rhom", "f"), ("rhom", "f_tilde")}

_MULTIPLIERS = {"zBC": "z*B*C", "zC": "z*C", "zB^2": "z*B^2", "z": "z", "zC^2": "z*C^2"}


def transfer_pattern(rule: str, rho: VincularPattern | str) -> VincularPattern:
    """The pattern ``tau`` a rule builds from ``rho`` (anchor dropped)."""
    rho = as_pattern(rho).with_anchor("none")
    m = len(rho) + 1
    shifted = frozenset(i + 1 for i in rho.glued)
    if rule == "m-rho":
        return VincularPattern((m,) + rho.letters, shifted)
    if rule == "mrho":
        return VincularPattern((m,) + rho.letters, shifted | {1})
    if rule == "1-rho'":
        return VincularPattern((1,) + tuple(v + 1 for v in rho.letters), shifted)
    if rule == "1rho'":
        return VincularPattern((1,) + tuple(v + 1 for v in rho.letters), shifted | {1})
    if rule == "rho-m":
        return VincularPattern(rho.letters + (m,), rho.glued)
    if rule == "rhom":
        return VincularPattern(rho.letters + (m,), rho.glued | {m - 1})
    raise KeyError(f"unknown transfer rule {rule!r}")


def apply_transfer(rule: str, bundle: dict[str, Series], plus_indecomposable: bool = False,
                   rho: VincularPattern | str | None = None) -> dict[str, Series]:
    """Generating functions for ``tau`` from those of ``rho`` on 231-avoiders.

    ``bundle`` maps ``g`` / ``g_hat`` / ``g_tilde`` to the series of
    ``(rho)``, ``[rho)`` and ``(rho]``.  Outputs whose formula needs ``rho``
    plus-indecomposable are produced only when the flag is set (or when
    ``rho`` is given and is plus-indecomposable); the right-hand rules refuse
    to run at all without it.
    """
    if rule not in TRANSFER_RULES:
        raise KeyError(f"unknown transfer rule {rule!r}")
    if rho is not None:
        plus_indecomposable = plus_indecomposable or is_plus_indecomposable(as_pattern(rho).letters)
    if rule in ("rho-m", "rhom") and not plus_indecomposable:
        raise ValueError(f"rule {rule!r} requires a plus-indecomposable rho")
    out = {}
    for name, (source, mult) in TRANSFER_RULES[rule].items():
        if (rule, name) in _NEEDS_INDECOMPOSABLE and not plus_indecomposable:
            continue
        if source not in bundle:
            raise KeyError(f"rule {rule!r} needs {source!r} to produce {name!r}")
        g = bundle[source]
        out[name] = evaluate(_MULTIPLIERS[mult], g.order) * g
    return out


def brute_force_total(entry: TableEntry | tuple, n: int) -> int:
    """Total of the entry's pattern or statistic over the class, by enumeration."""
    from .permutations import enumerate_avoiders, occurrences_2_13_low, total_occurrences
    from .statistics import STATISTICS

    if isinstance(entry, tuple):
        entry = TABLE[entry]
    if entry.target == "2-13L":
        return sum(occurrences_2_13_low(p) for p in enumerate_avoiders(n, entry.avoided))
    if entry.target in STATISTICS:
        fn = STATISTICS[entry.target]
        return sum(fn(p) for p in enumerate_avoiders(n, entry.avoided))
    return total_occurrences(n, entry.avoided, entry.target, entry.anchor)
