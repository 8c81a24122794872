"""
Tiny expression language over ``B``, ``C`` and ``z``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-')? atom ('^' INT)?
    atom   := 'B' | 'C' | 'z' | INT | '(' expr ')'

>>> evaluate("z^2*B^3", 5).to_list()
[0, 0, 1, 6, 30, 140]
"""

from __future__ import annotations

import re

from .series import Series, make_B, make_C

__all__ = ["evaluate", "ExpressionError"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([BCz])|([-+*^()]))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, order):
        self.tokens = tokens
        self.i = 0
        self.order = order
        self._atoms = {}

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ExpressionError(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def atom_series(self, name):
        if name not in self._atoms:
            N = self.order
            self._atoms[name] = {"B": make_B, "C": make_C, "z": Series.z}[name](N)
        return self._atoms[name]

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        value = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ExpressionError(f"exponent must be a nonnegative integer, got {tok!r}")
            value = value ** int(tok)
        return -value if negate else value

    def atom(self):
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok.isdigit():
            return Series([int(tok)], self.order)
        if tok in ("B", "C", "z"):
            return self.atom_series(tok)
        raise ExpressionError(f"unexpected token {tok!r}")


def evaluate(text: str, order: int) -> Series:
    """Evaluate an expression to a series with exact coefficients up to ``z^order``."""
    if order < 0:
        raise ExpressionError("order must be nonnegative")
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionError("empty expression")
    p = _Parser(tokens, order)
    value = p.expr()
    if p.peek() is not None:
        raise ExpressionError(f"trailing input at token {p.peek()!r}")
    return value
