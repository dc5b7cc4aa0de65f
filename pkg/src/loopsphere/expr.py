"""Parser for class expressions.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := power ('*' power)*
    power  := atom ('^' INT)?
    atom   := op* base
    op     := 'Q^' INT | 'Q_' INT          (INT may be braced: Q^{11})
    base   := 'x_' INT | '(' expr ')'

Operations apply right to left, so ``Q^5Q^3x_1`` is Q^5(Q^3 x_1).  ``0``
is accepted as the zero class once the base is known from another summand.
"""
from __future__ import annotations

import re

from .dl_core import Element, apply_lower_Q, apply_Q

_TOKEN = re.compile(
    r"\s*(?:(?P<op>Q\s*(?P<kind>[\^_])\s*(?:\{\s*(?P<ib>\d+)\s*\}|(?P<i>\d+)))"
    r"|(?P<x>x\s*_\s*(?:\{\s*(?P<nb>\d+)\s*\}|(?P<n>\d+)))"
    r"|(?P<int>\d+)|(?P<sym>[()+*^]))"
)


class ExprError(ValueError):
    pass


def _tokens(text: str) -> list:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("op"):
            out.append(("op", m.group("kind"), int(m.group("ib") or m.group("i"))))
        elif m.group("x"):
            out.append(("x", int(m.group("nb") or m.group("n"))))
        elif m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        else:
            out.append(("sym", m.group("sym")))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ExprError("unexpected end of expression")
        self.k += 1
        return t

    def sym(self, s: str) -> bool:
        t = self.peek()
        if t and t[0] == "sym" and t[1] == s:
            self.k += 1
            return True
        return False

    def expr(self):
        parts = [self.term()]
        while self.sym("+"):
            parts.append(self.term())
        return ("sum", parts)

    def term(self):
        parts = [self.power()]
        while self.sym("*"):
            parts.append(self.power())
        return ("prod", parts)

    def power(self):
        a = self.atom()
        if self.sym("^"):
            t = self.take()
            if t[0] != "int":
                raise ExprError("exponent must be an integer")
            return ("pow", a, t[1])
        return a

    def atom(self):
        ops = []
        while self.peek() and self.peek()[0] == "op":
            _, kind, i = self.take()
            ops.append((kind, i))
        t = self.take()
        if t[0] == "x":
            base = ("x", t[1])
        elif t == ("sym", "("):
            base = self.expr()
            if not self.sym(")"):
                raise ExprError("missing ')'")
        elif t[0] == "int" and t[1] == 0 and not ops:
            base = ("zero",)
        else:
            raise ExprError(f"expected x_n or '(' but found {t}")
        return ("ops", ops, base) if ops else base


def _bases(node, acc: set) -> None:
    if node[0] == "x":
        acc.add(node[1])
    elif node[0] in ("sum", "prod"):
        for p in node[1]:
            _bases(p, acc)
    elif node[0] == "pow":
        _bases(node[1], acc)
    elif node[0] == "ops":
        _bases(node[2], acc)


def _eval(node, n: int) -> Element:
    tag = node[0]
    if tag == "x":
        return Element.x(n)
    if tag == "zero":
        return Element.zero(n)
    if tag == "sum":
        out = Element.zero(n)
        for p in node[1]:
            out = out + _eval(p, n)
        return out
    if tag == "prod":
        out = Element.one(n)
        for p in node[1]:
            out = out * _eval(p, n)
        return out
    if tag == "pow":
        return _eval(node[1], n) ** node[2]
    if tag == "ops":
        e = _eval(node[2], n)
        for kind, i in reversed(node[1]):
            if kind == "^":
                e = apply_Q(i, e)
            else:
                if not e.is_homogeneous():
                    raise ExprError("lower-indexed operation on a non-homogeneous class")
                e = apply_lower_Q(i, e)
        return e
    raise ExprError(f"bad node {tag}")


def parse_class(text: str) -> Element:
    """Parse and normalize a class expression."""
    p = _Parser(_tokens(text))
    tree = p.expr()
    if p.peek() is not None:
        raise ExprError(f"trailing input: {p.peek()}")
    bases: set = set()
    _bases(tree, bases)
    if len(bases) != 1:
        raise ExprError("expression must mention exactly one base class x_n"
                        if not bases else f"mixed base classes {sorted(bases)}")
    n = bases.pop()
    if n < 1:
        raise ExprError("base dimension must be positive")
    return _eval(tree, n)
