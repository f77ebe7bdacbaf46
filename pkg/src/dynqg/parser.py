"""Recursive-descent parser for coefficient, algebra and fiber-chain expressions.

Grammar (whitespace insensitive except around the fiber separator)::

    chain  := expr ( " (x) " expr )*
    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := power (("*"|"/") power)*
    power  := postfix ["^" ["-"] INT]
    postfix:= atom ("@" shift)*
    shift  := ["-"] INT | "[" INT ("," INT)* "]"
    atom   := NUM | IDENT | IDENT "(" chain ")" | "Z[" INT "," INT "]"
            | "<" INT ("," INT)* ">" | "(" chain ")"

The parser only builds a tree; evaluation is delegated to a context object.
"""

from __future__ import annotations

import re
from fractions import Fraction


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^@()\[\],<>])"
)


def tokenize(text: str) -> list:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        # the fiber separator must stand alone between blanks
        if text.startswith("(x)", pos) and (pos == 0 or text[pos - 1].isspace()) and (
            pos + 3 == n or text[pos + 3].isspace()
        ):
            toks.append(("fiber", "(x)", pos))
            pos += 3
            continue
        if text.startswith("⊗", pos):
            toks.append(("fiber", "(x)", pos))
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(kind), pos))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val: str):
        t = self.take()
        if t[1] != val:
            raise ParseError(f"expected {val!r} at {t[2]}, found {t[1]!r}")
        return t

    def error(self, msg: str):
        return ParseError(f"{msg} at {self.peek()[2]} in {self.text!r}")

    def parse(self):
        node = self.chain()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def chain(self):
        parts = [self.expr()]
        while self.peek()[0] == "fiber":
            self.take()
            parts.append(self.expr())
        return parts[0] if len(parts) == 1 else ("fiber", parts)

    def expr(self):
        sign = None
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = self.take()[1]
        node = self.term()
        if sign == "-":
            node = ("neg", node)
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.power()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def integer(self) -> int:
        neg = False
        if self.peek()[1] == "-":
            self.take()
            neg = True
        t = self.take()
        if t[0] != "num":
            raise ParseError(f"expected integer at {t[2]}")
        return -int(t[1]) if neg else int(t[1])

    def int_list(self, close: str) -> tuple:
        vals = [self.integer()]
        while self.peek()[1] == ",":
            self.take()
            vals.append(self.integer())
        self.expect(close)
        return tuple(vals)

    def power(self):
        node = self.postfix()
        if self.peek()[1] == "^":
            self.take()
            node = ("pow", node, self.integer())
        return node

    def postfix(self):
        node = self.atom()
        while self.peek()[1] == "@":
            self.take()
            if self.peek()[1] == "[":
                self.take()
                vec = self.int_list("]")
            else:
                vec = (self.integer(),)
            node = ("shift", node, vec)
        return node

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return ("num", Fraction(int(val)))
        if kind == "ident":
            self.take()
            if val == "Z" and self.peek()[1] == "[":
                self.take()
                k = self.integer()
                self.expect(",")
                l = self.integer()
                self.expect("]")
                return ("Z", k, l)
            if self.peek()[1] == "(":
                self.take()
                arg = self.chain()
                self.expect(")")
                return ("call", val, arg)
            return ("var", val)
        if val == "<":
            self.take()
            return ("grp", self.int_list(">"))
        if val == "(":
            self.take()
            node = self.chain()
            self.expect(")")
            return node
        raise self.error(f"unexpected {val!r}")


def parse(text: str):
    """Parse ``text`` into a tree of tuples."""
    return _Parser(text).parse()


def evaluate(node, ctx):
    """Evaluate a tree with the hooks of ``ctx``.

    ``ctx`` provides ``number``, ``name``, ``call``, ``zsugar``, ``group``,
    ``fiber``, ``shift`` and ``divide``; values must support ``+ - *`` and ``**``.
    """
    tag = node[0]
    if tag == "num":
        return ctx.number(node[1])
    if tag == "var":
        return ctx.name(node[1])
    if tag == "call":
        return ctx.call(node[1], node[2])
    if tag == "Z":
        return ctx.zsugar(node[1], node[2])
    if tag == "grp":
        return ctx.group(node[1])
    if tag == "fiber":
        return ctx.fiber(node[1])
    if tag == "neg":
        return -evaluate(node[1], ctx)
    if tag == "add":
        return evaluate(node[1], ctx) + evaluate(node[2], ctx)
    if tag == "sub":
        return evaluate(node[1], ctx) - evaluate(node[2], ctx)
    if tag == "mul":
        return evaluate(node[1], ctx) * evaluate(node[2], ctx)
    if tag == "div":
        return ctx.divide(evaluate(node[1], ctx), evaluate(node[2], ctx))
    if tag == "pow":
        return ctx.power(evaluate(node[1], ctx), node[2])
    if tag == "shift":
        return ctx.shift(evaluate(node[1], ctx), node[2])
    raise ParseError(f"unknown node {tag}")


class BaseContext:
    """Evaluates expressions to plain rational functions of a base."""

    def __init__(self, base, slot=None):
        self.base = base
        self.slot = slot

    def number(self, q):
        return self.base.const(q)

    def name(self, nm):
        if nm == "eps" and nm not in self.base.var_names:
            return self.base.gens_rf(self.base.eps_index)
        if nm not in self.base.var_names:
            raise ParseError(f"unknown variable {nm!r} in base {self.base.name}")
        return self.base.var(nm)

    def call(self, fname, arg):
        raise ParseError(f"{fname}(...) is not allowed in a base expression")

    def zsugar(self, k, l):
        return self.base.Z(k, l)

    def group(self, vec):
        raise ParseError("group elements are not base elements")

    def fiber(self, parts):
        raise ParseError("fiber separator in a base expression")

    def divide(self, a, b):
        return a / b

    def power(self, a, k):
        return a ** k

    def shift(self, a, vec):
        vec = tuple(vec)
        if len(vec) == 1 and self.base.gamma_rank > 1:
            vec = vec + (0,) * (self.base.gamma_rank - 1)
        if len(vec) != self.base.gamma_rank:
            raise ParseError("shift has the wrong rank")
        return self.base.act(vec, a)


def parse_base(text: str, base):
    """Parse a base expression (plain variables, ``Z[k,l]``, ``@k`` shifts)."""
    return evaluate(parse(str(text)), BaseContext(base))
