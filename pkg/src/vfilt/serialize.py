"""Text and JSON forms for ideals.

Text form::

    ideal(x^2, x*y^4) in [x, y]
    (x1*x2, x1*x3) in [x1, x2, x3]
    (1) in [x]          # unit ideal
    () in [x, y]        # zero ideal

JSON form: ``{"variables": ["x", "y"], "generators": [[2, 0], [1, 4]]}``.
"""

from __future__ import annotations

import re
from typing import Any

from .monomial import MonomialIdeal, RingContext, minimalize


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line, self.column = line, col


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<int>\d+)|(?P<sym>[(),*^\[\]]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[at]!r}", text, at)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", self.text, tok[2])
        self.i += 1
        return tok

    def term(self) -> list[tuple[str | int, int, int]]:
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.take()
            factors.append(self.factor())
        return factors

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            if val not in ("0", "1"):
                raise ParseError("coefficients are not supported in monomial ideals", self.text, pos)
            return (int(val), 0, pos)
        name = self.take("name")[1]
        exp = 1
        if self.peek()[1] == "^":
            self.take()
            exp = int(self.take("int")[1])
        return (name, exp, pos)

    def ideal(self):
        if self.peek() == ("name", "ideal", self.peek()[2]):
            self.take()
        self.take("sym", "(")
        terms = []
        if self.peek()[1] != ")":
            terms.append(self.term())
            while self.peek()[1] == ",":
                self.take()
                terms.append(self.term())
        self.take("sym", ")")
        names = None
        if self.peek()[0] == "name" and self.peek()[1] == "in":
            self.take()
            self.take("sym", "[")
            names = []
            if self.peek()[1] != "]":
                names.append(self.take("name")[1])
                while self.peek()[1] == ",":
                    self.take()
                    names.append(self.take("name")[1])
            self.take("sym", "]")
        self.take("end")
        return terms, names


def parse_ideal(text: str, ctx: RingContext | None = None) -> MonomialIdeal:
    terms, names = _Parser(text).ideal()
    if names is None:
        if ctx is None:
            seen: list[str] = []
            for t in terms:
                for f, _, _ in t:
                    if isinstance(f, str) and f not in seen:
                        seen.append(f)
            names = seen
        else:
            names = list(ctx.variables)
    try:
        ring = RingContext(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc), text, text.find("[")) from None
    if ctx is not None and ring != ctx:
        raise ValueError(f"ideal ring {ring.variables} differs from expected {ctx.variables}")
    gens = []
    for t in terms:
        e = [0] * ring.dim
        zero = False
        for f, a, pos in t:
            if f == 0:
                zero = True
            elif f == 1:
                continue
            else:
                if f not in ring.variables:
                    raise ParseError(f"variable {f!r} not in {list(ring.variables)}", text, pos)
                e[ring.index(f)] += a
        if not zero:
            gens.append(tuple(e))
    return minimalize(gens, ring)


def format_ideal(I: MonomialIdeal) -> str:
    body = ", ".join(I.ctx.format(g) for g in I.gens)
    return f"ideal({body}) in [{', '.join(I.ctx.variables)}]"


def ideal_to_json(I: MonomialIdeal) -> dict[str, Any]:
    return {"variables": list(I.ctx.variables), "generators": [list(g) for g in I.gens]}


def ideal_from_json(data: dict[str, Any]) -> MonomialIdeal:
    ctx = RingContext(tuple(data["variables"]))
    return minimalize(data["generators"], ctx)
