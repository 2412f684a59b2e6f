"""Text form of hereditary forms and shapes.

::

    form    := "0@" base | term (" + " term)*
    term    := coeff "*" base "^" "(" expform ")"
             | coeff "*" base "^" "[" expform ".." expform ")" [ "{" bound "}" ]
    expform := "0" | term (" + " term)*

Whitespace between tokens is ignored.  A run without a ``{bound}`` suffix
ranges over exponents whose digits are at most its coefficient (bound equals
coefficient + 1), which is the only kind the sequence engine creates; the
suffix records any other bound.  Shapes use the same grammar with the base
literal replaced by ``X`` and zero written as ``0``.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from goodstein import terms as T
from goodstein.hereditary import HForm
from goodstein.terms import Atom, NonCanonicalError, Run, Shape

__all__ = ["ParseError", "NonCanonicalError", "parse", "parse_shape", "render",
           "render_shape"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"position {position}: {message}")
        self.position = position
        self.text = text


def render(f: HForm) -> str:
    if f.is_zero():
        return f"0@{f.base}"
    return f.shape.template.replace("X", str(f.base))


def render_shape(s: Shape) -> str:
    return s.template


_TOKEN = re.compile(r"\s*(?:(\d+)|(\.\.)|([X*^()\[\]{}+@]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        else:
            tokens.append(("sym", m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, symbolic: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.symbolic = symbolic
        self.base: Optional[int] = None

    def peek(self, offset: int = 0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def error(self, message: str):
        raise ParseError(message, self.peek()[2], self.text)

    def expect(self, sym: str) -> None:
        kind, value, _ = self.peek()
        if kind != "sym" or value != sym:
            self.error(f"expected {sym!r}, found {value or 'end of input'!r}")
        self.i += 1

    def number(self, what: str) -> int:
        kind, value, pos = self.peek()
        if kind != "num":
            self.error(f"expected {what}, found {value or 'end of input'!r}")
        if len(value) > 1 and value[0] == "0":
            raise NonCanonicalError(f"position {pos}: leading zero in {what} {value}")
        self.i += 1
        return int(value)

    def base_literal(self) -> None:
        kind, value, pos = self.peek()
        if self.symbolic:
            if (kind, value) != ("sym", "X"):
                self.error("expected base symbol 'X'")
            self.i += 1
            return
        b = self.number("base")
        if self.base is None:
            if b < 2:
                raise NonCanonicalError(f"position {pos}: base {b} must be at least 2")
            self.base = b
        elif b != self.base:
            raise NonCanonicalError(
                f"position {pos}: base literal {b} differs from form base {self.base}")

    def top(self) -> Shape:
        kind, value, _ = self.peek()
        if kind == "num" and value == "0" and self.peek(1)[1] != "*":
            self.i += 1
            if self.symbolic:
                s = T.ZERO
            else:
                self.expect("@")
                b = self.number("base")
                if b < 2:
                    raise NonCanonicalError(f"base {b} must be at least 2")
                self.base = b
                s = T.ZERO
        else:
            s = self.termlist()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r} after form")
        return s

    def expform(self) -> Shape:
        kind, value, _ = self.peek()
        if kind == "num" and value == "0" and self.peek(1)[1] != "*":
            self.i += 1
            return T.ZERO
        return self.termlist()

    def termlist(self) -> Shape:
        out = [self.term()]
        while self.peek()[:2] == ("sym", "+"):
            self.i += 1
            out.append(self.term())
        return Shape(tuple(out))

    def term(self):
        coeff = self.number("coefficient")
        self.expect("*")
        self.base_literal()
        self.expect("^")
        kind, value, _ = self.peek()
        if value == "(":
            self.i += 1
            exp = self.expform()
            self.expect(")")
            return Atom(coeff, exp)
        if value == "[":
            self.i += 1
            lo = self.expform()
            self.expect("..")
            hi = self.expform()
            self.expect(")")
            bound = coeff + 1
            if self.peek()[:2] == ("sym", "{"):
                self.i += 1
                bound = self.number("run bound")
                self.expect("}")
            return Run(coeff, lo, hi, bound)
        self.error("expected '(' or '[' after '^'")


def parse(text: str) -> HForm:
    """Parse and validate a form; raises :class:`ParseError` or :class:`NonCanonicalError`."""
    p = _Parser(text, symbolic=False)
    s = p.top()
    T.validate(s, p.base)
    return HForm(p.base, s)


def parse_shape(text: str) -> Shape:
    p = _Parser(text, symbolic=True)
    s = p.top()
    T.validate(s)
    return s
