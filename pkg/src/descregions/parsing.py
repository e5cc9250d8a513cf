"""Text format for signomials.

Grammar (whitespace insensitive)::

    poly   := ['-'] sterm (('+'|'-') sterm)*
    sterm  := coeff ['*' mono] | mono
    mono   := var ['^' exp] ('*' var ['^' exp])*
    exp    := ['-'] integer | '(' rational ')'
    coeff  := number | number '/' integer | '(' rational ')'

Variables are x1..xn; x, y, z, w alias x1..x4.  Decimal literals are converted
exactly to rationals (9.5 becomes 19/2).  Repeated monomials are merged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .signomial import Signomial

_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}

_TOKEN_RE = re.compile(
    r"(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z]\w*)|(?P<op>[-+*^()/])|(?P<ws>\s+)|(?P<bad>.)"
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | one-character operator | "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    line = 1
    line_start = 0
    for m in _TOKEN_RE.finditer(text):
        col = m.start() - line_start + 1
        if m.lastgroup == "ws":
            nl = m.group().count("\n")
            if nl:
                line += nl
                line_start = m.start() + m.group().rfind("\n") + 1
            continue
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", line, col)
        kind = m.lastgroup if m.lastgroup != "op" else m.group()
        tokens.append(_Token(kind, m.group(), line, col))
    tokens.append(_Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def here(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str):
        raise ParseError(message, self.here.line, self.here.column)

    def expect(self, kind: str) -> _Token:
        if self.here.kind != kind:
            self.error(f"expected {kind!r}, found {self.here.text!r}")
        return self.advance()

    # rational := ['-'] number ['/' number]
    def rational(self) -> Fraction:
        negative = False
        if self.here.kind == "-":
            self.advance()
            negative = True
        num_tok = self.expect("number")
        value = Fraction(num_tok.text)  # exact, including decimals
        if self.here.kind == "/":
            self.advance()
            den_tok = self.expect("number")
            if "." in num_tok.text or "." in den_tok.text:
                self.error("ratio parts must be integers")
            value = value / Fraction(den_tok.text)
        return -value if negative else value

    def exponent(self) -> Fraction:
        if self.here.kind == "(":
            self.advance()
            value = self.rational()
            self.expect(")")
            return value
        negative = False
        if self.here.kind == "-":
            self.advance()
            negative = True
        tok = self.expect("number")
        if "." in tok.text:
            self.error("exponents must be integers or parenthesized rationals")
        value = Fraction(tok.text)
        return -value if negative else value

    def variable(self) -> int:
        tok = self.expect("name")
        name = tok.text
        if name in _ALIASES:
            return _ALIASES[name]
        m = re.fullmatch(r"x(\d+)", name)
        if m and int(m.group(1)) >= 1:
            return int(m.group(1))
        raise ParseError(f"unknown variable {name!r}", tok.line, tok.column)

    def sterm(self) -> Tuple[Fraction, dict]:
        coeff = Fraction(1)
        exponents: dict[int, Fraction] = {}
        saw_coeff = False
        if self.here.kind == "number":
            coeff = self.rational()
            saw_coeff = True
        elif self.here.kind == "(":
            self.advance()
            coeff = self.rational()
            self.expect(")")
            saw_coeff = True
        if saw_coeff:
            if self.here.kind == "*":
                self.advance()
            elif self.here.kind != "name":
                return coeff, exponents
        if self.here.kind != "name":
            self.error("expected a variable or coefficient")
        while True:
            var = self.variable()
            power = Fraction(1)
            if self.here.kind == "^":
                self.advance()
                power = self.exponent()
            exponents[var] = exponents.get(var, Fraction(0)) + power
            if self.here.kind == "*" and self.tokens[self.pos + 1].kind == "name":
                self.advance()
                continue
            break
        return coeff, exponents

    def poly(self) -> List[Tuple[Fraction, dict]]:
        terms = []
        sign = Fraction(1)
        if self.here.kind == "-":
            self.advance()
            sign = Fraction(-1)
        elif self.here.kind == "+":
            self.advance()
        while True:
            coeff, exponents = self.sterm()
            terms.append((sign * coeff, exponents))
            if self.here.kind == "eof":
                return terms
            if self.here.kind == "+":
                sign = Fraction(1)
            elif self.here.kind == "-":
                sign = Fraction(-1)
            else:
                self.error(f"expected '+' or '-', found {self.here.text!r}")
            self.advance()


def parse_signomial(text: str, dimension: Optional[int] = None) -> Signomial:
    """Parse the text format; the dimension is the largest variable index used
    unless given explicitly."""
    parser = _Parser(text)
    raw = parser.poly()
    max_var = max((max(e) for _, e in raw if e), default=1)
    n = dimension if dimension is not None else max_var
    if max_var > n:
        raise ParseError(f"variable x{max_var} exceeds dimension {n}", 1, 1)
    pairs = []
    for coeff, exponents in raw:
        vec = tuple(exponents.get(i, Fraction(0)) for i in range(1, n + 1))
        pairs.append((coeff, vec))
    return Signomial.from_terms(n, pairs)


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return f"^{e}" if e != 1 else ""
    return f"^({e})"


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c)
    return f"({c})"


def format_signomial(f: Signomial) -> str:
    """Canonical text form; parses back to a structurally equal signomial."""
    if not f.terms:
        return "0"
    chunks = []
    for t in f.terms:
        mono = "*".join(
            f"x{i + 1}{_format_exponent(e)}" for i, e in enumerate(t.exponent) if e != 0
        )
        mag = abs(t.coefficient)
        if not mono:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coefficient(mag)}*{mono}"
        chunks.append(("- " if t.coefficient < 0 else "+ ") + body)
    text = " ".join(chunks)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
