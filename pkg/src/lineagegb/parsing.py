"""Ideal-description parser: ring declarations and polynomial expressions.

Input format::

    ring: Q[x_1,x_3,x_0,x_4,x_2]
    order: lex
    gens:
    -x_1^2+x_0*x_2
    x_1*x_3-x_2^2

Comments start with '#'; blank lines are ignored. Generator order is
preserved exactly as written, since lineage leaf indices depend on it.

Expression grammar (explicit '*' required, '^' for natural exponents):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | rational | variable ('^' natural)? | '(' expr ')'
    rational := integer ('/' positive-integer)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import GREVLEX, LEX, Poly, Ring

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_RING_RE = re.compile(r"^ring:\s*Q\[(?P<vars>[^\]]*)\]\s*$")
_ORDER_RE = re.compile(r"^order:\s*(?P<name>\S+)\s*$")


@dataclass(frozen=True)
class ProblemSpec:
    ring: Ring
    generators: tuple
    source_text: str


class _Tokenizer:
    SYMBOLS = "+-*^/()"

    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    def error(self, message: str, column=None):
        col = (self.pos if column is None else column) + 1
        raise ParseError(message, self.line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return None, self.pos
        ch = self.text[self.pos]
        if ch in self.SYMBOLS:
            return ch, self.pos
        if ch.isdigit():
            m = re.match(r"\d+", self.text[self.pos:])
            return ("NUM", m.group()), self.pos
        m = _NAME_RE.match(self.text, self.pos)
        if m:
            return ("NAME", m.group()), self.pos
        self.error(f"unexpected character {ch!r}")

    def next(self):
        tok, at = self.peek()
        if tok is None:
            return None, at
        if isinstance(tok, str):
            self.pos += 1
        else:
            self.pos += len(tok[1])
        return tok, at


def parse_poly_expr(text: str, ring: Ring, line: int = 1) -> Poly:
    """Parse one polynomial expression into canonical form."""
    tz = _Tokenizer(text, line)

    def parse_expr() -> Poly:
        total = parse_term()
        while True:
            tok, _ = tz.peek()
            if tok == "+":
                tz.next()
                total = total + parse_term()
            elif tok == "-":
                tz.next()
                total = total - parse_term()
            else:
                return total

    def parse_term() -> Poly:
        product = parse_factor()
        while True:
            tok, _ = tz.peek()
            if tok == "*":
                tz.next()
                product = product * parse_factor()
            else:
                return product

    def parse_factor() -> Poly:
        tok, at = tz.next()
        if tok is None:
            tz.error("unexpected end of expression", at)
        if tok == "-":
            return -parse_factor()
        if tok == "(":
            inner = parse_expr()
            closing, cat = tz.next()
            if closing != ")":
                tz.error("expected ')'", cat)
            return inner
        if isinstance(tok, tuple) and tok[0] == "NUM":
            value = Fraction(int(tok[1]))
            nxt, _ = tz.peek()
            if nxt == "/":
                tz.next()
                den_tok, dat = tz.next()
                if not (isinstance(den_tok, tuple) and den_tok[0] == "NUM"):
                    tz.error("expected an integer denominator", dat)
                den = int(den_tok[1])
                if den == 0:
                    tz.error("division by zero literal", dat)
                value = value / den
            return Poly.constant(ring, value)
        if isinstance(tok, tuple) and tok[0] == "NAME":
            name = tok[1]
            if name not in ring.variables:
                tz.error(f"undeclared variable {name!r}", at)
            power = 1
            nxt, _ = tz.peek()
            if nxt == "^":
                tz.next()
                exp_tok, eat = tz.next()
                if not (isinstance(exp_tok, tuple) and exp_tok[0] == "NUM"):
                    tz.error("malformed exponent", eat)
                power = int(exp_tok[1])
            return Poly.variable(ring, name, power)
        tz.error(f"unexpected token {tok!r}", at)

    result = parse_expr()
    trailing, at = tz.peek()
    if trailing is not None:
        tz.error("unexpected trailing input", at)
    return result


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_input(text: str) -> ProblemSpec:
    """Parse a full ideal description (ring, order, generator list)."""
    numbered = [
        (n, _strip(raw)) for n, raw in enumerate(text.splitlines(), start=1)
    ]
    meaningful = [(n, s) for n, s in numbered if s.strip()]
    if not meaningful:
        raise ParseError("empty input", 1, 1)

    idx = 0

    def take(expected: str):
        nonlocal idx
        if idx >= len(meaningful):
            last = meaningful[-1][0] if meaningful else 1
            raise ParseError(f"missing {expected} line", last + 1, 1)
        entry = meaningful[idx]
        idx += 1
        return entry

    line_no, ring_line = take("'ring:'")
    m = _RING_RE.match(ring_line.strip())
    if not m:
        raise ParseError("expected 'ring: Q[v1,v2,...]'", line_no, 1)
    names = [v.strip() for v in m.group("vars").split(",")]
    if names == [""]:
        raise ParseError("ring declares no variables", line_no, 1)
    for name in names:
        if not _NAME_RE.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}", line_no, 1)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name in ring", line_no, 1)

    line_no, order_line = take("'order:'")
    m = _ORDER_RE.match(order_line.strip())
    if not m or m.group("name") not in (LEX, GREVLEX):
        raise ParseError("unknown order name (want 'lex' or 'grevlex')", line_no, 1)
    ring = Ring(tuple(names), m.group("name"))

    line_no, gens_line = take("'gens:'")
    if gens_line.strip() != "gens:":
        raise ParseError("expected 'gens:'", line_no, 1)

    generators = []
    while idx < len(meaningful):
        line_no, expr = take("generator")
        generators.append(parse_poly_expr(expr, ring, line=line_no))
    if not generators:
        raise ParseError("empty generator list", line_no + 1, 1)

    return ProblemSpec(ring, tuple(generators), text)
