"""Parser for the cochain expression grammar.

The grammar accepted (whitespace insignificant):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-'* primary ('^' signed_int)?
    primary  := rational | 'hbar' | 'alpha' | generator | '(' expr ')'
    generator:= ('delta' | 'bdelta') '[' signed_int ']'
    rational := digits ('/' digits)?

Example: ``3*delta[0]*delta[1] - 2*hbar*bdelta[2]``.  Negative exponents are
only meaningful on invertible scalars (``alpha^-1``).  The renderers in this
package emit exactly this grammar, so parse and print round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .cochains import Cochain
from .scalars import Scalar

__all__ = ["ParseError", "parse_cochain", "parse_scalar"]

_SYMBOLS = set("[]()^*+-/")


class ParseError(ValueError):
    """Syntax error with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unknown character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return self.advance()

    def parse(self) -> Cochain:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self) -> Cochain:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Cochain:
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Cochain:
        negate = False
        while self.peek()[0] == "-":
            self.advance()
            negate = not negate
        value = self.primary()
        if self.peek()[0] == "^":
            caret = self.advance()
            exponent = self.signed_int()
            value = self._power(value, exponent, caret[2])
        return -value if negate else value

    def primary(self) -> Cochain:
        kind, text, pos = self.peek()
        if kind == "number":
            self.advance()
            numerator = int(text)
            if self.peek()[0] == "/":
                self.advance()
                denom_tok = self.expect("number")
                denominator = int(denom_tok[1])
                if denominator == 0:
                    raise ParseError("zero denominator", denom_tok[2])
                return Cochain.scalar(Fraction(numerator, denominator))
            return Cochain.scalar(numerator)
        if kind == "name":
            self.advance()
            if text == "hbar":
                return Cochain.scalar(Scalar.hbar())
            if text == "alpha":
                return Cochain.scalar(Scalar.alpha())
            if text in ("delta", "bdelta"):
                self.expect("[")
                site = self.signed_int()
                self.expect("]")
                if text == "delta":
                    return Cochain.field(site)
                return Cochain.antifield(site)
            raise ParseError(f"unknown name {text!r}", pos)
        if kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {text!r}", pos)

    def signed_int(self) -> int:
        negate = False
        while self.peek()[0] == "-":
            self.advance()
            negate = not negate
        tok = self.expect("number")
        value = int(tok[1])
        return -value if negate else value

    @staticmethod
    def _power(base: Cochain, exponent: int, position: int) -> Cochain:
        if exponent >= 0:
            return base**exponent
        inverse = _invert_scalar(base)
        if inverse is None:
            raise ParseError("negative exponents need an invertible scalar base", position)
        return inverse ** (-exponent)


def _invert_scalar(c: Cochain) -> Cochain | None:
    """Invert a one-term hbar-free scalar cochain (e.g. alpha), else None."""
    terms = list(c.terms())
    if len(terms) != 1:
        return None
    mono, coeff = terms[0]
    if mono.fields or mono.antifields:
        return None
    items = list(coeff.terms())
    if len(items) != 1:
        return None
    ((hp, ap), frac) = items[0]
    if hp != 0:
        return None
    return Cochain.scalar(Scalar({(0, -ap): Fraction(1) / frac}))


def parse_cochain(text: str) -> Cochain:
    """Parse an expression into a canonical cochain.

    >>> print(parse_cochain("bdelta[1]*bdelta[1]"))
    0
    """
    return _Parser(text).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse an expression that must denote a pure scalar."""
    c = parse_cochain(text)
    total = Scalar.zero()
    for m, coeff in c.terms():
        if m.fields or m.antifields:
            raise ParseError(f"expected a scalar, found generator term {m}", 0)
        total = total + coeff
    return total
