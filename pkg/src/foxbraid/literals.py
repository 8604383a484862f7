"""Parser for ring-element literals and JSON ring descriptors.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' integer)?
    atom   := integer | name | '(' expr ')'

Names resolve to Laurent variables of the target ring, or ``zeta`` for the
root of unity when the (base) ring is cyclotomic.  Division requires the
divisor to be a unit.  Malformed input raises ParseError with a position.
"""

from __future__ import annotations

import re

from .errors import ParseError, RingError
from .rings import (
    CyclotomicField,
    IntegerRing,
    LaurentRing,
    PrimeField,
    QQ,
    RationalField,
    RingElement,
    ZZ,
    laurent_ring,
)

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/^()])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, descriptor):
        self.text = text
        self.descriptor = descriptor
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def next(self):
        if self.index >= len(self.tokens):
            raise ParseError("unexpected end of input", len(self.text))
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, symbol):
        token, pos = self.next()
        if token != symbol:
            raise ParseError(f"expected {symbol!r}, got {token!r}", pos)

    def parse(self):
        value = self.expr()
        if self.index != len(self.tokens):
            token, pos = self.tokens[self.index]
            raise ParseError(f"trailing input {token!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op, pos = self.next()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value * rhs.invert_unit()
                except RingError:
                    raise ParseError("division by a non-unit", pos) from None
        return value

    def factor(self):
        if self.peek() == "-":
            self.next()
            return -self.factor()
        value = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            token, pos = self.next()
            if not token.isdigit():
                raise ParseError(f"expected integer exponent, got {token!r}", pos)
            try:
                value = value ** (sign * int(token))
            except RingError:
                raise ParseError("negative power of a non-unit", pos) from None
        return value

    def atom(self):
        token, pos = self.next()
        if token.isdigit():
            return RingElement.from_int(self.descriptor, int(token))
        if token == "(":
            value = self.expr()
            self.expect(")")
            return value
        if token == "zeta":
            try:
                return RingElement.cyclotomic_generator(self.descriptor)
            except RingError:
                raise ParseError("'zeta' needs a cyclotomic ring", pos) from None
        if isinstance(self.descriptor, LaurentRing) and token in self.descriptor.variables:
            return RingElement.variable(self.descriptor, token)
        raise ParseError(f"unknown name {token!r}", pos)


def parse_element(text, descriptor):
    """Parse a ring-element literal against a target descriptor."""
    return _Parser(text, descriptor).parse()


# ---------------------------------------------------------------------------
# descriptor (de)serialization for representation files


def descriptor_from_json(data):
    """Build a ring descriptor from its JSON form.

    Forms: ``"int"``, ``"rational"``, ``{"prime_field": p}``,
    ``{"cyclotomic": N}``, ``{"laurent": {"vars": [...], "base": <form>}}``.
    """
    if data == "int":
        return ZZ
    if data == "rational":
        return QQ
    if isinstance(data, dict) and len(data) == 1:
        (key, value), = data.items()
        if key == "prime_field":
            return PrimeField(value)
        if key == "cyclotomic":
            return CyclotomicField(value)
        if key == "laurent":
            base = descriptor_from_json(value["base"])
            return laurent_ring(tuple(value["vars"]), base)
    raise RingError(f"bad ring descriptor {data!r}")


def descriptor_to_json(descriptor):
    if isinstance(descriptor, IntegerRing):
        return "int"
    if isinstance(descriptor, RationalField):
        return "rational"
    if isinstance(descriptor, PrimeField):
        return {"prime_field": descriptor.p}
    if isinstance(descriptor, CyclotomicField):
        return {"cyclotomic": descriptor.level}
    if isinstance(descriptor, LaurentRing):
        return {
            "laurent": {
                "vars": list(descriptor.variables),
                "base": descriptor_to_json(descriptor.base),
            }
        }
    raise RingError(f"unknown descriptor {descriptor!r}")
