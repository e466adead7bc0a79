"""Text and JSON forms of monomials and polynomials.

Text grammar::

    generator   y3 | z2
    tensor      y1^2 y3 z2 | y1 z1
    polynomial  3/2 * y1|z1 + -1 * z1|y1

Odd variables may be written in any order inside a factor; the reordering
sign goes into the coefficient and a repeated odd variable makes the term 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Generator, Monomial, Signature, SuperPolynomial, TensorMonomial, _merge_odd

__all__ = [
    "ParseError",
    "parse_polynomial",
    "format_polynomial",
    "format_monomial",
    "format_coefficient",
    "monomial_to_json",
    "polynomial_to_json",
    "polynomial_from_json",
]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<gen>[yz]\d+)|(?P<op>[-+*|^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def polynomial(self) -> SuperPolynomial:
        terms: dict = {}
        if not self.tokens:
            raise ParseError("empty polynomial", 0)
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            coeff, mono = self.term()
            if mono is not None:
                s, m = mono
                if s:
                    self.sig.check(m)
                    terms[m] = terms.get(m, 0) + sign * s * coeff
            kind, val, pos = self.peek()
            if kind is None:
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise ParseError(f"unexpected {val!r}", pos)
        return SuperPolynomial(self.sig, terms)

    def term(self):
        kind, val, pos = self.peek()
        coeff = Fraction(1)
        if kind == "op" and val == "-":
            self.take()
            coeff = -coeff
            kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            coeff *= Fraction(val)
            kind2, val2, pos2 = self.peek()
            if kind2 == "op" and val2 == "*":
                self.take()
            elif val == "0" and (kind2 is None or (kind2 == "op" and val2 in "+-")):
                return Fraction(0), None
            else:
                raise ParseError("expected '*' after coefficient", pos2)
        return coeff, self.monomial()

    def factor(self):
        """Returns (sign, y-exponents, odd index tuple); sign 0 means the factor vanishes."""
        y = [0] * self.sig.p
        z: list[int] = []
        zero = False
        kind, val, pos = self.peek()
        if kind != "gen":
            raise ParseError("expected a generator", pos)
        while kind == "gen":
            self.take()
            g = Generator.parse(val)
            exp = 1
            k2, v2, p2 = self.peek()
            if k2 == "op" and v2 == "^":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "num" or "/" in v3:
                    raise ParseError("expected integer exponent", p3)
                exp = int(v3)
            limit = self.sig.q if g.odd else self.sig.p
            if g.index > limit:
                raise ParseError(f"unknown generator {g} for {self.sig}", pos)
            if g.odd:
                if exp > 1:
                    zero = True
                z.extend([g.index] * exp)
            else:
                y[g.index - 1] += exp
            kind, val, pos = self.peek()
        if zero or len(set(z)) != len(z):
            return 0, tuple(y), ()
        sign = 1
        zs: tuple[int, ...] = ()
        for j in z:
            s, zs = _merge_odd(zs, (j,))
            sign *= s
        return sign, tuple(y), zs

    def monomial(self):
        start = self.peek()[2]
        s1, y1, z1 = self.factor()
        kind, val, pos = self.peek()
        if kind == "op" and val == "|":
            self.take()
            s2, y2, z2 = self.factor()
            if not (s1 and s2):
                return 0, None
            if sum(y1) + len(z1) == 0 or sum(y2) + len(z2) == 0:
                raise ParseError("tensor factors must have positive degree", start)
            return s1 * s2, TensorMonomial(y1, z1, y2, z2)
        # a bare monomial must be a single generator
        if not s1 or sum(y1) + len(z1) != 1:
            raise ParseError("products must be written as tensors 'u | v'", start)
        if z1:
            return 1, Generator(True, z1[0])
        return 1, Generator(False, y1.index(1) + 1)


def parse_polynomial(text: str, sig: Signature) -> SuperPolynomial:
    """Parse the polynomial text grammar into a canonical :class:`SuperPolynomial`."""
    return _Parser(text, sig).polynomial()


def format_monomial(m: Monomial) -> str:
    return str(m)


def format_coefficient(c) -> str:
    return str(c)


def format_polynomial(f: SuperPolynomial) -> str:
    if not f:
        return "0"
    return " + ".join(f"{format_coefficient(c)} * {format_monomial(m)}" for m, c in f)


def monomial_to_json(m: Monomial, coeff=1) -> dict:
    if isinstance(m, Generator):
        return {"coeff": str(coeff), "gen": str(m)}
    return {
        "coeff": str(coeff),
        "yu": list(m.yu),
        "zu": list(m.zu),
        "yv": list(m.yv),
        "zv": list(m.zv),
    }


def polynomial_to_json(f: SuperPolynomial) -> list[dict]:
    return [monomial_to_json(m, c) for m, c in f]


def polynomial_from_json(data: list[dict], sig: Signature) -> SuperPolynomial:
    terms: dict = {}
    for item in data:
        c = Fraction(item["coeff"])
        if "gen" in item:
            m: Monomial = Generator.parse(item["gen"])
        else:
            m = TensorMonomial(tuple(item["yu"]), tuple(item["zu"]), tuple(item["yv"]), tuple(item["zv"]))
        sig.check(m)
        terms[m] = terms.get(m, 0) + c
    return SuperPolynomial(sig, terms)
