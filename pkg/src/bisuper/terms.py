"""Nonassociative terms and their normal forms.

A term is a binary product tree.  Normalizing a term means evaluating it in
the tensor model, which is isomorphic to the free bicommutative superalgebra,
so the result is canonical by construction.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence, Union

from .core import Generator, Signature, SuperPolynomial, enumerate_basis, mul

__all__ = [
    "Leaf",
    "Node",
    "Term",
    "TermSyntaxError",
    "parse_term",
    "evaluate",
    "normalize",
    "multilinear_dimension",
    "iter_terms",
    "random_term",
]


@dataclass(frozen=True)
class Leaf:
    atom: Union[Generator, str]

    @property
    def degree(self) -> int:
        return 1

    def leaves(self) -> list:
        return [self.atom]

    def __str__(self) -> str:
        return str(self.atom)


@dataclass(frozen=True)
class Node:
    left: "Term"
    right: "Term"

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    def leaves(self) -> list:
        return self.left.leaves() + self.right.leaves()

    def __str__(self) -> str:
        return f"({self.left} {self.right})"


Term = Union[Leaf, Node]


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TERM_TOKEN = re.compile(r"\s*(?:(?P<lp>\()|(?P<rp>\))|(?P<id>[A-Za-z_][A-Za-z0-9_]*))")
_GEN_NAME = re.compile(r"[yz][0-9]+\Z")


def parse_term(text: str, sig: Signature | None = None, *, pattern: bool = False) -> Term:
    """Parse ``(a (b c))``-style terms.

    Every product needs its own parentheses, e.g. ``(y1 y2 y3)`` is rejected as
    ambiguous.  With ``pattern=True`` every identifier is a variable name;
    otherwise identifiers must be generators ``y<i>``/``z<j>`` of ``sig``.
    """
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TERM_TOKEN.match(stripped, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {stripped[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not tokens:
        raise TermSyntaxError("empty term", 0)

    def atom(val: str, at: int) -> Term:
        if pattern:
            return Leaf(val)
        if not _GEN_NAME.match(val):
            raise TermSyntaxError(f"unknown identifier {val!r}", at)
        g = Generator.parse(val)
        if sig is not None:
            limit = sig.q if g.odd else sig.p
            if not 1 <= g.index <= limit:
                raise TermSyntaxError(f"unknown generator {val} for {sig}", at)
        return Leaf(g)

    i = 0

    def items(closing: bool) -> tuple[list[Term], int]:
        nonlocal i
        out: list[Term] = []
        while i < len(tokens):
            kind, val, at = tokens[i]
            if kind == "rp":
                if not closing:
                    raise TermSyntaxError("unbalanced ')'", at)
                return out, at
            i += 1
            if kind == "id":
                out.append(atom(val, at))
            else:
                inner, end = items(True)
                if i >= len(tokens):
                    raise TermSyntaxError("missing ')'", len(stripped))
                i += 1
                if len(inner) != 2:
                    if len(inner) > 2:
                        raise TermSyntaxError("ambiguous unparenthesized product", at)
                    raise TermSyntaxError("a product needs exactly two factors", at)
                out.append(Node(inner[0], inner[1]))
        if closing:
            raise TermSyntaxError("missing ')'", len(stripped))
        return out, len(stripped)

    top, _ = items(False)
    if len(top) == 1:
        return top[0]
    if len(top) == 2:
        return Node(top[0], top[1])
    raise TermSyntaxError("ambiguous unparenthesized product", tokens[0][2])


def evaluate(t: Term, assignment: Mapping | Callable, sig: Signature) -> SuperPolynomial:
    """Evaluate ``t`` with leaves replaced through ``assignment``."""
    lookup = assignment if callable(assignment) else assignment.__getitem__
    if isinstance(t, Leaf):
        return lookup(t.atom)
    return mul(evaluate(t.left, lookup, sig), evaluate(t.right, lookup, sig))


def normalize(t: Term, sig: Signature) -> SuperPolynomial:
    """Canonical form of a generator term."""

    def gen(atom):
        if not isinstance(atom, Generator):
            raise ValueError(f"pattern variable {atom!r} in a term to normalize")
        return SuperPolynomial.monomial(sig, atom)

    return evaluate(t, gen, sig)


def multilinear_dimension(sig: Signature, p: int, q: int) -> int:
    """Dimension of the component multilinear in ``y1..yp`` and ``z1..zq`` (brute-force count)."""
    if not (0 <= p <= sig.p and 0 <= q <= sig.q) or p + q < 1:
        raise ValueError(f"({p},{q}) out of range for {sig}")
    k = (1,) * p + (0,) * (sig.p - p)
    l = (1,) * q + (0,) * (sig.q - q)
    return len(enumerate_basis(sig, k, l))


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """All binary tree shapes with ``n`` leaves; a leaf is ``None``."""
    if n == 1:
        return (None,)
    out = []
    for i in range(1, n):
        for a in _shapes(i):
            for b in _shapes(n - i):
                out.append((a, b))
    return tuple(out)


def _fill(shape, atoms: Iterator) -> Term:
    if shape is None:
        return Leaf(next(atoms))
    left = _fill(shape[0], atoms)
    return Node(left, _fill(shape[1], atoms))


def iter_terms(atoms: Sequence, degree: int) -> Iterator[Term]:
    """Every tree with ``degree`` leaves drawn (with repetition) from ``atoms``."""
    import itertools

    for shape in _shapes(degree):
        for word in itertools.product(atoms, repeat=degree):
            yield _fill(shape, iter(word))


def random_term(atoms: Sequence, degree: int, rng: random.Random) -> Term:
    if degree == 1:
        return Leaf(rng.choice(atoms))
    k = rng.randint(1, degree - 1)
    return Node(random_term(atoms, k, rng), random_term(atoms, degree - k, rng))
