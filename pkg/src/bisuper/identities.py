"""Checking graded identities with parity-dependent signs.

An :class:`Identity` is a pair of pattern terms over named variables, a sign
exponent (a sum of products of parity symbols, read mod 2) and a parity
annotation per variable.  :func:`check_identity` substitutes homogeneous
elements of the declared parities and compares both sides exactly.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence

from .core import Generator, Monomial, Signature, SuperPolynomial, basis_of_degree
from .terms import Leaf, Node, Term, evaluate, parse_term

__all__ = [
    "SignExponent",
    "Identity",
    "IdentityResult",
    "check_identity",
    "random_homogeneous",
    "catalog",
    "by_name",
    "mutations",
    "superleft",
    "superright",
    "weak_associativity",
    "two_odd_in_left_box",
    "cor_two_odd_in_left_box",
    "two_odd_in_left",
    "cor_two_odd_in_left",
    "two_odd_in_right",
    "cor_two_odd_in_right",
    "permuting_variables",
    "lem2",
    "main_lemma",
    "left_chain",
    "right_comb",
]


class SignExponent:
    """A polynomial over GF(2) in parity symbols, kept fully expanded.

    Parsed from text such as ``x1*x2`` or ``(x4+x5)*(x1+x2) + x1*x2``;
    juxtaposed parenthesized factors multiply.  Since parities are 0/1,
    ``x*x`` is ``x``.
    """

    _TOKEN = re.compile(r"\s*(?:(?P<num>[01])|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*()]))")

    def __init__(self, monomials=()):
        acc: set[frozenset] = set()
        for m in monomials:
            m = frozenset(m)
            acc ^= {m}
        self.monomials = frozenset(acc)

    @classmethod
    def parse(cls, text: str) -> "SignExponent":
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = cls._TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unparsable sign exponent {text!r} at position {pos}")
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
            pos = m.end()
        if not tokens:
            return cls()
        i = 0

        def expr() -> SignExponent:
            nonlocal i
            out = term()
            while i < len(tokens) and tokens[i] in (("op", "+"), ("op", "-")):
                i += 1
                out = out + term()
            return out

        def term() -> SignExponent:
            nonlocal i
            out = factor()
            while i < len(tokens):
                if tokens[i] == ("op", "*"):
                    i += 1
                    out = out * factor()
                elif tokens[i][0] in ("num", "id") or tokens[i] == ("op", "("):
                    out = out * factor()
                else:
                    break
            return out

        def factor() -> SignExponent:
            nonlocal i
            if i >= len(tokens):
                raise ValueError(f"unparsable sign exponent {text!r}: unexpected end")
            kind, val = tokens[i]
            i += 1
            if kind == "num":
                return cls([frozenset()]) if val == "1" else cls()
            if kind == "id":
                return cls([frozenset([val])])
            if val == "(":
                inner = expr()
                if i >= len(tokens) or tokens[i] != ("op", ")"):
                    raise ValueError(f"unparsable sign exponent {text!r}: missing ')'")
                i += 1
                return inner
            raise ValueError(f"unparsable sign exponent {text!r}: unexpected {val!r}")

        result = expr()
        if i != len(tokens):
            raise ValueError(f"unparsable sign exponent {text!r}: trailing input")
        return result

    def __add__(self, other: "SignExponent") -> "SignExponent":
        return SignExponent(list(self.monomials) + list(other.monomials))

    def __mul__(self, other: "SignExponent") -> "SignExponent":
        return SignExponent([a | b for a in self.monomials for b in other.monomials])

    def __eq__(self, other) -> bool:
        return isinstance(other, SignExponent) and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    @property
    def variables(self) -> set[str]:
        return set().union(*self.monomials) if self.monomials else set()

    def __call__(self, parities: Mapping[str, int]) -> int:
        return sum(all(parities[v] for v in m) for m in self.monomials) % 2

    def without(self, monomial: frozenset) -> "SignExponent":
        return SignExponent(self.monomials - {monomial})

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = ["*".join(sorted(m)) if m else "1" for m in self.monomials]
        return " + ".join(sorted(parts, key=lambda s: (len(s), s)))

    def __repr__(self) -> str:
        return f"SignExponent({str(self)!r})"


@dataclass(frozen=True)
class Identity:
    """``lhs = (-1)^sign * rhs`` with ``rhs=None`` meaning 0.

    ``parities`` maps each variable to 0, 1 or ``None`` (either parity).
    """

    name: str
    lhs: Term
    rhs: Optional[Term]
    sign: SignExponent = field(default_factory=SignExponent)
    parities: Mapping[str, Optional[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        lv = set(self.lhs.leaves())
        rv = set(self.rhs.leaves()) if self.rhs is not None else lv
        if self.rhs is not None and lv != rv:
            raise ValueError(f"{self.name}: pattern arity mismatch {sorted(lv)} vs {sorted(rv)}")
        extra = self.sign.variables - lv
        if extra:
            raise ValueError(f"{self.name}: sign mentions unknown variables {sorted(extra)}")
        pars = dict(self.parities)
        for v in lv:
            pars.setdefault(v, None)
        object.__setattr__(self, "parities", pars)

    @property
    def variables(self) -> list[str]:
        seen = []
        for v in self.lhs.leaves():
            if v not in seen:
                seen.append(v)
        return seen

    @classmethod
    def from_text(cls, name: str, lhs: str, rhs: str | None, sign: str = "0", parities=None) -> "Identity":
        l = parse_term(lhs, pattern=True)
        r = None if rhs is None or rhs.strip() in ("", "0") else parse_term(rhs, pattern=True)
        return cls(name, l, r, SignExponent.parse(sign), dict(parities or {}))

    def __str__(self) -> str:
        rhs = "0" if self.rhs is None else f"(-1)^[{self.sign}] {self.rhs}"
        return f"{self.lhs} = {rhs}"


@dataclass
class IdentityResult:
    name: str
    passed: bool
    checked: int
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.passed


def _has_odd_letters(m: Monomial) -> bool:
    if isinstance(m, Generator):
        return m.odd
    return bool(m.zu or m.zv)


@lru_cache(maxsize=64)
def _monomials_by_parity(
    sig: Signature, max_degree: int, compact: bool = False
) -> tuple[tuple[Monomial, ...], tuple[Monomial, ...]]:
    even, odd = [], []
    for d in range(1, max_degree + 1):
        for m in basis_of_degree(sig, d):
            if m.parity:
                odd.append(m)
            elif not (compact and _has_odd_letters(m)):
                even.append(m)
    return tuple(even), tuple(odd)


_COEFFS = (1, -1, 2, -2, 3)


def random_homogeneous(
    sig: Signature, par: int, rng: random.Random, max_degree: int = 4, compact: bool = False
) -> SuperPolynomial:
    """A single basis monomial or a two-term sum, all terms of parity ``par``.

    With ``compact`` even values avoid odd letters, which keeps long products
    from vanishing by a repeated odd generator.
    """
    pool = ()
    while not pool and max_degree <= 8:
        pool = _monomials_by_parity(sig, max_degree, compact)[par]
        max_degree += 1
    if not pool:
        raise ValueError(f"{sig} has no {'odd' if par else 'even'} elements")
    if len(pool) == 1 or rng.random() < 0.5:
        return SuperPolynomial(sig, {rng.choice(pool): 1})
    a, b = rng.sample(pool, 2)
    return SuperPolynomial(sig, {a: rng.choice(_COEFFS), b: rng.choice(_COEFFS)})


def _both_sides(ident: Identity, values: Mapping[str, SuperPolynomial], pars: Mapping[str, int], sig: Signature):
    lhs = evaluate(ident.lhs, values, sig)
    if ident.rhs is None:
        return lhs, SuperPolynomial.zero(sig)
    rhs = evaluate(ident.rhs, values, sig)
    if ident.sign(pars):
        rhs = -rhs
    return lhs, rhs


def _generator_assignments(ident: Identity, sig: Signature) -> Iterator[dict[str, Generator]]:
    names = ident.variables
    choices = []
    for v in names:
        par = ident.parities[v]
        gens = [g for g in sig.generators if par is None or g.parity == par]
        choices.append(gens)
    for combo in itertools.product(*choices):
        yield dict(zip(names, combo))


def check_identity(
    ident: Identity,
    sig: Signature,
    trials: int = 200,
    seed: int = 0,
    exhaustive_degree: int = 4,
    max_degree: int = 4,
) -> IdentityResult:
    """Check ``ident`` exactly under substitution.

    All generator tuples are tried first when the pattern degree is at most
    ``exhaustive_degree``; then ``trials`` random homogeneous substitutions,
    trial ``i`` drawing from its own generator seeded by ``(seed, i)``.
    Returns at the first failing substitution with a witness.
    """
    checked = 0
    if ident.lhs.degree <= exhaustive_degree:
        for assign in _generator_assignments(ident, sig):
            values = {v: SuperPolynomial.monomial(sig, g) for v, g in assign.items()}
            pars = {v: g.parity for v, g in assign.items()}
            lhs, rhs = _both_sides(ident, values, pars, sig)
            checked += 1
            if lhs != rhs:
                return IdentityResult(ident.name, False, checked, _witness(values, lhs, rhs, "exhaustive"))
    for trial in range(trials):
        rng = random.Random(f"{seed}/{trial}")
        # a per-trial degree cap keeps large patterns from vanishing identically
        cap = rng.randint(1, max_degree)
        # a tensor holds at most 2q odd letters, so longer patterns get even
        # values free of odd letters; shorter ones do so half of the time
        compact = ident.lhs.degree > 2 * sig.q or rng.random() < 0.5
        values, pars = {}, {}
        for v in ident.variables:
            par = ident.parities[v]
            if par is None:
                par = rng.randint(0, 1)
                if sig.q == 0:
                    par = 0
            pars[v] = par
            values[v] = random_homogeneous(sig, par, rng, cap, compact)
        lhs, rhs = _both_sides(ident, values, pars, sig)
        checked += 1
        if lhs != rhs:
            return IdentityResult(ident.name, False, checked, _witness(values, lhs, rhs, f"trial {trial}"))
    return IdentityResult(ident.name, True, checked)


def _witness(values, lhs, rhs, where) -> dict:
    return {
        "where": where,
        "substitution": {v: str(f) for v, f in values.items()},
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


# --- pattern builders -------------------------------------------------------


def _leaf(v) -> Term:
    return v if isinstance(v, (Leaf, Node)) else Leaf(v)


def left_chain(multipliers: Sequence, core) -> Term:
    """``a1(a2(...(ar core)))``."""
    t = _leaf(core)
    for a in reversed(multipliers):
        t = Node(_leaf(a), t)
    return t


def right_comb(core, multipliers: Sequence) -> Term:
    """``((core b1) b2) ... br``."""
    t = _leaf(core)
    for b in multipliers:
        t = Node(t, _leaf(b))
    return t


def _xs(a: int, b: int) -> list[str]:
    return [f"x{i}" for i in range(a, b + 1)]


def superleft() -> Identity:
    return Identity.from_text("superleft", "(x1 (x2 x3))", "(x2 (x1 x3))", "x1*x2")


def superright() -> Identity:
    return Identity.from_text("superright", "((x1 x2) x3)", "((x1 x3) x2)", "x2*x3")


def weak_associativity() -> Identity:
    return Identity.from_text("weak-associativity", "(x1 ((x2 x3) x4))", "((x1 (x2 x3)) x4)", "0")


def two_odd_in_left_box(k: int) -> Identity:
    if k < 3:
        raise ValueError("k >= 3")
    lhs = Node(Leaf("x2"), right_comb(Node(Leaf("x1"), Leaf("x3")), _xs(4, k)))
    rhs = Node(Leaf("x1"), right_comb(Node(Leaf("x2"), Leaf("x3")), _xs(4, k)))
    return Identity(f"two-odd-in-left-box[k={k}]", lhs, rhs, SignExponent.parse("x1*x2"))


def cor_two_odd_in_left_box(k: int) -> Identity:
    lhs = Node(Leaf("z"), right_comb(Node(Leaf("z"), Leaf("x1")), _xs(2, k)))
    return Identity(f"cor-two-odd-in-left-box[k={k}]", lhs, None, SignExponent(), {"z": 1})


def two_odd_in_left(k: int) -> Identity:
    if k < 3:
        raise ValueError("k >= 3")
    mids = list(reversed(_xs(4, k)))
    lhs = left_chain(["x2"] + mids, Node(Leaf("x1"), Leaf("x3")))
    rhs = left_chain(["x1"] + mids, Node(Leaf("x2"), Leaf("x3")))
    inner = "+".join(_xs(4, k)) or "0"
    sign = SignExponent.parse(f"({inner})*(x1+x2) + x1*x2")
    return Identity(f"two-odd-in-left[k={k}]", lhs, rhs, sign)


def cor_two_odd_in_left(k: int) -> Identity:
    mids = list(reversed(_xs(2, k)))
    lhs = left_chain(["z"] + mids, Node(Leaf("z"), Leaf("x1")))
    return Identity(f"cor-two-odd-in-left[k={k}]", lhs, None, SignExponent(), {"z": 1})


def two_odd_in_right(k: int) -> Identity:
    if k < 3:
        raise ValueError("k >= 3")
    lhs = Node(right_comb(Node(Leaf("x3"), Leaf("x1")), _xs(4, k)), Leaf("x2"))
    rhs = Node(right_comb(Node(Leaf("x3"), Leaf("x2")), _xs(4, k)), Leaf("x1"))
    inner = "+".join(_xs(4, k)) or "0"
    sign = SignExponent.parse(f"({inner})*(x1+x2) + x1*x2")
    return Identity(f"two-odd-in-right[k={k}]", lhs, rhs, sign)


def cor_two_odd_in_right(k: int) -> Identity:
    lhs = Node(right_comb(Node(Leaf("x1"), Leaf("z")), _xs(2, k)), Leaf("z"))
    return Identity(f"cor-two-odd-in-right[k={k}]", lhs, None, SignExponent(), {"z": 1})


def odd_inversions(perm: Sequence[int], k: int) -> int:
    """Inversions of ``perm`` (1-based values) among values ``> k``."""
    odd = [v for v in perm if v > k]
    return sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])


def permuting_variables(k: int, l: int, perm: Sequence[int], side: str = "left") -> Identity:
    """Reordering ``k`` even and ``l`` odd one-sided multipliers costs the odd-odd inversion sign."""
    if sorted(perm) != list(range(1, k + l + 1)):
        raise ValueError("perm must be a permutation of 1..k+l")
    names = [f"x{i}" for i in range(1, k + l + 1)]
    permuted = [names[i - 1] for i in perm]
    if side == "left":
        lhs, rhs = left_chain(permuted, "u"), left_chain(names, "u")
    else:
        lhs, rhs = right_comb("u", permuted), right_comb("u", names)
    pars = {n: int(i > k) for i, n in enumerate(names, 1)}
    sign = SignExponent([frozenset()]) if odd_inversions(perm, k) % 2 else SignExponent()
    tag = "".join(map(str, perm))
    return Identity(f"permuting-{side}[k={k},l={l},perm={tag}]", lhs, rhs, sign, pars)


def lem2(k: int) -> Identity:
    """``u v = (-1)^{(u2+..+uk) v} u1((..(v u2)..)uk)`` with ``u`` left-normed and ``v = (v1 v2)``."""
    if k < 2:
        raise ValueError("k >= 2")
    us = [f"u{i}" for i in range(1, k + 1)]
    v = Node(Leaf("v1"), Leaf("v2"))
    lhs = Node(right_comb(us[0], us[1:]), v)
    rhs = Node(Leaf(us[0]), right_comb(v, us[1:]))
    sign = SignExponent.parse(f"({'+'.join(us[1:])})*(v1+v2)")
    return Identity(f"lem2[k={k}]", lhs, rhs, sign)


def main_lemma(k: int, l: int, m: int, n: int) -> Identity:
    """Product of two canonical-shape monomials rewritten into canonical shape."""
    if min(k, l, m, n) < 1:
        raise ValueError("k, l, m, n >= 1")
    t = [f"t{i}" for i in range(1, k + 1)]
    u = [f"u{i}" for i in range(1, l + 1)]
    v = [f"v{i}" for i in range(1, m + 1)]
    w = [f"w{i}" for i in range(1, n + 1)]
    left = left_chain(list(reversed(t[1:])), right_comb(t[0], u))
    right = left_chain(list(reversed(v[1:])), right_comb(v[0], w))
    lhs = Node(left, right)
    rhs = left_chain(list(reversed(t)) + list(reversed(v[1:])), right_comb(v[0], w + u))
    sign = SignExponent.parse(f"({'+'.join(u)})*({'+'.join(v + w)})")
    return Identity(f"main-lemma[k={k},l={l},m={m},n={n}]", lhs, rhs, sign)


def catalog(max_k: int = 5) -> list[Identity]:
    """The standard identity suite: defining identities and their consequences."""
    out = [superleft(), superright(), weak_associativity()]
    for k in range(3, max_k + 1):
        out.append(two_odd_in_left_box(k))
        out.append(two_odd_in_left(k))
        out.append(two_odd_in_right(k))
    for k in range(1, max_k - 1):
        out.append(cor_two_odd_in_left_box(k))
        out.append(cor_two_odd_in_left(k))
        out.append(cor_two_odd_in_right(k))
    for k in range(0, 3):
        for l in range(0, 3):
            if k + l < 2:
                continue
            for perm in itertools.permutations(range(1, k + l + 1)):
                for side in ("left", "right"):
                    out.append(permuting_variables(k, l, perm, side))
    for k in range(2, max_k + 1):
        out.append(lem2(k))
    for k, l, m, n in itertools.product((1, 2), repeat=4):
        out.append(main_lemma(k, l, m, n))
    return out


def by_name(name: str) -> Identity:
    """Build an identity from its catalog-style name, e.g. ``main-lemma[k=3,l=1,m=2,n=3]``."""
    m = re.fullmatch(r"([a-z0-9-]+)(?:\[([^\]]*)\])?", name.strip())
    if not m:
        raise KeyError(f"unknown identity {name!r}")
    family, raw = m.group(1), m.group(2)
    params: dict[str, str] = {}
    if raw:
        for item in raw.split(","):
            key, _, val = item.partition("=")
            params[key.strip()] = val.strip()
    try:
        ints = {k: int(v) for k, v in params.items() if k != "perm"}
        if family in ("superleft", "superright", "weak-associativity") and not params:
            return {"superleft": superleft, "superright": superright, "weak-associativity": weak_associativity}[family]()
        single = {
            "two-odd-in-left-box": two_odd_in_left_box,
            "cor-two-odd-in-left-box": cor_two_odd_in_left_box,
            "two-odd-in-left": two_odd_in_left,
            "cor-two-odd-in-left": cor_two_odd_in_left,
            "two-odd-in-right": two_odd_in_right,
            "cor-two-odd-in-right": cor_two_odd_in_right,
            "lem2": lem2,
        }
        if family in single and set(ints) == {"k"}:
            return single[family](ints["k"])
        if family == "main-lemma" and set(ints) == {"k", "l", "m", "n"}:
            return main_lemma(ints["k"], ints["l"], ints["m"], ints["n"])
        if family in ("permuting-left", "permuting-right") and set(params) == {"k", "l", "perm"}:
            perm = tuple(int(c) for c in params["perm"])
            return permuting_variables(ints["k"], ints["l"], perm, family.split("-")[1])
    except ValueError as exc:
        raise KeyError(f"bad identity {name!r}: {exc}") from None
    raise KeyError(f"unknown identity {name!r}")


def mutations(ident: Identity) -> list[Identity]:
    """Copies of ``ident`` with one summand of the expanded sign exponent dropped."""
    out = []
    for mono in sorted(ident.sign.monomials, key=lambda s: sorted(s)):
        label = "*".join(sorted(mono)) or "1"
        out.append(replace(ident, name=f"{ident.name}/drop[{label}]", sign=ident.sign.without(mono)))
    return out
