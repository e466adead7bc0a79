"""Monomial orders, reduction and truncated Groebner-Shirshov bases.

Ideals are two-sided.  In a bicommutative superalgebra the ideal generated
by a parity-homogeneous ``g`` is spanned by the images of ``g`` under chains
of left and right multiplications by free generators, so every computation
here works with such chains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import (
    Generator,
    Monomial,
    Signature,
    SignatureMismatch,
    SuperPolynomial,
    TensorMonomial,
    basis_of_degree,
    mul_monomials,
)

__all__ = [
    "MonomialOrder",
    "GsBasis",
    "compare",
    "lead",
    "divides",
    "division_chain",
    "apply_chain",
    "reduce",
    "reduce_with_certificate",
    "truncated_basis",
    "member",
    "quotient_dims",
    "weight_preceq",
    "DegreeOverflow",
]

Chain = tuple[tuple[str, Generator], ...]


class DegreeOverflow(ValueError):
    """Requested truncation degree is above the configured cap."""


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplication-compatible well-order on the basis monomials of ``sig``.

    ``deglex`` compares total degree, then the left factor's exponent word,
    then the right factor's.  A word lists exponents from the highest
    generator of ``precedence`` (given lowest first) down to the lowest.

    ``weight`` compares total degree, then the even parts (left then right
    factor, exponents read from the largest index down), then the odd parts
    the same way.  Generators are ranked ``z1 < ... < zq < y1 < ... < yp`` so
    that multiplying generators by a fixed generator preserves the order.
    """

    sig: Signature
    kind: str = "deglex"
    precedence: Optional[tuple[Generator, ...]] = None
    _rank: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("deglex", "weight"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        prec = self.precedence
        if prec is None:
            prec = tuple(self.sig.generators)
        else:
            prec = tuple(Generator.parse(g) if isinstance(g, str) else g for g in prec)
            if sorted(prec) != sorted(self.sig.generators):
                raise ValueError("precedence must list every generator exactly once")
        object.__setattr__(self, "precedence", prec)
        object.__setattr__(self, "_rank", {g: i for i, g in enumerate(prec)})

    def _word(self, y: tuple[int, ...], z: tuple[int, ...]) -> tuple[int, ...]:
        exps = [0] * len(self.precedence)
        for i, a in enumerate(y):
            exps[self._rank[Generator(False, i + 1)]] = a
        for j in z:
            exps[self._rank[Generator(True, j)]] = 1
        return tuple(reversed(exps))

    def key(self, m: Monomial):
        self.sig.check(m)
        if self.kind == "deglex":
            if isinstance(m, Generator):
                return (1, 0, self._word(*_gen_parts(m, self.sig.p)), ())
            return (m.degree, 1, self._word(m.yu, m.zu), self._word(m.yv, m.zv))
        if isinstance(m, Generator):
            return (1, 0, (not m.odd, m.index))
        q = self.sig.q
        return (
            m.degree,
            1,
            tuple(reversed(m.yu)),
            tuple(reversed(m.yv)),
            tuple(reversed(_odd_vector(m.zu, q))),
            tuple(reversed(_odd_vector(m.zv, q))),
        )


def _gen_parts(g: Generator, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if g.odd:
        return (0,) * p, (g.index,)
    y = [0] * p
    y[g.index - 1] = 1
    return tuple(y), ()


def _odd_vector(z: tuple[int, ...], q: int) -> tuple[int, ...]:
    out = [0] * q
    for j in z:
        out[j - 1] = 1
    return tuple(out)


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> str:
    ka, kb = order.key(a), order.key(b)
    return "less" if ka < kb else "greater" if ka > kb else "equal"


def lead(f: SuperPolynomial, order: MonomialOrder) -> tuple[Monomial, object]:
    if f.sig != order.sig:
        raise SignatureMismatch(f"{f.sig} vs {order.sig}")
    if not f:
        raise ValueError("the zero polynomial has no leading monomial")
    m = max(f.terms, key=order.key)
    return m, f.terms[m]


def _factors(m: Monomial, p: int):
    """Left and right factors as (y exponents, odd index set); a generator has no split."""
    if isinstance(m, Generator):
        y, z = _gen_parts(m, p)
        return y, z
    return (m.yu, m.zu), (m.yv, m.zv)


def _factor_divides(a, b) -> bool:
    (ya, za), (yb, zb) = a, b
    return all(x <= y for x, y in zip(ya, yb)) and set(za) <= set(zb)


def divides(m: Monomial, n: Monomial) -> bool:
    """Whether ``n`` is reachable from ``m`` by left/right generator multiplications."""
    return division_chain(m, n) is not None


def _quotient_gens(a, b) -> list[Generator]:
    """Generators forming the factor ``b / a`` (assumes ``a`` divides ``b``)."""
    (ya, za), (yb, zb) = a, b
    out = []
    for i, (x, y) in enumerate(zip(ya, yb)):
        out.extend([Generator(False, i + 1)] * (y - x))
    out.extend(Generator(True, j) for j in zb if j not in za)
    return out


def division_chain(m: Monomial, n: Monomial) -> Optional[Chain]:
    """A chain of ``('L', x)``/``('R', x)`` steps carrying ``m`` to ``+-n``, or None."""
    if isinstance(n, Generator):
        return () if m == n else None
    p = len(n.yu)
    left_n, right_n = (n.yu, n.zu), (n.yv, n.zv)
    if isinstance(m, Generator):
        y, z = _gen_parts(m, p)
        if _factor_divides((y, z), left_n):
            # m o x' = m | x' with x' taken from the right factor
            first = _quotient_gens(((0,) * p, ()), right_n)[0]
            start = ("R", first)
            left = _quotient_gens((y, z), left_n)
            right = _quotient_gens(_gen_parts(first, p), right_n)
        elif _factor_divides((y, z), right_n):
            first = _quotient_gens(((0,) * p, ()), left_n)[0]
            start = ("L", first)
            left = _quotient_gens(_gen_parts(first, p), left_n)
            right = _quotient_gens((y, z), right_n)
        else:
            return None
        return (start,) + tuple(("L", x) for x in left) + tuple(("R", x) for x in right)
    left_m, right_m = (m.yu, m.zu), (m.yv, m.zv)
    if not (_factor_divides(left_m, left_n) and _factor_divides(right_m, right_n)):
        return None
    return tuple(("L", x) for x in _quotient_gens(left_m, left_n)) + tuple(
        ("R", x) for x in _quotient_gens(right_m, right_n)
    )


def _apply_terms(terms: dict, chain: Chain, sig: Signature) -> dict:
    for side, x in chain:
        out: dict = {}
        for m, c in terms.items():
            s, r = mul_monomials(x, m, sig) if side == "L" else mul_monomials(m, x, sig)
            if s:
                out[r] = out.get(r, 0) + s * c
        terms = out
    return terms


def apply_chain(f: SuperPolynomial, chain: Chain) -> SuperPolynomial:
    return SuperPolynomial(f.sig, _apply_terms(dict(f.terms), chain, f.sig))


@dataclass(frozen=True)
class ReductionStep:
    coefficient: object
    divisor: int
    chain: Chain


def reduce_with_certificate(
    f: SuperPolynomial, G: Sequence[SuperPolynomial], order: MonomialOrder
) -> tuple[SuperPolynomial, list[ReductionStep]]:
    """Fully tail-reduce ``f`` by ``G``; ``f - r == sum(c * chain(G[i]))`` over the steps."""
    sig = order.sig
    if f.sig != sig or any(g.sig != sig for g in G):
        raise SignatureMismatch("reduce operands use different signatures")
    field_ = sig.field
    leads = [lead(g, order) if g else None for g in G]
    r = dict(f.terms)
    steps: list[ReductionStep] = []
    blocked: set = set()
    while True:
        candidates = [m for m in r if m not in blocked]
        if not candidates:
            break
        m = max(candidates, key=order.key)
        for i, lg in enumerate(leads):
            if lg is None:
                continue
            chain = division_chain(lg[0], m)
            if chain is None:
                continue
            h = _apply_terms(dict(G[i].terms), chain, sig)
            h = {k: field_(v) for k, v in h.items() if field_(v)}
            if m not in h or max(h, key=order.key) != m:
                continue
            c = field_.div(r[m], h[m])
            for k, v in h.items():
                nv = field_(r.get(k, 0) - c * v)
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            steps.append(ReductionStep(c, i, chain))
            break
        else:
            blocked.add(m)
    return SuperPolynomial(sig, r), steps


def reduce(f: SuperPolynomial, G: Sequence[SuperPolynomial], order: MonomialOrder) -> SuperPolynomial:
    return reduce_with_certificate(f, G, order)[0]


@dataclass(frozen=True)
class GsBasis:
    """Degree-truncated Groebner-Shirshov data for the ideal generated by ``gens``.

    ``ideal_dims[d]`` is the exact dimension of the degree-``d`` slice of the
    ideal; ``stable_through`` is the largest ``d <= D`` at which no new
    staircase element appeared.
    """

    sig: Signature
    gens: tuple[SuperPolynomial, ...]
    order: MonomialOrder
    D: int
    staircase: tuple[Monomial, ...]
    generators: tuple[SuperPolynomial, ...]
    stable_through: int
    ideal_dims: tuple[int, ...]
    new_by_degree: tuple[int, ...]


class _Echelon:
    """Incremental reduced row echelon form; pivots are leading monomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.field = order.sig.field
        self.rows: dict = {}

    def add(self, v: dict) -> bool:
        F = self.field
        v = {k: F(c) for k, c in v.items() if F(c)}
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, rc in self.rows[piv].items():
                nv = F(v.get(k, 0) - c * rc)
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        if not v:
            return False
        piv = max(v, key=self.order.key)
        inv = F.div(1, v[piv])
        v = {k: F(c * inv) for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for k, vc in v.items():
                    nv = F(row.get(k, 0) - c * vc)
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True


def _block_key(m: Monomial, sig: Signature):
    return m.multidegree(sig.p, sig.q)


def truncated_basis(
    gens: Iterable[SuperPolynomial], order: MonomialOrder, D: int, cap: int = 16
) -> GsBasis:
    """Exact ideal slices through degree ``D`` and the staircase they determine.

    Generators must be nonzero and multihomogeneous.
    """
    sig = order.sig
    gens = tuple(gens)
    if D > cap:
        raise DegreeOverflow(f"truncation degree {D} exceeds cap {cap}")
    if D < 1:
        raise ValueError("truncation degree must be at least 1")
    for g in gens:
        if g.sig != sig:
            raise SignatureMismatch(f"{g.sig} vs {sig}")
        if not g:
            raise ValueError("ideal generators must be nonzero")
        if not g.is_multihomogeneous():
            raise ValueError(f"ideal generator {g} is not multihomogeneous")
        if g.degree > D:
            raise ValueError(f"generator degree {g.degree} exceeds truncation degree {D}")
    xs = sig.generators
    staircase: list[Monomial] = []
    reduced: list[SuperPolynomial] = []
    ideal_dims = [0]
    new_by_degree = [0]
    prev_rows: list[dict] = []
    for d in range(1, D + 1):
        blocks: dict = {}

        def push(v: dict) -> None:
            if not v:
                return
            key = _block_key(next(iter(v)), sig)
            blocks.setdefault(key, _Echelon(order)).add(v)

        for g in gens:
            if g.degree == d:
                push(dict(g.terms))
        for row in prev_rows:
            for x in xs:
                push(_apply_terms(row, (("L", x),), sig))
                push(_apply_terms(row, (("R", x),), sig))
        rows = [(piv, r) for b in blocks.values() for piv, r in b.rows.items()]
        rows.sort(key=lambda pr: order.key(pr[0]))
        new = 0
        for piv, r in rows:
            if not any(divides(s, piv) for s in staircase):
                staircase.append(piv)
                reduced.append(SuperPolynomial(sig, r))
                new += 1
        ideal_dims.append(len(rows))
        new_by_degree.append(new)
        prev_rows = [r for _, r in rows]
    stable = max((d for d in range(1, D + 1) if new_by_degree[d] == 0), default=0)
    return GsBasis(
        sig, gens, order, D, tuple(staircase), tuple(reduced), stable, tuple(ideal_dims), tuple(new_by_degree)
    )


def member(f: SuperPolynomial, B: GsBasis) -> str:
    """``'yes'``, ``'no'`` or ``'unknown'`` (degree above what ``B`` certifies)."""
    if f.sig != B.sig:
        raise SignatureMismatch(f"{f.sig} vs {B.sig}")
    if f.degree > B.D:
        return "unknown"
    if not reduce(f, B.generators, B.order):
        return "yes"
    return "no" if f.degree <= B.stable_through else "unknown"


def quotient_dims(B: GsBasis) -> list[int]:
    """Per degree ``0..D``: basis monomials not divisible by any staircase element."""
    out = [0]
    for d in range(1, B.D + 1):
        out.append(sum(1 for m in basis_of_degree(B.sig, d) if not any(divides(s, m) for s in B.staircase)))
    return out


def _increasing_maps(k: int, n: int):
    return itertools.combinations(range(n), k)


def _embeds(src: Sequence[tuple[int, int]], dst: Sequence[tuple[int, int]]) -> bool:
    """Greedy: is there an increasing injection of index positions with componentwise dominance?

    ``src``/``dst`` list ``(left exponent, right exponent)`` per index.  Taking
    the earliest dominating target for each source index is optimal.
    """
    j = 0
    for a in src:
        while j < len(dst) and not (dst[j][0] >= a[0] and dst[j][1] >= a[1]):
            j += 1
        if j == len(dst):
            return False
        j += 1
    return True


def _trim(cols: list[tuple[int, int]]) -> list[tuple[int, int]]:
    # indices above the largest one in use are not part of the monomial
    while cols and cols[-1] == (0, 0):
        cols.pop()
    return cols


def weight_preceq(m: TensorMonomial, n: TensorMonomial) -> bool:
    """Divisibility up to order-preserving renaming of the even and the odd indices."""
    if not (isinstance(m, TensorMonomial) and isinstance(n, TensorMonomial)):
        raise TypeError("weight_preceq is defined on tensor monomials only")
    ys_m = _trim(list(zip(m.yu, m.yv)))
    ys_n = _trim(list(zip(n.yu, n.yv)))
    qm = max(m.zu + m.zv, default=0)
    qn = max(n.zu + n.zv, default=0)
    zs_m = list(zip(_odd_vector(m.zu, qm), _odd_vector(m.zv, qm)))
    zs_n = list(zip(_odd_vector(n.zu, qn), _odd_vector(n.zv, qn)))
    return _embeds(ys_m, ys_n) and _embeds(zs_m, zs_n)
