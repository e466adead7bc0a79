"""Brute-force oracles that do not share code paths with the main algorithms.

* :func:`rewrite_normal_form` normalizes a generator term by term rewriting
  with the defining identities only (weak associativity, the product of two
  canonical monomials, and reordering of one-sided multipliers).
* :func:`ideal_slice_ranks` spans ideal slices by multiplying with arbitrary
  basis monomials on either side and takes ranks by dense elimination.
* :func:`weight_preceq_bruteforce` tries every increasing index map.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional, Sequence

from .core import Generator, Monomial, Signature, SuperPolynomial, TensorMonomial, basis_of_degree, mul
from .terms import Leaf, Node, Term

__all__ = [
    "rewrite_normal_form",
    "ideal_slice_ranks",
    "rank",
    "weight_preceq_bruteforce",
    "tensor_divides_bruteforce",
]


# a canonical shape t_k(...(t_2((t_1 u_1) u_2 ... u_l))) is (sign, [t_1..t_k], [u_1..u_l])
Shape = tuple[int, list[Generator], list[Generator]]


def _par(xs: Sequence[Generator]) -> int:
    return sum(x.parity for x in xs) % 2


def _shape(t: Term) -> "Shape | Generator":
    if isinstance(t, Leaf):
        return t.atom
    a, b = _shape(t.left), _shape(t.right)
    if isinstance(a, Generator) and isinstance(b, Generator):
        return 1, [a], [b]
    if isinstance(a, Generator):
        # a (t_k(...)) is one more left multiplier
        s, ts, us = b
        return s, ts + [a], us
    if isinstance(b, Generator):
        # (t_k A) b = t_k (A b) repeatedly, then ((t_1 u_1)..u_l) b
        s, ts, us = a
        return s, ts, us + [b]
    # product of two canonical shapes
    s1, t1, u1 = a
    s2, v, w = b
    sign = s1 * s2 * (-1 if _par(u1) * _par(v + w) else 1)
    return sign, v + t1, w + u1


def _bubble(word: list[Generator], rng: Optional[random.Random]) -> tuple[int, list[Generator]]:
    """Sort by adjacent swaps in a random order; two odd letters swapping costs -1."""
    word = list(word)
    sign = 1
    while True:
        inversions = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
        if not inversions:
            break
        i = rng.choice(inversions) if rng else inversions[0]
        if word[i].odd and word[i + 1].odd:
            sign = -sign
        word[i], word[i + 1] = word[i + 1], word[i]
    for a, b in zip(word, word[1:]):
        if a == b and a.odd:
            return 0, word
    return sign, word


def _factor(word: list[Generator], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    y = [0] * p
    z = []
    for g in word:
        if g.odd:
            z.append(g.index)
        else:
            y[g.index - 1] += 1
    return tuple(y), tuple(z)


def rewrite_normal_form(t: Term, sig: Signature, rng: Optional[random.Random] = None) -> SuperPolynomial:
    """Normal form of a monomial term via identity rewriting and multiplier sorting."""
    sh = _shape(t)
    if isinstance(sh, Generator):
        return SuperPolynomial.monomial(sig, sh)
    sign, ts, us = sh
    # the left factor reads t_k ... t_1 from the outside in
    s1, left = _bubble(list(reversed(ts)), rng)
    s2, right = _bubble(us, rng)
    if not (s1 and s2):
        return SuperPolynomial.zero(sig)
    yu, zu = _factor(left, sig.p)
    yv, zv = _factor(right, sig.p)
    return SuperPolynomial.monomial(sig, TensorMonomial(yu, zu, yv, zv), sign * s1 * s2)


def rank(rows: list[dict]) -> int:
    """Rank over the rationals by dense Gaussian elimination."""
    cols = sorted({k for r in rows for k in r}, key=repr)
    idx = {c: i for i, c in enumerate(cols)}
    mat = []
    for r in rows:
        v = [Fraction(0)] * len(cols)
        for k, c in r.items():
            v[idx[k]] = Fraction(c)
        mat.append(v)
    rk = 0
    for c in range(len(cols)):
        piv = next((i for i in range(rk, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        for i in range(len(mat)):
            if i != rk and mat[i][c] != 0:
                f = mat[i][c] / mat[rk][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rk])]
        rk += 1
    return rk


def ideal_slice_ranks(gens: Sequence[SuperPolynomial], sig: Signature, D: int) -> list[list[SuperPolynomial]]:
    """Spanning sets of the ideal slices of degrees ``0..D``.

    Degree ``d`` is spanned by the degree-``d`` generators and by ``a h``,
    ``h a`` for ``h`` in a lower slice and ``a`` any basis monomial, which
    covers every bracketing of products with ideal elements.
    """
    slices: list[list[SuperPolynomial]] = [[] for _ in range(D + 1)]
    monos = {d: [SuperPolynomial.monomial(sig, m) for m in basis_of_degree(sig, d)] for d in range(1, D + 1)}
    for d in range(1, D + 1):
        span = [g for g in gens if g and g.degree == d]
        for e in range(1, d):
            basis = _independent(slices[e])
            for h in basis:
                for a in monos[d - e]:
                    for prod in (mul(a, h), mul(h, a)):
                        if prod:
                            span.append(prod)
        slices[d] = _independent(span)
    return slices


def _independent(polys: list[SuperPolynomial]) -> list[SuperPolynomial]:
    out: list[SuperPolynomial] = []
    r = 0
    for f in polys:
        if rank([dict(g.terms) for g in out] + [dict(f.terms)]) > r:
            out.append(f)
            r += 1
    return out


def _increasing_maps(k: int, n: int):
    return itertools.combinations(range(n), k)


def tensor_divides_bruteforce(m: TensorMonomial, n: TensorMonomial) -> bool:
    return (
        all(a <= b for a, b in zip(m.yu, n.yu))
        and all(a <= b for a, b in zip(m.yv, n.yv))
        and set(m.zu) <= set(n.zu)
        and set(m.zv) <= set(n.zv)
    )


def weight_preceq_bruteforce(m: TensorMonomial, n: TensorMonomial) -> bool:
    """Search all increasing maps on the even and the odd indices."""

    def used(y: tuple[int, ...], z: tuple[int, ...]) -> int:
        return max([i + 1 for i, a in enumerate(y) if a] + list(z), default=0)

    ky = max(used(m.yu, ()), used(m.yv, ()))
    ny = max(len(n.yu), 1)
    kz = max(m.zu + m.zv, default=0)
    nz = max(n.zu + n.zv, default=0)
    for fy in _increasing_maps(ky, ny):
        yu = [0] * ny
        yv = [0] * ny
        for i, j in enumerate(fy):
            yu[j] = m.yu[i]
            yv[j] = m.yv[i]
        ok_y = all(a <= b for a, b in zip(yu, n.yu + (0,) * ny)) and all(a <= b for a, b in zip(yv, n.yv + (0,) * ny))
        if not ok_y:
            continue
        for fz in _increasing_maps(kz, nz):
            zu = {fz[j - 1] + 1 for j in m.zu}
            zv = {fz[j - 1] + 1 for j in m.zv}
            if zu <= set(n.zu) and zv <= set(n.zv):
                return True
    return False
