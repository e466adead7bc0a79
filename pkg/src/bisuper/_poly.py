"""Sparse integer polynomials as ``{exponent tuple: coefficient}`` dicts."""

from __future__ import annotations

from typing import Iterable

Poly = dict[tuple[int, ...], int]


def const(c: int, nvars: int) -> Poly:
    return {(0,) * nvars: c} if c else {}


def var(i: int, nvars: int, c: int = 1) -> Poly:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): c}


def add(*polys: Poly) -> Poly:
    out: Poly = {}
    for f in polys:
        for e, c in f.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def scale(f: Poly, c: int) -> Poly:
    return {e: c * v for e, v in f.items()} if c else {}


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, scale(g, -1))


def mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def power(f: Poly, n: int, nvars: int) -> Poly:
    out = const(1, nvars)
    for _ in range(n):
        out = mul(out, f)
    return out


def product(polys: Iterable[Poly], nvars: int) -> Poly:
    out = const(1, nvars)
    for f in polys:
        out = mul(out, f)
    return out


def degree(e: tuple[int, ...]) -> int:
    return sum(e)


def truncate(f: Poly, bound: int) -> Poly:
    return {e: c for e, c in f.items() if sum(e) <= bound}


def geometric_divide(f: Poly, m: tuple[int, ...], bound: int) -> Poly:
    """``f / (1 - x^m)`` as a power series truncated at total degree ``bound``."""
    if not any(m):
        raise ValueError("denominator factor (1 - 1) is zero")
    dm = sum(m)
    keys = set()
    for e in f:
        cur = e
        while sum(cur) <= bound:
            keys.add(cur)
            cur = tuple(a + b for a, b in zip(cur, m))
    out: Poly = {}
    for e in sorted(keys, key=sum):
        prev = tuple(a - b for a, b in zip(e, m))
        c = f.get(e, 0)
        if min(prev) >= 0 and sum(e) - dm >= 0:
            c += out.get(prev, 0)
        if c:
            out[e] = c
    return out


def format_poly(f: Poly, names: tuple[str, ...]) -> str:
    if not f:
        return "0"
    terms = []
    for e in sorted(f, key=lambda e: (sum(e), tuple(-a for a in e))):
        c = f[e]
        mon = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a)
        if not mon:
            terms.append(str(c))
        elif c == 1:
            terms.append(mon)
        elif c == -1:
            terms.append(f"-{mon}")
        else:
            terms.append(f"{c}*{mon}")
    return " + ".join(terms).replace("+ -", "- ")
