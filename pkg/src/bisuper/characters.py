"""Partitions, Schur polynomials, Pieri rules and cocharacter multiplicities.

Symmetric polynomials in ``d`` variables are sparse dicts mapping exponent
tuples to integers (see :mod:`bisuper._poly`).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence, Union

from . import _poly
from ._poly import Poly
from .series import RationalSeries

__all__ = [
    "Partition",
    "BiMultiplicity",
    "partitions",
    "schur",
    "young_row_product",
    "young_column_product",
    "multiplicity",
    "double_multiplicity_series",
    "double_multiplicity_rational",
    "schur_expand",
    "schur_expand_double",
    "standard_tableaux",
    "NotSymmetric",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if text in ("", "0", "-"):
            return cls(())
        return cls(tuple(int(x) for x in text.replace(" ", ",").split(",") if x))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """0-based part, 0 beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class BiMultiplicity:
    lam: Partition
    mu: Partition
    m: int


def partitions(n: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(n: int, cap: int, rows: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first, rows - 1):
                yield (first,) + rest

    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in gen(n, n, n if max_rows is None else max_rows)]


def _as_partition(x: Union[Partition, Sequence[int]]) -> Partition:
    return x if isinstance(x, Partition) else Partition(tuple(x))


@lru_cache(maxsize=None)
def _schur(parts: tuple[int, ...], d: int) -> tuple:
    if len(parts) > d:
        return ()
    cells = [(r, c) for r, row in enumerate(parts) for c in range(row)]
    out: dict = {}
    filling: dict = {}

    def fill(k: int) -> None:
        if k == len(cells):
            e = [0] * d
            for v in filling.values():
                e[v] += 1
            e = tuple(e)
            out[e] = out.get(e, 0) + 1
            return
        r, c = cells[k]
        lo = 0
        if c > 0:
            lo = filling[(r, c - 1)]
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, d):
            filling[(r, c)] = v
            fill(k + 1)
        filling.pop((r, c), None)

    fill(0)
    return tuple(sorted(out.items()))


def schur(lam: Union[Partition, Sequence[int]], d: int) -> Poly:
    """Schur polynomial ``s_lam(u_1..u_d)`` by semistandard tableaux enumeration."""
    if d < 1:
        raise ValueError("need at least one variable")
    return dict(_schur(_as_partition(lam).parts, d))


def young_row_product(lam: Union[Partition, Sequence[int]], n: int, d: int) -> list[Partition]:
    """Shapes in ``s_lam * s_(n)`` (horizontal strips), at most ``d`` rows."""
    lam = _as_partition(lam)
    if len(lam) > d:
        return []
    rows = min(d, len(lam) + 1)
    target = lam.size + n
    out = []

    def gen(i: int, left: int, prefix: tuple[int, ...]) -> None:
        if i == rows:
            if left == 0:
                out.append(Partition(prefix))
            return
        lo = lam[i]
        hi = lam[i] + left if i == 0 else min(lam[i - 1], lam[i] + left)
        for v in range(hi, lo - 1, -1):
            gen(i + 1, left - (v - lam[i]), prefix + (v,))

    gen(0, n, ())
    return out


def young_column_product(lam: Union[Partition, Sequence[int]], n: int, d: int) -> list[Partition]:
    """Shapes in ``s_lam * s_(1^n)`` (vertical strips), at most ``d`` rows.

    When ``n > d`` the product vanishes in ``d`` variables; a warning is
    issued and the empty list returned.
    """
    lam = _as_partition(lam)
    if n > d:
        warnings.warn(f"s_(1^{n}) vanishes in {d} variables", RuntimeWarning, stacklevel=2)
        return []
    rows = min(d, len(lam) + n)
    out = []

    def gen(i: int, left: int, prefix: tuple[int, ...]) -> None:
        if i == rows:
            if left == 0:
                out.append(Partition(prefix))
            return
        for bump in (1, 0):
            v = lam[i] + bump
            if bump > left or (i > 0 and v > prefix[-1]):
                continue
            gen(i + 1, left - bump, prefix + (v,))

    gen(0, n, ())
    return [mu for mu in out if len(mu) <= d]


def multiplicity(lam: Union[Partition, Sequence[int]], mu: Union[Partition, Sequence[int]]) -> int:
    """Multiplicity of ``chi_lam (x) chi_mu`` in the bicommutative supercocharacter."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    mc = mu.conjugate()
    if len(lam) > 2 or len(mc) > 2:
        return 0
    total = lam.size + mu.size
    if lam[1] + mc[1] > 0:
        return (lam[0] - lam[1] + 1) * (mc[0] - mc[1] + 1)
    if total >= 2:
        return (lam[0] + 1) * (mc[0] + 1) - 2
    return 1 if total == 1 else 0


def double_multiplicity_rational(bound: int = 12) -> RationalSeries:
    """``u1 + v1 + 1/((1-u1)^2 (1-u1u2) (1-v1)^2 (1-v1v2)) - 2/((1-u1)(1-v1)) + 1``."""
    n = 4
    one = _poly.const(1, n)
    u1, u2, v1, v2 = (_poly.var(i, n) for i in range(n))

    def om(f: Poly) -> Poly:
        return _poly.sub(one, f)

    den = _poly.product([om(u1), om(u1), om(_poly.mul(u1, u2)), om(v1), om(v1), om(_poly.mul(v1, v2))], n)
    rest = _poly.product([om(u1), om(_poly.mul(u1, u2)), om(v1), om(_poly.mul(v1, v2))], n)
    num = _poly.add(_poly.mul(_poly.add(u1, v1, one), den), one, _poly.scale(rest, -2))
    factors = (
        ((1, 0, 0, 0), 2),
        ((1, 1, 0, 0), 1),
        ((0, 0, 1, 0), 2),
        ((0, 0, 1, 1), 1),
    )
    return RationalSeries(("u1", "u2", "v1", "v2"), num, factors, bound)


def double_multiplicity_series(trunc: tuple[int, int] = (6, 6)) -> dict[tuple[int, int, int, int], int]:
    """Coefficients at ``u1^a u2^b v1^c v2^e`` with ``a + b <= trunc[0]`` and ``c + e <= trunc[1]``."""
    a, b = trunc
    s = double_multiplicity_rational(a + b)
    return {e: c for e, c in s.expansion().items() if e[0] + e[1] <= a and e[2] + e[3] <= b}


class NotSymmetric(ValueError):
    """Input to a Schur expansion is not a symmetric polynomial."""


def _check_symmetric(f: Poly) -> None:
    for e, c in f.items():
        key = tuple(sorted(e, reverse=True))
        if f.get(key, 0) != c:
            raise NotSymmetric(f"coefficient of {e} differs from that of {key}")


def schur_expand(f: Poly, d: int, require_nonnegative: bool = True) -> dict[Partition, int]:
    """Write a symmetric polynomial as an integer combination of Schur polynomials.

    Peels off the lexicographically greatest monomial, which for a symmetric
    polynomial is the leading term of exactly one Schur polynomial.
    """
    for e in f:
        if len(e) != d:
            raise ValueError(f"expected {d} variables, got exponent {e}")
    _check_symmetric(f)
    rest = dict(f)
    out: dict[Partition, int] = {}
    while rest:
        e = max(rest)
        if list(e) != sorted(e, reverse=True):
            raise NotSymmetric(f"leading exponent {e} is not a partition")
        c = rest[e]
        if c < 0 and require_nonnegative:
            raise ValueError(f"negative coefficient {c} at shape {e}")
        lam = Partition(e)
        out[lam] = c
        rest = _poly.sub(rest, _poly.scale(schur(lam, d), c))
        _check_symmetric(rest)
    return out


def schur_expand_double(f: Poly, d1: int, d2: int) -> dict[tuple[Partition, Partition], int]:
    """Expand ``f(U, V)`` (first ``d1`` exponents in ``U``) into ``s_lam(U) s_mu(V)``."""
    by_v: dict[tuple[int, ...], Poly] = {}
    for e, c in f.items():
        by_v.setdefault(e[d1:], {})[e[:d1]] = c
    # coefficient of each U-Schur function, as a polynomial in V
    coeff_in_v: dict[Partition, Poly] = {}
    for ve, g in by_v.items():
        for lam, c in schur_expand(g, d1, require_nonnegative=False).items():
            if c:
                coeff_in_v.setdefault(lam, {})[ve] = c
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, h in coeff_in_v.items():
        for mu, c in schur_expand(h, d2).items():
            if c:
                out[(lam, mu)] = c
    return out


def standard_tableaux(lam: Union[Partition, Sequence[int]]) -> int:
    """``f^lam`` by the hook length formula."""
    lam = _as_partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks
