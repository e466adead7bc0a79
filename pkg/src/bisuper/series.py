"""Hilbert series, graded dimensions, codimensions and GK dimension."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Sequence, Union

from . import _poly
from ._poly import Poly
from .core import Signature

__all__ = [
    "RationalSeries",
    "hilbert_free",
    "dim_component",
    "codimension",
    "pole_order_at_one",
    "gk_dimension_free",
    "GRADINGS",
]

GRADINGS = ("total", "bi", "multi")
DEFAULT_BOUND = 12


@dataclass(frozen=True, eq=False)
class RationalSeries:
    """``numerator / prod (1 - x^m)^e`` over named variables.

    ``denominator`` is a tuple of ``(exponent tuple, e)`` pairs.  Coefficients
    up to total degree ``bound`` are expanded once, under a lock, and cached.
    """

    variables: tuple[str, ...]
    numerator: Poly
    denominator: tuple[tuple[tuple[int, ...], int], ...] = ()
    bound: int = DEFAULT_BOUND
    _cache: dict = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        n = len(self.variables)
        num = {tuple(e): int(c) for e, c in self.numerator.items() if c}
        for e in num:
            if len(e) != n or min(e, default=0) < 0:
                raise ValueError(f"bad numerator exponent {e} for variables {self.variables}")
        merged: dict[tuple[int, ...], int] = {}
        for m, e in self.denominator:
            m = tuple(m)
            if len(m) != n or min(m, default=0) < 0 or not any(m):
                raise ValueError(f"bad denominator monomial {m}")
            if e < 0:
                raise ValueError("denominator exponents must be nonnegative")
            if e:
                merged[m] = merged.get(m, 0) + e
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", tuple(sorted(merged.items())))
        if self.bound < 0:
            raise ValueError("truncation bound must be nonnegative")

    @classmethod
    def univariate(cls, coeffs: Sequence[int], denominator: Sequence[tuple[int, int]] = (), var: str = "t", bound: int = DEFAULT_BOUND) -> "RationalSeries":
        """Build ``sum coeffs[i] t^i / prod (1 - t^d)^e`` from ``[(d, e), ...]``."""
        num = {(i,): c for i, c in enumerate(coeffs) if c}
        return cls((var,), num, tuple(((d,), e) for d, e in denominator), bound)

    def expansion(self) -> dict[tuple[int, ...], int]:
        """All nonzero coefficients of total degree at most ``bound``."""
        with self._lock:
            if "coeffs" not in self._cache:
                f = _poly.truncate(self.numerator, self.bound)
                for m, e in self.denominator:
                    for _ in range(e):
                        f = _poly.geometric_divide(f, m, self.bound)
                self._cache["coeffs"] = f
            return self._cache["coeffs"]

    def coefficient(self, exponent: Union[int, Sequence[int]]) -> int:
        if isinstance(exponent, int):
            exponent = (exponent,)
        exponent = tuple(exponent)
        if len(exponent) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} exponents")
        if sum(exponent) > self.bound:
            return self.with_bound(sum(exponent)).coefficient(exponent)
        return self.expansion().get(exponent, 0)

    def total_coefficients(self) -> list[int]:
        """Coefficients of the total-degree specialization, degrees 0..bound."""
        out = [0] * (self.bound + 1)
        for e, c in self.expansion().items():
            out[sum(e)] += c
        return out

    def with_bound(self, bound: int) -> "RationalSeries":
        return RationalSeries(self.variables, self.numerator, self.denominator, bound)

    def specialize(self, mapping: Mapping[str, str], variables: Sequence[str] | None = None) -> "RationalSeries":
        """Substitute variables by variables (e.g. ``u1 -> u``); unmapped names stay."""
        targets = tuple(variables) if variables is not None else tuple(dict.fromkeys(mapping.get(v, v) for v in self.variables))
        pos = {name: i for i, name in enumerate(targets)}
        try:
            idx = [pos[mapping.get(v, v)] for v in self.variables]
        except KeyError as exc:
            raise ValueError(f"variable {exc.args[0]} missing from target variables") from None

        def move(e: tuple[int, ...]) -> tuple[int, ...]:
            out = [0] * len(targets)
            for i, a in zip(idx, e):
                out[i] += a
            return tuple(out)

        num: Poly = {}
        for e, c in self.numerator.items():
            k = move(e)
            num[k] = num.get(k, 0) + c
        return RationalSeries(targets, num, tuple((move(m), e) for m, e in self.denominator), self.bound)

    def denominator_poly(self) -> Poly:
        n = len(self.variables)
        out = _poly.const(1, n)
        for m, e in self.denominator:
            out = _poly.mul(out, _poly.power({(0,) * n: 1, m: -1}, e, n))
        return out

    def same_function(self, other: "RationalSeries") -> bool:
        """Exact equality as rational functions (cross multiplication)."""
        if self.variables != other.variables:
            return False
        lhs = _poly.mul(self.numerator, other.denominator_poly())
        rhs = _poly.mul(other.numerator, self.denominator_poly())
        return lhs == rhs

    def is_polynomial(self) -> bool:
        return not self.denominator

    def __str__(self) -> str:
        num = _poly.format_poly(self.numerator, self.variables)
        if not self.denominator:
            return num
        parts = []
        for m, e in self.denominator:
            mono = "*".join(v if a == 1 else f"{v}^{a}" for v, a in zip(self.variables, m) if a)
            parts.append(f"(1 - {mono})" + (f"^{e}" if e > 1 else ""))
        return f"({num}) / ({' * '.join(parts)})"


def hilbert_free(sig: Signature, grading: str = "total", bound: int = DEFAULT_BOUND) -> RationalSeries:
    """Hilbert series of the free algebra of rank ``(p, q)`` as one fraction.

    With ``A = prod(1 + v_j)`` and ``B = prod(1 - u_i)`` the series is
    ``sum u_i + sum v_j + (A/B - 1)^2``, written as
    ``((sum u + sum v) B^2 + (A - B)^2) / B^2``.
    """
    p, q = sig.p, sig.q
    if grading == "multi":
        names = tuple(f"u{i}" for i in range(1, p + 1)) + tuple(f"v{j}" for j in range(1, q + 1))
        n = p + q
        linear = _poly.add(*(_poly.var(i, n) for i in range(n)))
        a = _poly.product((_poly.add(_poly.const(1, n), _poly.var(p + j, n)) for j in range(q)), n)
        b = _poly.product((_poly.sub(_poly.const(1, n), _poly.var(i, n)) for i in range(p)), n)
        den = tuple((tuple(1 if k == i else 0 for k in range(n)), 2) for i in range(p))
    elif grading in ("bi", "total"):
        if grading == "bi":
            names, n, iu, iv = ("u", "v"), 2, 0, 1
        else:
            names, n, iu, iv = ("t",), 1, 0, 0
        linear = _poly.add(_poly.var(iu, n, p), _poly.var(iv, n, q))
        a = _poly.power(_poly.add(_poly.const(1, n), _poly.var(iv, n)), q, n)
        b = _poly.power(_poly.sub(_poly.const(1, n), _poly.var(iu, n)), p, n)
        unit = tuple(1 if k == iu else 0 for k in range(n))
        den = ((unit, 2 * p),) if p else ()
    else:
        raise ValueError(f"unknown grading {grading!r}; expected one of {GRADINGS}")
    diff = _poly.sub(a, b)
    num = _poly.add(_poly.mul(linear, _poly.mul(b, b)), _poly.mul(diff, diff))
    return RationalSeries(names, num, den, bound)


def _multichoose(nvars: int, k: int) -> int:
    """Number of monomials of degree ``k`` in ``nvars`` commuting variables."""
    if nvars == 0:
        return 1 if k == 0 else 0
    return comb(k + nvars - 1, k)


def dim_component(sig: Signature, degree) -> int:
    """Dimension of a homogeneous component of the free algebra.

    ``degree`` is ``(k, l)`` with tuples (multidegree), ``(k, l)`` with ints
    (bidegree) or an int (total degree).
    """
    p, q = sig.p, sig.q
    if isinstance(degree, bool):
        raise ValueError("malformed degree")
    if isinstance(degree, int):
        if degree < 1:
            raise ValueError("total degree must be at least 1")
        return sum(dim_component(sig, (k, degree - k)) for k in range(degree + 1))
    try:
        k, l = degree
    except (TypeError, ValueError):
        raise ValueError(f"malformed degree {degree!r}") from None
    if isinstance(k, int) and isinstance(l, int) and not isinstance(k, bool):
        if k < 0 or l < 0 or k + l < 1:
            raise ValueError(f"malformed bidegree {degree!r}")
        if k + l == 1:
            return p if k == 1 else q
        return _multichoose(2 * p, k) * comb(2 * q, l) - 2 * _multichoose(p, k) * comb(q, l)
    k, l = tuple(k), tuple(l)
    if len(k) != p or len(l) != q or any(not isinstance(x, int) or x < 0 for x in k + l):
        raise ValueError(f"malformed multidegree {degree!r} for {sig}")
    total = sum(k) + sum(l)
    if total < 1:
        raise ValueError("total degree must be at least 1")
    if total == 1:
        return 1
    first = 1
    for ki in k:
        first *= ki + 1
    second = 1
    for lj in l:
        first *= {0: 1, 1: 2, 2: 1}.get(lj, 0)
        second *= 1 if lj in (0, 1) else 0
    return first - 2 * second


def codimension(mode: str, *args: int) -> int:
    """``codimension("super", p, q)`` or ``codimension("ordinary", n)``."""
    if mode == "super":
        if len(args) != 2:
            raise ValueError("super codimension takes (p, q)")
        p, q = args
        if p < 0 or q < 0 or p + q < 1:
            raise ValueError("need p + q >= 1")
        return 1 if p + q == 1 else 2 ** (p + q) - 2
    if mode == "ordinary":
        if len(args) != 1:
            raise ValueError("ordinary codimension takes (n,)")
        (n,) = args
        if n < 1:
            raise ValueError("need n >= 1")
        return 2 if n == 1 else 2 ** (2 * n) - 2 ** (n + 1)
    raise ValueError(f"unknown codimension mode {mode!r}")


def _root_multiplicity_at_one(coeffs: list[int]) -> int:
    """Multiplicity of ``t = 1`` as a root, by repeated synthetic division."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("zero polynomial has no finite root multiplicity")
    mult = 0
    while sum(c) == 0:
        # divide by (t - 1)
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc += c[i]
            q[i - 1] = acc
        c = q
        mult += 1
    return mult


def pole_order_at_one(s: RationalSeries) -> int:
    """Order of the pole at ``t = 1`` after cancelling common factors."""
    if len(s.variables) != 1:
        raise ValueError("pole order is defined for univariate series only")
    if not s.numerator:
        return 0
    deg = max(e[0] for e in s.numerator)
    coeffs = [s.numerator.get((i,), 0) for i in range(deg + 1)]
    # each (1 - t^d) has a simple root at t = 1
    den_mult = sum(e for _, e in s.denominator)
    return max(0, den_mult - _root_multiplicity_at_one(coeffs))


def gk_dimension_free(sig: Signature) -> int:
    gk = 2 * sig.p
    pole = pole_order_at_one(hilbert_free(sig, "total"))
    if pole != gk:
        raise AssertionError(f"pole order {pole} disagrees with 2p = {gk}")
    return gk
