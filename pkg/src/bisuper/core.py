"""Canonical-form arithmetic in the tensor model of the free bicommutative superalgebra.

The free algebra on ``p`` even generators ``y1..yp`` and ``q`` odd generators
``z1..zq`` is realized as ``KX + w(A) (x) w(A)`` where ``A`` is the free
super-commutative algebra (polynomials in the ``y`` tensored with the exterior
algebra in the ``z``) and ``w(A)`` its augmentation ideal.

Basis elements are either a :class:`Generator` or a :class:`TensorMonomial`
``u | v``.  Odd indices inside each tensor factor are kept strictly increasing;
any reordering sign is absorbed into the coefficient of the surrounding
:class:`SuperPolynomial`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Field",
    "QQ",
    "Signature",
    "Generator",
    "TensorMonomial",
    "Monomial",
    "SuperPolynomial",
    "SignatureMismatch",
    "mul_monomials",
    "mul",
    "parity",
    "enumerate_basis",
    "basis_of_degree",
]


class SignatureMismatch(ValueError):
    """Operands belong to different free algebras."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: exact rationals (``characteristic == 0``) or GF(c), c an odd prime."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        c = self.characteristic
        if c == 2:
            raise ValueError("characteristic 2 is not supported")
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or an odd prime, got {c}")

    def __call__(self, value) -> Union[int, Fraction]:
        """Coerce ``value`` (int, Fraction or numeric string) into the field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        c = self.characteristic
        if c == 0:
            if isinstance(value, Fraction):
                return int(value) if value.denominator == 1 else value
            if isinstance(value, int):
                return value
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, Fraction):
            if value.denominator % c == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({c})")
            return value.numerator * pow(value.denominator, -1, c) % c
        if isinstance(value, int):
            return value % c
        raise TypeError(f"cannot coerce {value!r} into GF({c})")

    def div(self, a, b):
        if self.characteristic == 0:
            return self(Fraction(a) / Fraction(b))
        return a * pow(b, -1, self.characteristic) % self.characteristic

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``QQ``, ``0``, ``GF(5)`` or a bare prime ``5``."""
        t = text.strip().upper()
        if t in ("QQ", "Q", "0", "RATIONAL", "RATIONALS"):
            return cls(0)
        if t.startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        if t.startswith("CHAR-"):
            t = t[5:]
        return cls(int(t))


QQ = Field(0)


@dataclass(frozen=True)
class Signature:
    """``p`` even and ``q`` odd free generators over ``field``."""

    p: int
    q: int
    field: Field = QQ

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        if self.p + self.q < 1:
            raise ValueError("need at least one generator")

    @property
    def generators(self) -> list["Generator"]:
        return [Generator(False, i) for i in range(1, self.p + 1)] + [
            Generator(True, j) for j in range(1, self.q + 1)
        ]

    def gen(self, name: str) -> "SuperPolynomial":
        """The generator named ``y3``/``z1`` as a polynomial."""
        g = Generator.parse(name)
        return SuperPolynomial.monomial(self, g)

    def check(self, m: "Monomial") -> None:
        if isinstance(m, Generator):
            limit = self.q if m.odd else self.p
            if not 1 <= m.index <= limit:
                raise SignatureMismatch(f"{m} is not a generator of {self}")
        else:
            if len(m.yu) != self.p or len(m.yv) != self.p:
                raise SignatureMismatch(f"{m} has wrong even length for {self}")
            if any(not 1 <= j <= self.q for j in m.zu + m.zv):
                raise SignatureMismatch(f"{m} uses odd index out of range for {self}")

    def __str__(self) -> str:
        return f"F({self.p},{self.q}) over {self.field}"


@dataclass(frozen=True, order=True)
class Generator:
    odd: bool
    index: int

    @property
    def parity(self) -> int:
        return int(self.odd)

    @property
    def degree(self) -> int:
        return 1

    def multidegree(self, p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        k = [0] * p
        l = [0] * q
        (l if self.odd else k)[self.index - 1] = 1
        return tuple(k), tuple(l)

    @classmethod
    def parse(cls, name: str) -> "Generator":
        name = name.strip()
        if len(name) < 2 or name[0] not in "yz" or not name[1:].isdigit():
            raise ValueError(f"bad generator name {name!r}")
        idx = int(name[1:])
        if idx < 1:
            raise ValueError(f"generator indices start at 1: {name!r}")
        return cls(name[0] == "z", idx)

    def __str__(self) -> str:
        return f"{'z' if self.odd else 'y'}{self.index}"


@dataclass(frozen=True, order=True)
class TensorMonomial:
    """``y^yu z_zu | y^yv z_zv`` with both factors of positive degree."""

    yu: tuple[int, ...]
    zu: tuple[int, ...]
    yv: tuple[int, ...]
    zv: tuple[int, ...]

    def __post_init__(self) -> None:
        for z in (self.zu, self.zv):
            if any(a >= b for a, b in zip(z, z[1:])):
                raise ValueError(f"odd indices must be strictly increasing: {z}")
        if sum(self.yu) + len(self.zu) < 1 or sum(self.yv) + len(self.zv) < 1:
            raise ValueError("both tensor factors must have positive degree")
        if any(e < 0 for e in self.yu + self.yv):
            raise ValueError("negative exponent")

    @property
    def parity(self) -> int:
        return (len(self.zu) + len(self.zv)) % 2

    @property
    def left_parity(self) -> int:
        return len(self.zu) % 2

    @property
    def right_parity(self) -> int:
        return len(self.zv) % 2

    @property
    def degree(self) -> int:
        return sum(self.yu) + sum(self.yv) + len(self.zu) + len(self.zv)

    def multidegree(self, p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        k = tuple(a + b for a, b in zip(self.yu, self.yv))
        l = [0] * q
        for j in self.zu + self.zv:
            l[j - 1] += 1
        return k, tuple(l)

    def __str__(self) -> str:
        return f"{_factor_str(self.yu, self.zu)} | {_factor_str(self.yv, self.zv)}"


Monomial = Union[Generator, TensorMonomial]


def _factor_str(y: tuple[int, ...], z: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(y, 1):
        if e == 1:
            parts.append(f"y{i}")
        elif e > 1:
            parts.append(f"y{i}^{e}")
    parts.extend(f"z{j}" for j in z)
    return " ".join(parts)


def _merge_odd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted result of the exterior product ``z_a * z_b`` (sign 0 if they overlap)."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return 0, ()
    # count pairs (i in a, j in b) with i > j: each is one transposition
    inversions = 0
    jb = 0
    for i in a:
        while jb < len(b) and b[jb] < i:
            jb += 1
        inversions += jb
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def _gen_factor(g: Generator, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if g.odd:
        return (0,) * p, (g.index,)
    y = [0] * p
    y[g.index - 1] = 1
    return tuple(y), ()


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mul_monomials(a: Monomial, b: Monomial, sig: Signature) -> tuple[int, Monomial | None]:
    """Product ``a o b`` as ``(sign, monomial)``; ``(0, None)`` when an odd variable repeats in a factor."""
    p = sig.p
    a_gen = isinstance(a, Generator)
    b_gen = isinstance(b, Generator)
    if a_gen and b_gen:
        yu, zu = _gen_factor(a, p)
        yv, zv = _gen_factor(b, p)
        return 1, TensorMonomial(yu, zu, yv, zv)
    if a_gen:
        # x o (u|v) = (xu)|v
        gy, gz = _gen_factor(a, p)
        s, zu = _merge_odd(gz, b.zu)
        if not s:
            return 0, None
        return s, TensorMonomial(_add(gy, b.yu), zu, b.yv, b.zv)
    if b_gen:
        # (u|v) o x = u|(vx)
        gy, gz = _gen_factor(b, p)
        s, zv = _merge_odd(a.zv, gz)
        if not s:
            return 0, None
        return s, TensorMonomial(a.yu, a.zu, _add(a.yv, gy), zv)
    # (u1|v1) o (u2|v2) = (-1)^{v1 (u2 + v2)} (u1 u2) | (v2 v1)
    s1, zu = _merge_odd(a.zu, b.zu)
    if not s1:
        return 0, None
    s2, zv = _merge_odd(b.zv, a.zv)
    if not s2:
        return 0, None
    sign = s1 * s2
    if a.right_parity and b.parity:
        sign = -sign
    return sign, TensorMonomial(_add(a.yu, b.yu), zu, _add(a.yv, b.yv), zv)


def monomial_sort_key(m: Monomial):
    """Deterministic listing order: generators first, then lexicographic on (yu, zu, yv, zv)."""
    if isinstance(m, Generator):
        return (0, m.odd, m.index)
    return (1, m.yu, m.zu, m.yv, m.zv)


@dataclass(frozen=True, eq=False)
class SuperPolynomial:
    """Finitely supported map from basis monomials to nonzero field elements."""

    sig: Signature
    terms: Mapping[Monomial, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        f = self.sig.field
        clean = {}
        for m, c in self.terms.items():
            c = f(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, sig: Signature) -> "SuperPolynomial":
        return cls(sig, {})

    @classmethod
    def monomial(cls, sig: Signature, m: Monomial, coeff=1) -> "SuperPolynomial":
        sig.check(m)
        return cls(sig, {m: coeff})

    @classmethod
    def generator(cls, sig: Signature, name: str) -> "SuperPolynomial":
        return cls.monomial(sig, Generator.parse(name))

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(sorted(self.terms.items(), key=lambda kv: monomial_sort_key(kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SuperPolynomial):
            return self.sig == other.sig and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.sig, frozenset(self.terms.items())))

    def _check(self, other: "SuperPolynomial") -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SuperPolynomial(self.sig, out)

    __radd__ = __add__

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        c = self.sig.field(c)
        return SuperPolynomial(self.sig, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperPolynomial):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    @property
    def parity(self) -> str:
        return parity(self)

    @property
    def degree(self) -> int:
        """Largest total degree in the support (0 for the zero polynomial)."""
        return max((m.degree for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def is_multihomogeneous(self) -> bool:
        p, q = self.sig.p, self.sig.q
        return len({m.multidegree(p, q) for m in self.terms}) <= 1

    def coefficient(self, m: Monomial):
        return self.terms.get(m, 0)

    def __str__(self) -> str:
        from .textio import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"


def mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    """Bilinear extension of :func:`mul_monomials`."""
    if f.sig != g.sig:
        raise SignatureMismatch(f"{f.sig} vs {g.sig}")
    sig = f.sig
    out: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            s, m = mul_monomials(a, b, sig)
            if s:
                out[m] = out.get(m, 0) + s * ca * cb
    return SuperPolynomial(sig, out)


def parity(f: SuperPolynomial) -> str:
    """``'even'``, ``'odd'`` or ``'mixed'``; the zero polynomial is even."""
    ps = {m.parity for m in f.terms}
    if len(ps) > 1:
        return "mixed"
    return "odd" if ps == {1} else "even"


def _splits(k: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for left in itertools.product(*(range(e + 1) for e in k)):
        yield left, tuple(e - a for e, a in zip(k, left))


def enumerate_basis(sig: Signature, k: Iterable[int], l: Iterable[int]) -> list[Monomial]:
    """All basis monomials of multidegree ``(k, l)``.

    Ordered lexicographically on ``(yu, zu, yv, zv)``.  Any ``l_j > 2`` gives an
    empty list since an odd variable occurs at most once per tensor factor.
    """
    k = tuple(k)
    l = tuple(l)
    if len(k) != sig.p or len(l) != sig.q:
        raise ValueError(f"multidegree lengths ({len(k)},{len(l)}) do not match {sig}")
    if any(e < 0 for e in k + l):
        raise ValueError("negative multidegree")
    n = sum(k) + sum(l)
    if n < 1:
        raise ValueError("total degree must be at least 1")
    if any(e > 2 for e in l):
        return []
    if n == 1:
        if sum(k):
            return [Generator(False, k.index(1) + 1)]
        return [Generator(True, l.index(1) + 1)]
    both = tuple(j for j, e in enumerate(l, 1) if e == 2)
    single = [j for j, e in enumerate(l, 1) if e == 1]
    out = []
    for yu, yv in _splits(k):
        for mask in itertools.product((0, 1), repeat=len(single)):
            zu = tuple(sorted(both + tuple(j for j, s in zip(single, mask) if s == 0)))
            zv = tuple(sorted(both + tuple(j for j, s in zip(single, mask) if s == 1)))
            if sum(yu) + len(zu) and sum(yv) + len(zv):
                out.append(TensorMonomial(yu, zu, yv, zv))
    out.sort(key=monomial_sort_key)
    return out


def multidegrees(sig: Signature, n: int, odd_cap: int | None = 2) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All multidegrees ``(k, l)`` of total degree ``n``; odd entries capped at ``odd_cap``."""
    nvars = sig.p + sig.q
    for comp in _compositions(n, nvars):
        k, l = comp[: sig.p], comp[sig.p :]
        if odd_cap is not None and any(e > odd_cap for e in l):
            continue
        yield k, l


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def basis_of_degree(sig: Signature, n: int) -> list[Monomial]:
    """All basis monomials of total degree ``n``."""
    out = []
    for k, l in multidegrees(sig, n):
        out.extend(enumerate_basis(sig, k, l))
    out.sort(key=monomial_sort_key)
    return out
