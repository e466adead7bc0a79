"""Reduced-budget run of the invariant suite, used by ``bisuper selftest``."""

from __future__ import annotations

import itertools
from math import comb
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import characters as ch
from . import groebner as gb
from . import identities as ids
from . import oracles, series
from .core import Signature, SuperPolynomial, TensorMonomial, basis_of_degree, enumerate_basis, mul, multidegrees
from .terms import Node, iter_terms, multilinear_dimension, normalize, random_term
from .textio import parse_polynomial


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _dims(seed: int) -> str:
    n = 0
    for p, q in itertools.product(range(3), repeat=2):
        if p + q == 0:
            continue
        sig = Signature(p, q)
        for d in range(1, 7):
            for k, l in multidegrees(sig, d, odd_cap=None):
                assert len(enumerate_basis(sig, k, l)) == series.dim_component(sig, (k, l)), (p, q, k, l)
                n += 1
    return f"{n} multidegrees"


def _hilbert(seed: int) -> str:
    for p, q in itertools.product(range(3), repeat=2):
        if p + q == 0:
            continue
        sig = Signature(p, q)
        coeffs = series.hilbert_free(sig, "total", bound=6).total_coefficients()
        for n in range(1, 7):
            bi = sum(series.dim_component(sig, (k, n - k)) for k in range(n + 1))
            assert coeffs[n] == bi == len(basis_of_degree(sig, n)), (p, q, n)
    return "p,q <= 2, n <= 6"


def _codim(seed: int) -> str:
    for n in range(1, 6):
        for p in range(n + 1):
            sig = Signature(max(p, 1), max(n - p, 1))
            assert series.codimension("super", p, n - p) == multilinear_dimension(sig, p, n - p)
        total = sum(
            comb(n, p) * series.codimension("super", p, n - p) for p in range(n + 1)
        )
        assert total == series.codimension("ordinary", n)
    return "p+q <= 5"


def _identities(seed: int) -> str:
    sig = Signature(2, 3)
    idents = ids.catalog()
    for ident in idents:
        res = ids.check_identity(ident, sig, trials=200, seed=seed)
        assert res.passed, f"{ident.name}: {res.witness}"
    mutants = [m for ident in idents for m in ids.mutations(ident)]
    survivors = [m.name for m in mutants if ids.check_identity(m, sig, trials=200, seed=seed).passed]
    assert not survivors, f"surviving mutants {survivors}"
    return f"{len(idents)} identities, {len(mutants)} mutants killed"


def _square(seed: int) -> str:
    sig = Signature(1, 1)
    monos = [m for d in (2, 3) for m in basis_of_degree(sig, d) if isinstance(m, TensorMonomial)]
    polys = [SuperPolynomial.monomial(sig, m) for m in monos]
    for a, b in itertools.product(polys, repeat=2):
        sa = next(iter(a.terms)).parity
        sb = next(iter(b.terms)).parity
        assert mul(a, b) == mul(b, a).scale(-1 if sa and sb else 1)
        for c in polys:
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
    return f"{len(polys)} tensor monomials"


def _terms(seed: int) -> str:
    sig = Signature(1, 2)
    rng = random.Random(seed)
    atoms = sig.generators
    for _ in range(100):
        s = random_term(atoms, rng.randint(1, 5), rng)
        t = random_term(atoms, rng.randint(1, 5), rng)
        assert normalize(Node(s, t), sig) == mul(normalize(s, sig), normalize(t, sig))
    count = 0
    for d in range(1, 5):
        for t in iter_terms(atoms, d):
            assert normalize(t, sig) == oracles.rewrite_normal_form(t, sig, rng), str(t)
            count += 1
    return f"100 random pairs, {count} terms vs rewriting oracle"


def _gk(seed: int) -> str:
    for p, q in itertools.product(range(5), repeat=2):
        if p + q:
            assert series.gk_dimension_free(Signature(p, q)) == 2 * p
    return "p,q <= 4"


def _groebner(seed: int) -> str:
    cases = [(["y1|y1"], 1, 0, 6), (["z1|z1"], 0, 2, 4), (["z1|z2 + z2|z1"], 0, 2, 4)]
    for gens, p, q, D in cases:
        sig = Signature(p, q)
        G = [parse_polynomial(g, sig) for g in gens]
        B = gb.truncated_basis(G, gb.MonomialOrder(sig), D)
        slices = oracles.ideal_slice_ranks(G, sig, D)
        expect = [0] + [len(basis_of_degree(sig, d)) - len(slices[d]) for d in range(1, D + 1)]
        assert gb.quotient_dims(B) == expect, (gens, gb.quotient_dims(B), expect)
    return f"{len(cases)} ideals"


def _weight(seed: int) -> str:
    rng = random.Random(seed)
    sig = Signature(2, 2)
    monos = [m for d in range(2, 5) for m in basis_of_degree(sig, d) if isinstance(m, TensorMonomial)]
    for _ in range(2000):
        m, n = rng.choice(monos), rng.choice(monos)
        assert gb.weight_preceq(m, n) == oracles.weight_preceq_bruteforce(m, n), (m, n)
    return "2000 sampled pairs"


def _cochar(seed: int) -> str:
    H = series.hilbert_free(Signature(2, 2), "multi", bound=5).expansion()
    for k in range(6):
        for l in range(6 - k):
            if k + l == 0:
                continue
            piece = {e: c for e, c in H.items() if e[0] + e[1] == k and e[2] + e[3] == l}
            got = ch.schur_expand_double(piece, 2, 2)
            for lam in ch.partitions(k, 2):
                for mu in ch.partitions(l, 2):
                    assert got.get((lam, mu), 0) == ch.multiplicity(lam, mu), (lam, mu)
    for n in range(1, 6):
        for p in range(n + 1):
            s = sum(
                ch.multiplicity(a, b) * ch.standard_tableaux(a) * ch.standard_tableaux(b)
                for a in ch.partitions(p)
                for b in ch.partitions(n - p)
            )
            assert s == series.codimension("super", p, n - p)
    return "p = q = 2 through degree 5"


CHECKS: list[tuple[str, Callable[[int], str]]] = [
    ("dimension formulas", _dims),
    ("hilbert coefficients", _hilbert),
    ("codimensions", _codim),
    ("identity suite", _identities),
    ("square structure", _square),
    ("normalization", _terms),
    ("gk dimension", _gk),
    ("groebner-shirshov", _groebner),
    ("weight order", _weight),
    ("cocharacters", _cochar),
]


def run(seed: int = 0) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            detail, ok = fn(seed), True
        except AssertionError as exc:
            detail, ok = f"failed: {exc}", False
        out.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return out
