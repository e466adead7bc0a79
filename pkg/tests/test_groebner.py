import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bisuper.core import Generator, Signature, SignatureMismatch, SuperPolynomial, TensorMonomial, basis_of_degree, mul, mul_monomials
from bisuper.groebner import (
    DegreeOverflow,
    MonomialOrder,
    apply_chain,
    compare,
    divides,
    division_chain,
    lead,
    member,
    quotient_dims,
    reduce,
    reduce_with_certificate,
    truncated_basis,
    weight_preceq,
)
from bisuper.oracles import ideal_slice_ranks, rank, tensor_divides_bruteforce, weight_preceq_bruteforce
from bisuper.textio import parse_polynomial
from strategies import tensor_monomials

Y1, Y2 = Generator(False, 1), Generator(False, 2)
Z1, Z2 = Generator(True, 1), Generator(True, 2)


def P(text, sig):
    return parse_polynomial(text, sig)


def M(text, sig):
    (m, _), = list(P(text, sig))
    return m


# --- orders -------------------------------------------------------------------


def test_compare_examples():
    sig = Signature(2, 0)
    o = MonomialOrder(sig)
    assert compare(Y1, M("y1|y1", sig), o) == "less"
    assert compare(M("y1|y2", sig), M("y2|y1", sig), o) == "less"
    assert compare(M("y1|y2", sig), M("y1|y2", sig), o) == "equal"
    sig1 = Signature(1, 1)
    o1 = MonomialOrder(sig1)
    a, b, c = M("y1|z1", sig1), M("y1^2|z1", sig1), M("y1^3|z1", sig1)
    assert compare(a, b, o1) == "less"
    assert mul_monomials(Y1, a, sig1)[1] == b and mul_monomials(Y1, b, sig1)[1] == c
    assert compare(b, c, o1) == "less"


def test_compare_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        compare(Z2, Y1, MonomialOrder(Signature(1, 1)))


def test_order_rejects_bad_input():
    with pytest.raises(ValueError):
        MonomialOrder(Signature(1, 1), kind="lex")
    with pytest.raises(ValueError):
        MonomialOrder(Signature(1, 1), precedence=("y1",))


def test_lead_examples():
    sig = Signature(1, 1)
    o = MonomialOrder(sig)
    assert lead(P("y1 + y1|y1", sig), o) == (M("y1|y1", sig), 1)
    assert lead(P("z1", sig), o) == (Z1, 1)
    m, c = lead(P("2 * y1|z1 - 3 * z1|y1", sig), o)
    other = M("y1|z1", sig) if m == M("z1|y1", sig) else M("z1|y1", sig)
    assert compare(m, other, o) == "greater"
    assert c == (2 if m == M("y1|z1", sig) else -3)
    with pytest.raises(ValueError):
        lead(SuperPolynomial.zero(sig), o)


def _all_monomials(sig, max_degree):
    return [m for d in range(1, max_degree + 1) for m in basis_of_degree(sig, d)]


@pytest.mark.parametrize("kind", ["deglex", "weight"])
@pytest.mark.parametrize("p,q", [(1, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_order_is_total_and_compatible(kind, p, q):
    sig = Signature(p, q)
    o = MonomialOrder(sig, kind)
    monos = _all_monomials(sig, 3)
    keys = [o.key(m) for m in monos]
    assert len(set(keys)) == len(keys)
    ranked = sorted(monos, key=o.key)
    for x in sig.generators:
        for side in ("L", "R"):
            prev = None
            for m in ranked:
                s, r = mul_monomials(x, m, sig) if side == "L" else mul_monomials(m, x, sig)
                if not s:
                    continue
                if prev is not None:
                    assert o.key(prev) < o.key(r)
                prev = r


# --- divisibility ---------------------------------------------------------------


def test_divides_examples():
    sig = Signature(3, 2)
    assert divides(M("y1|z1", sig), M("y1^2 z2|z1 y3", sig))
    assert not divides(M("z1|y1", sig), M("y1|z1", sig))
    assert divides(Z1, M("y1|z1", sig))
    assert divides(Y1, Y1) and not divides(Y1, Y2)
    assert not divides(M("y1|y1", sig), Y1)


def test_division_chain_is_explicit():
    sig = Signature(3, 2)
    m, n = M("y1|z1", sig), M("y1^2 z2|z1 y3", sig)
    chain = division_chain(m, n)
    got = apply_chain(SuperPolynomial.monomial(sig, m), chain)
    assert set(got.terms) == {n}
    chain = division_chain(Z1, M("y1|z1", sig))
    assert set(apply_chain(SuperPolynomial.monomial(sig, Z1), chain).terms) == {M("y1|z1", sig)}


@given(st.data())
def test_tensor_divisibility_matches_componentwise(data):
    sig = Signature(2, 2)
    a = data.draw(tensor_monomials(sig))
    b = data.draw(tensor_monomials(sig))
    assert divides(a, b) == tensor_divides_bruteforce(a, b)
    if divides(a, b):
        chain = division_chain(a, b)
        assert set(apply_chain(SuperPolynomial.monomial(sig, a), chain).terms) == {b}


# --- reduction -----------------------------------------------------------------


@pytest.mark.parametrize(
    "order",
    [
        MonomialOrder(Signature(1, 1), "weight"),
        MonomialOrder(Signature(1, 1), precedence=("z1", "y1")),
    ],
)
def test_reduce_example(order):
    sig = Signature(1, 1)
    g = P("y1|z1 - z1|y1", sig)
    f = P("y1^2|z1", sig)
    r = reduce(f, [g], order)
    assert r == P("y1 z1|y1", sig) == f - mul(P("y1", sig), g)
    assert not divides(lead(g, order)[0], lead(r, order)[0])


def test_reduce_trivial_cases():
    sig = Signature(1, 1)
    o = MonomialOrder(sig)
    g = P("y1|z1 - 2 * z1|y1 + y1^2|y1", sig)
    assert reduce(g, [g], o) == 0
    f = P("y1|z1 + z1", sig)
    assert reduce(f, [], o) == f


@pytest.mark.parametrize("kind", ["deglex", "weight"])
def test_reduction_certificate(kind):
    sig = Signature(1, 2)
    o = MonomialOrder(sig, kind)
    G = [P("z1|z2 + z2|z1", sig), P("y1|z1 - z1|y1", sig)]
    rng = random.Random(1)
    monos = _all_monomials(sig, 4)
    for _ in range(40):
        f = SuperPolynomial(sig, {m: rng.randint(-3, 3) for m in rng.sample(monos, 4)})
        r, steps = reduce_with_certificate(f, G, o)
        total = SuperPolynomial.zero(sig)
        for st_ in steps:
            total = total + apply_chain(G[st_.divisor], st_.chain).scale(st_.coefficient)
        assert f - r == total
        leads = [lead(g, o)[0] for g in G]
        assert not any(divides(l, m) for l in leads for m in r.terms)


# --- truncated bases -------------------------------------------------------------


def _oracle_quotient_dims(gens, sig, D):
    slices = ideal_slice_ranks(gens, sig, D)
    return [0] + [len(basis_of_degree(sig, d)) - len(slices[d]) for d in range(1, D + 1)], slices


def test_truncated_basis_examples():
    sig = Signature(1, 0)
    B = truncated_basis([P("y1|y1", sig)], MonomialOrder(sig), 6)
    assert B.staircase == (M("y1|y1", sig),)
    assert quotient_dims(B) == [0, 1, 0, 0, 0, 0, 0]
    sig2 = Signature(0, 2)
    B2 = truncated_basis([P("z1|z1", sig2)], MonomialOrder(sig2), 4)
    assert B2.staircase == (M("z1|z1", sig2),)
    assert quotient_dims(B2)[2] == 3
    B3 = truncated_basis([], MonomialOrder(Signature(1, 1)), 4)
    assert B3.staircase == ()
    assert quotient_dims(B3) == [0, 2, 4, 8, 12]
    B4 = truncated_basis([P("z1|z2 + z2|z1", sig2)], MonomialOrder(sig2), 4)
    assert quotient_dims(B4)[2] == 3


def test_truncated_basis_errors():
    sig = Signature(1, 1)
    o = MonomialOrder(sig)
    with pytest.raises(DegreeOverflow):
        truncated_basis([], o, 20)
    with pytest.raises(ValueError):
        truncated_basis([P("y1 + y1|y1", sig)], o, 3)
    with pytest.raises(ValueError):
        truncated_basis([P("y1^2|y1^2", sig)], o, 3)


IDEALS = [
    (Signature(1, 0), ["y1|y1"]),
    (Signature(0, 2), ["z1|z1"]),
    (Signature(1, 1), []),
    (Signature(0, 2), ["z1|z2 + z2|z1"]),
    (Signature(1, 1), ["y1|z1 - z1|y1"]),
    (Signature(2, 0), ["y1|y2 - y2|y1", "y1^2|y2"]),
    (Signature(1, 1), ["z1"]),
]


@pytest.mark.parametrize("kind", ["deglex", "weight"])
@pytest.mark.parametrize("sig,gens", IDEALS)
def test_quotient_dims_match_rank_oracle(kind, sig, gens):
    gens = [P(g, sig) for g in gens]
    D = 5
    B = truncated_basis(gens, MonomialOrder(sig, kind), D)
    expected, slices = _oracle_quotient_dims(gens, sig, D)
    assert quotient_dims(B) == expected
    assert list(B.ideal_dims[1:]) == [len(s) for s in slices[1:]]
    # staircase invariants
    for i, a in enumerate(B.staircase):
        for j, b in enumerate(B.staircase):
            assert i == j or not divides(a, b)
    for s, g in zip(B.staircase, B.generators):
        assert lead(g, B.order)[0] == s
        d = g.degree
        assert rank([dict(h.terms) for h in slices[d]] + [dict(g.terms)]) == len(slices[d])


@pytest.mark.parametrize("sig,gens", IDEALS)
def test_member_and_normal_forms(sig, gens):
    gens = [P(g, sig) for g in gens]
    D = 4
    B = truncated_basis(gens, MonomialOrder(sig), D)
    _, slices = _oracle_quotient_dims(gens, sig, D)
    rng = random.Random(0)
    for d in range(1, min(D, B.stable_through) + 1):
        for h in slices[d]:
            assert member(h, B) == "yes"
        for m in basis_of_degree(sig, d):
            f = SuperPolynomial.monomial(sig, m)
            in_ideal = rank([dict(h.terms) for h in slices[d]] + [{m: 1}]) == len(slices[d])
            assert member(f, B) == ("yes" if in_ideal else "no")
            r = reduce(f, B.generators, B.order)
            assert reduce(r, B.generators, B.order) == r
            shuffled = list(B.generators)
            rng.shuffle(shuffled)
            assert reduce(f, shuffled, B.order) == r
    over = SuperPolynomial.monomial(sig, basis_of_degree(sig, 1)[0])
    for _ in range(D):
        over = mul(over, SuperPolynomial.monomial(sig, sig.generators[0]))
    if over:
        assert member(over, B) == "unknown"


def test_member_examples():
    sig = Signature(1, 1)
    g = P("y1|z1 - z1|y1", sig)
    assert member(g, truncated_basis([g], MonomialOrder(sig), 3)) == "yes"
    sig2 = Signature(1, 1)
    B = truncated_basis([P("z1|z1", sig2)], MonomialOrder(sig2), 3)
    assert member(P("y1|z1", sig2), B) == "no"


# --- weight partial order ------------------------------------------------------------


def test_weight_preceq_examples():
    sig = Signature(3, 0)
    assert weight_preceq(M("y1|y1", sig), M("y2^2 y3|y2", sig))
    assert not weight_preceq(M("y1 y2|y1", sig), M("y1|y1 y2", sig))
    m = M("y1^2 y3|y2", sig)
    assert weight_preceq(m, m)
    with pytest.raises(TypeError):
        weight_preceq(Y1, m)


def test_weight_preceq_across_signatures():
    small, big = Signature(1, 1), Signature(3, 3)
    assert weight_preceq(M("y1|z1", small), M("y2 z1|y3 z3", big))
    assert weight_preceq(M("z1|y1", small), M("y2 z1|y3 z3", big))
    # two odd letters on the left cannot land in a left factor with one
    assert not weight_preceq(M("z1 z2|y1", Signature(1, 2)), M("y2 z1|y3 z3", big))


def _small_tensors(sig):
    out = []
    for yu in itertools.product(range(3), repeat=sig.p):
        for yv in itertools.product(range(3), repeat=sig.p):
            for zu in itertools.product((0, 1), repeat=sig.q):
                for zv in itertools.product((0, 1), repeat=sig.q):
                    a = tuple(j + 1 for j, b in enumerate(zu) if b)
                    b = tuple(j + 1 for j, c in enumerate(zv) if c)
                    if (sum(yu) or a) and (sum(yv) or b):
                        out.append(TensorMonomial(yu, a, yv, b))
    return out


def test_weight_preceq_matches_brute_force_sample():
    pool = _small_tensors(Signature(2, 2))
    rng = random.Random(11)
    for _ in range(3000):
        a, b = rng.choice(pool), rng.choice(pool)
        assert weight_preceq(a, b) == weight_preceq_bruteforce(a, b)


@given(st.data())
def test_weight_preceq_reflexive_and_transitive(data):
    sig = Signature(3, 2)
    a, b, c = (data.draw(tensor_monomials(sig)) for _ in range(3))
    assert weight_preceq(a, a)
    if weight_preceq(a, b) and weight_preceq(b, c):
        assert weight_preceq(a, c)
    if tensor_divides_bruteforce(a, b):
        assert weight_preceq(a, b)
