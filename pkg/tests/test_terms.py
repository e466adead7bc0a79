import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bisuper.core import Generator, Signature, SuperPolynomial, mul
from bisuper.oracles import rewrite_normal_form
from bisuper.series import codimension
from bisuper.terms import (
    Leaf,
    Node,
    TermSyntaxError,
    iter_terms,
    multilinear_dimension,
    normalize,
    parse_term,
    random_term,
)
from bisuper.textio import parse_polynomial

Y1, Y2 = Generator(False, 1), Generator(False, 2)
Z1, Z2 = Generator(True, 1), Generator(True, 2)


def test_parse_examples():
    sig = Signature(2, 2)
    assert parse_term("(y1 (z1 y2))", sig) == Node(Leaf(Y1), Node(Leaf(Z1), Leaf(Y2)))
    assert parse_term("((y1 z1) z2)", sig) == Node(Node(Leaf(Y1), Leaf(Z1)), Leaf(Z2))
    assert parse_term("y1", sig) == Leaf(Y1)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("(y1 y2 z1)", "ambiguous"),
        ("(y1 y2", "missing"),
        ("y1 y2)", "unbalanced"),
        ("(y9 y1)", "unknown generator"),
        ("(y1 w1)", "unknown identifier"),
        ("()", "two factors"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(TermSyntaxError) as exc:
        parse_term(text, Signature(2, 2))
    assert fragment in str(exc.value)


def test_normalize_examples():
    sig = Signature(1, 2)
    assert normalize(Leaf(Y1), sig) == SuperPolynomial.monomial(sig, Y1)
    assert str(normalize(parse_term("(z2 (z1 y1))", sig), sig)) == "-1 * z1 z2 | y1"
    assert normalize(parse_term("(z1 (z1 y1))", sig), sig) == 0
    sig5 = Signature(5, 0)
    got = normalize(parse_term("((y1 (y2 y3)) (y4 y5))", sig5), sig5)
    assert got == parse_polynomial("y1 y2 y4 | y3 y5", sig5)


def test_multilinear_dimension_examples():
    sig = Signature(3, 3)
    assert multilinear_dimension(sig, 1, 0) == 1
    assert multilinear_dimension(sig, 1, 1) == 2
    assert multilinear_dimension(sig, 2, 1) == 6
    with pytest.raises(ValueError):
        multilinear_dimension(sig, 4, 0)
    with pytest.raises(ValueError):
        multilinear_dimension(sig, 0, 0)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5) if 1 <= p + q <= 5])
def test_multilinear_dimension_matches_codimension(p, q):
    assert multilinear_dimension(Signature(max(p, 1), max(q, 1)), p, q) == codimension("super", p, q)


SIG = Signature(2, 2)


@given(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False))
def test_homomorphism(d1, d2, rng):
    s = random_term(SIG.generators, d1, rng)
    t = random_term(SIG.generators, d2, rng)
    assert normalize(Node(s, t), SIG) == mul(normalize(s, SIG), normalize(t, SIG))


@pytest.mark.parametrize("sig", [Signature(1, 2), Signature(2, 1), Signature(0, 3)])
def test_rewriting_oracle_agrees_on_all_small_terms(sig):
    rng = random.Random(7)
    for d in range(1, 5):
        for t in iter_terms(sig.generators, d):
            got = normalize(t, sig)
            assert len(got) <= 1
            assert got == rewrite_normal_form(t, sig, rng)


def test_rewriting_is_path_independent():
    sig = Signature(1, 3)
    rng = random.Random(3)
    for _ in range(200):
        t = random_term(sig.generators, rng.randint(2, 6), rng)
        forms = {rewrite_normal_form(t, sig, random.Random(s)) for s in range(5)}
        assert len(forms) == 1
