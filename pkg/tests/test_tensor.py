from collections import Counter

import pytest
from hypothesis import given, settings

from prelie_hopf.algebra import LinearCombination, add_scaled, normalized
from prelie_hopf.planar import EMPTY_WORD, Word, enumerate_planar_words, parse_planar_forest
from prelie_hopf.tensor import (
    PlanarBraces,
    TensorHopf,
    ZeroBraces,
    b_minus_identity_holds,
    b_planar_minus,
    b_planar_plus,
    deconcat,
    foissy_coproduct,
)

from oracles import shuffles
from strategies import words

H = TensorHopf(PlanarBraces())
Z = TensorHopf(ZeroBraces())


def W(text):
    return parse_planar_forest(text)


def lc(*pairs):
    return LinearCombination({W(t): c for t, c in pairs})


def test_deconcatenation():
    assert deconcat(W("a b")) == LinearCombination({(EMPTY_WORD, W("a b")): 1, (W("a"), W("b")): 1, (W("a b"), EMPTY_WORD): 1})


def test_star_by_hand():
    assert H.star_word(W("a"), W("a")) == lc(("a[a]", 1), ("a a", 2))
    assert H.star_word(W("1"), W("a b")) == lc(("a b", 1))
    assert H.star_word(W("a b"), W("1")) == lc(("a b", 1))


@settings(max_examples=60, deadline=None)
@given(words(4), words(3))
def test_closed_form_matches_recursion(A, B):
    assert H.star_word(A, B) == H.star_closed(A, B)


@settings(max_examples=40, deadline=None)
@given(words(3), words(2), words(2))
def test_associativity(A, B, C):
    assert H.star(H.star_word(A, B), LinearCombination({C: 1})) == H.star(LinearCombination({A: 1}), H.star_word(B, C))


@settings(max_examples=60, deadline=None)
@given(words(4), words(4))
def test_zero_braces_give_shuffles(A, B):
    assert Counter(dict(Z.star_word(A, B).items())) == shuffles(A, B)


@settings(max_examples=40, deadline=None)
@given(words(5))
def test_antipode_axiom(A):
    acc: dict = {}
    for i in range(len(A) + 1):
        for w, c in H.antipode_word(A[:i]).items():
            add_scaled(acc, H.star_word(w, A[i:]), c)
    assert normalized(acc) == (lc(("1", 1)) if len(A) == 0 else 0)


def test_brace_composition_small():
    for X in (W("a"), W("a[a]")):
        for B in enumerate_planar_words(1) + enumerate_planar_words(2):
            for C in enumerate_planar_words(1) + enumerate_planar_words(2):
                assert H.brace_composition_check(X[0], B, C)


def test_foissy_by_hand():
    D = foissy_coproduct(W("a[a b]"))
    expected = {
        (W("a[a b]"), EMPTY_WORD): 1,
        (EMPTY_WORD, W("a[a b]")): 1,
        (W("a"), W("a[b]")): 1,
        (W("b"), W("a[a]")): 1,
        (W("a b"), W("a")): 1,
    }
    assert D == LinearCombination(expected)


def test_b_plus_minus():
    t = b_planar_plus("b", W("a[a] a"))
    assert str(t) == "b[a[a] a]"
    assert b_planar_minus(LinearCombination({Word([t]): 2, W("a b"): 1}), "b") == 2 * lc(("a[a] a", 1))
    assert b_planar_minus(LinearCombination({Word([t]): 2}), "a") == 0


@pytest.mark.parametrize("colors", [("a",), ("a", "b")])
def test_b_minus_identity(colors):
    ws = [w for d in range(4) for w in enumerate_planar_words(d, colors)]
    for A in ws:
        for B in ws:
            if A.degree + B.degree <= 4:
                assert b_minus_identity_holds(H, A, B, colors)


def test_plain_pairing_duality_degree_three():
    for d in range(4):
        ws = [w for k in range(d + 1) for w in enumerate_planar_words(k)]
        for C in enumerate_planar_words(d):
            for (A, B), c in foissy_coproduct(C).items():
                assert H.star_word(B, A)[C] == c
        for A in ws:
            for B in ws:
                if A.degree + B.degree == d:
                    for C, c in H.star_word(B, A).items():
                        assert foissy_coproduct(C)[(A, B)] == c
