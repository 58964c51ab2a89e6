import pytest

from prelie_hopf import ck
from prelie_hopf.algebra import LinearCombination
from prelie_hopf.prelie import FreePreLie
from prelie_hopf.symmetric import SymmetricHopf
from prelie_hopf.trees import UNIT, enumerate_forests, parse_forest, parse_tree

from oracles import edge_cut_coproduct


def P(text):
    return parse_forest(text)


def test_coproduct_by_hand():
    D = ck.ck_coproduct(P("a[a a]"))
    assert D == LinearCombination(
        {
            (P("a[a a]"), UNIT): 1,
            (UNIT, P("a[a a]")): 1,
            (P("a"), P("a[a]")): 2,
            (P("a a"), P("a")): 1,
        }
    )
    assert str(ck.ck_coproduct(P("a[a]"))) == "a[a]⊗1 + 1⊗a[a] + a⊗a"


@pytest.mark.parametrize("n,colors", [(n, ("a",)) for n in range(0, 6)] + [(n, ("a", "b")) for n in range(0, 5)])
def test_matches_edge_cut_oracle(n, colors):
    for F in enumerate_forests(n, colors):
        assert ck.ck_coproduct(F) == edge_cut_coproduct(F), F
        assert ck.ck_coproduct_cuts(F) == edge_cut_coproduct(F), F


def test_unit_and_counit():
    assert ck.ck_coproduct(UNIT) == LinearCombination({(UNIT, UNIT): 1})
    assert ck.counit(UNIT) == 1 and ck.counit(P("a")) == 0


def test_b_plus_and_b_minus():
    t = ck.b_plus("b", P("a a[a]"))
    assert t == parse_tree("b[a a[a]]")
    A = LinearCombination({P("b[a a[a]]"): 3, P("a[a]"): 1, P("a b"): 5})
    assert ck.b_minus(A, "b") == LinearCombination({P("a a[a]"): 3})
    assert ck.b_minus(A) == LinearCombination({P("a a[a]"): 3, P("a"): 1})


def test_pairing_variants():
    plain = ck.duality_check(4, "plain-delta")
    weighted = ck.duality_check(4, "delta-times-symmetry-factor")
    assert not plain.passed
    assert plain.counterexample == (P("a"), P("a"))
    assert weighted.passed and weighted.checked > 0
    assert ck.matching_pairings(4) == ["delta-times-symmetry-factor"]
    with pytest.raises(ValueError):
        ck.duality_check(3, "nonsense")


def test_weighted_pairing_two_colors():
    assert ck.duality_check(3, "delta-times-symmetry-factor", ("a", "b")).passed


def test_b_minus_identity_small():
    S = SymmetricHopf(FreePreLie(("a", "b")))
    monos = [m for d in range(4) for m in enumerate_forests(d, ("a", "b"))]
    for A in monos:
        for B in monos:
            if A.degree + B.degree <= 4:
                assert ck.b_minus_identity_holds(S, A, B, ("a", "b"))
