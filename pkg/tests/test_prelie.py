import pytest
from hypothesis import given, settings

from prelie_hopf.algebra import LinearCombination
from prelie_hopf.prelie import (
    ONE_DIM,
    FreePreLie,
    StructureConstantPreLie,
    associator,
    corolla_graft,
    format_structure_constants,
    free_circle,
    lie_bracket,
    parse_structure_constants,
    sc_prelie_check,
    universal_morphism_apply,
)
from prelie_hopf.trees import Forest, parse_forest, parse_tree

from strategies import trees

L = FreePreLie(("a", "b"))


def T(text):
    return LinearCombination({parse_tree(text): 1})


def combo(**kw):
    return LinearCombination({parse_tree(k.replace("_", " ")): v for k, v in kw.items()})


def test_small_products():
    assert free_circle(parse_tree("a"), parse_tree("a")) == T("a[a]")
    assert free_circle(parse_tree("a[a]"), parse_tree("a")) == T("a[a a]") + T("a[a[a]]")
    assert free_circle(parse_tree("a"), parse_tree("a[a]")) == T("a[a[a]]")
    # two grafts onto the equal leaves of a[b b] collapse to coefficient 2
    assert free_circle(parse_tree("a[b b]"), parse_tree("c")) == T("a[b b c]") + 2 * T("a[b b[c]]")


def test_associator_of_single_vertices():
    a = T("a")
    assert associator(L, a, a, a) == -T("a[a a]")


@settings(max_examples=60, deadline=None)
@given(trees(3), trees(3), trees(3))
def test_associator_symmetric_in_last_two(x, y, z):
    X, Y, Z = (LinearCombination({t: 1}) for t in (x, y, z))
    assert associator(L, X, Y, Z) == associator(L, X, Z, Y)


@settings(max_examples=40, deadline=None)
@given(trees(3), trees(3), trees(3))
def test_jacobi(x, y, z):
    X, Y, Z = (LinearCombination({t: 1}) for t in (x, y, z))
    b = lambda p, q: lie_bracket(L, p, q)
    assert b(X, b(Y, Z)) + b(Y, b(Z, X)) + b(Z, b(X, Y)) == 0
    assert b(X, Y) == -b(Y, X)


def test_corolla_grafting_by_hand():
    out = corolla_graft(parse_forest("a[a]"), [parse_tree("b"), parse_tree("c")])
    expected = T("a[a b c]") + T("a[a[c] b]") + T("a[a[b] c]") + T("a[a[b c]]")
    assert out == expected.map_basis(lambda t: Forest([t]))


def test_universal_morphism_to_one_dimensional_instance():
    f = {"a": LinearCombination({0: 1})}
    e = LinearCombination({0: 1})
    assert universal_morphism_apply(f, parse_tree("a[a]"), ONE_DIM) == e
    assert universal_morphism_apply(f, parse_tree("a[a a]"), ONE_DIM) == 0
    assert universal_morphism_apply(f, parse_tree("a[a[a]]"), ONE_DIM) == e


def test_universal_morphism_identity():
    f = {c: T(c) for c in "ab"}
    for text in ("a", "a[b]", "a[a b[a]]", "b[a a[b b]]"):
        assert universal_morphism_apply(f, parse_tree(text), L) == T(text)


def test_universal_morphism_unknown_color():
    with pytest.raises(KeyError):
        universal_morphism_apply({"a": T("a")}, parse_tree("b"), L)


def test_associative_algebras_are_prelie():
    # dual numbers: e1 unit, e2^2 = 0
    dual = StructureConstantPreLie.from_products(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
    assert sc_prelie_check(dual) is None
    assert sc_prelie_check(ONE_DIM) is None


def test_non_prelie_instance_is_detected():
    # e1∘e1 = e2, e2∘e1 = e1: associator (e1,e2,e1) = e2 but (e1,e1,e2) = 0
    bad = StructureConstantPreLie.from_products(2, {(0, 0): {1: 1}, (1, 0): {0: 1}})
    assert sc_prelie_check(bad) is not None


def test_structure_constant_text_round_trip():
    text = "dim 2\n1 1 1 1\n1 2 2 1/2\n2 1 2 -3\n"
    S = parse_structure_constants(text)
    assert S.circle(0, 1) == LinearCombination({1: "1/2"})
    assert format_structure_constants(S) == text
    assert parse_structure_constants(format_structure_constants(S)) == S


@pytest.mark.parametrize("text", ["", "dim", "dim 2\n1 1 1", "dim 2\n3 1 1 1", "size 2"])
def test_structure_constant_parse_errors(text):
    with pytest.raises(ValueError):
        parse_structure_constants(text)
