import itertools

import pytest
from hypothesis import given

from prelie_hopf import _pykernels
from prelie_hopf.trees import (
    UNIT,
    Forest,
    InvalidVertexError,
    ParseError,
    RootedTree,
    all_grafts,
    canonicalize,
    enumerate_forests,
    enumerate_trees,
    format_forest,
    graft_at,
    parse_forest,
    parse_tree,
    symmetry_factor,
)

from oracles import automorphisms, forest_symmetry, labeled_trees
from strategies import forests, trees

# rooted unlabeled trees (OEIS A000081) and with two colors (A000151)
ONE_COLOR = [1, 1, 2, 4, 9, 20, 48, 115]
TWO_COLORS = [2, 4, 14, 52, 214]


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_counts_one_color(n):
    assert len(enumerate_trees(n)) == ONE_COLOR[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_counts_two_colors(n):
    assert len(enumerate_trees(n, ("a", "b"))) == TWO_COLORS[n - 1]


@pytest.mark.parametrize("n,colors", [(n, ("a",)) for n in range(1, 8)] + [(n, ("a", "b")) for n in range(1, 5)])
def test_enumeration_matches_labeled_brute_force(n, colors):
    assert set(enumerate_trees(n, colors)) == labeled_trees(n, colors)
    assert len(set(enumerate_trees(n, colors))) == len(enumerate_trees(n, colors))


def test_forest_counts():
    # forests of unlabeled rooted trees with n vertices = trees with n + 1 vertices
    for n in range(0, 7):
        assert len(enumerate_forests(n)) == ONE_COLOR[n]


def test_canonical_encoding_sorts_children():
    t = parse_tree("a[b a[a] a]")
    assert str(t) == "a[a a[a] b]"
    assert t == parse_tree("a[a[a] b a]")
    assert t.size == 5


@given(trees(6))
def test_canonicalize_is_permutation_invariant(t):
    kids = t.children
    if len(kids) <= 4:
        for perm in itertools.permutations(kids):
            assert canonicalize(t.color, perm) == t


@given(trees(6))
def test_parse_round_trip(t):
    assert parse_tree(str(t)) == t
    assert str(parse_tree(str(t))) == str(t)


@given(forests(6))
def test_forest_parse_round_trip(F):
    assert parse_forest(format_forest(F)) == F


def test_unit_forest():
    assert parse_forest("") == UNIT and parse_forest("1") == UNIT
    assert UNIT.degree == 0 and len(UNIT) == 0


@pytest.mark.parametrize("text", ["a[", "a]", "[a]", "a[b", "a b]", "a[[b]]", "a,b"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_forest(text)
    assert 0 <= info.value.position <= len(text)


def test_parse_tree_rejects_forests():
    with pytest.raises(ParseError):
        parse_tree("a b")


@given(trees(5), trees(4))
def test_all_grafts_sizes_and_count(t1, t2):
    out = all_grafts(t1, t2)
    assert len(out) == t1.size
    assert all(g.size == t1.size + t2.size for g in out)
    assert out == [graft_at(t1, v, t2) for v in range(t1.size)]


@given(trees(5), trees(4))
def test_kernels_agree(t1, t2):
    assert all_grafts(t1, t2) == _pykernels.all_grafts(t1, t2)


def test_graft_at_by_preorder_index():
    t = parse_tree("a[b[c]]")
    assert str(graft_at(t, 0, parse_tree("d"))) == "a[b[c] d]"
    assert str(graft_at(t, 2, parse_tree("d"))) == "a[b[c[d]]]"
    with pytest.raises(InvalidVertexError):
        graft_at(t, 3, parse_tree("d"))


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetry_factor_matches_automorphism_count(n):
    for t in enumerate_trees(n, ("a", "b") if n <= 4 else ("a",)):
        assert symmetry_factor(t) == automorphisms(t)


def test_symmetry_factor_of_forests():
    for n in range(0, 6):
        for F in enumerate_forests(n):
            assert symmetry_factor(F) == forest_symmetry(F)
    assert symmetry_factor(parse_forest("a[a a] a[a a] b")) == 8


def test_forest_is_a_sorted_multiset():
    F = Forest([parse_tree("a"), parse_tree("a[a]"), parse_tree("a")])
    assert F == parse_forest("a a[a] a")
    assert F.multiplicities()[parse_tree("a")] == 2
    assert F.degree == 4
    assert F * parse_forest("b") == parse_forest("a a a[a] b")


def test_colors_must_be_identifiers():
    with pytest.raises(ValueError):
        canonicalize("1x", [])
