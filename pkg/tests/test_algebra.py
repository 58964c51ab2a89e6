from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prelie_hopf.algebra import (
    LinearCombination,
    TensorCombination,
    format_combination,
    iterate_coproduct,
    scalar,
    tensor,
)
from prelie_hopf.symmetric import unshuffle
from prelie_hopf.trees import Forest, parse_forest


def lc(**terms):
    return LinearCombination(terms)


def test_scalar_normalizes_integral_fractions():
    assert scalar(Fraction(4, 2)) == 2 and type(scalar(Fraction(4, 2))) is int
    assert scalar("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        scalar(True)


def test_zero_terms_are_dropped():
    x = lc(a=1, b=2) - lc(a=1)
    assert dict(x.items()) == {"b": 2}
    assert (x - x) == 0 and not (x - x)
    assert str(x - x) == "0"


def test_fraction_arithmetic_is_exact():
    x = Fraction(1, 3) * lc(a=1) + Fraction(2, 3) * lc(a=1)
    assert x["a"] == 1 and type(x["a"]) is int


def test_formatting_of_signs_and_rationals():
    x = LinearCombination({parse_forest("a[a]"): 2, parse_forest("a a"): Fraction(-1, 2)})
    assert str(x) == "2 a[a] - 1/2 a a"
    assert str(-x) == "-2 a[a] + 1/2 a a"


def test_tensor_formatting_omits_unit_coefficients():
    t = tensor(LinearCombination({parse_forest("a"): 1}), LinearCombination({parse_forest("a"): 3}))
    assert isinstance(t, TensorCombination)
    assert str(t) == "3 a⊗a"
    assert format_combination(t, tensor=True) == "3 a⊗a"


def test_iterated_coproduct_is_coassociative_count():
    A = LinearCombination({parse_forest("a b c"): 1})
    three = iterate_coproduct(unshuffle, A, 3)
    assert sum(c for _, c in three.items()) == 27
    assert iterate_coproduct(unshuffle, A, 1) == A
    with pytest.raises(ValueError):
        iterate_coproduct(unshuffle, A, 0)


coefs = st.fractions(max_denominator=7).map(scalar)
combos = st.dictionaries(st.sampled_from("abcd"), coefs, max_size=4).map(LinearCombination)


@given(combos, combos, combos, coefs, coefs)
def test_vector_space_laws(x, y, z, p, q):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x - x == 0
    assert p * (x + y) == p * x + p * y
    assert (p + q) * x == p * x + q * x
    assert hash(x + y) == hash(y + x)


@given(combos)
def test_map_basis_identity(x):
    assert x.map_basis(lambda b: b) == x
    assert x.apply(lambda b: LinearCombination({b: 2})) == 2 * x


def test_unit_forest_prints_as_one():
    assert str(Forest()) == "1"
    assert str(LinearCombination({Forest(): 1})) == "1 1"
