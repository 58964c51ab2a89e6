"""The symmetric coalgebra S(L) of a pre-Lie algebra L with its circle and star
products.

Monomials are :class:`~prelie_hopf.trees.Forest` values (sorted multisets of
basis elements of ``L``); elements are LinearCombinations of monomials.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from .algebra import (
    LinearCombination,
    TensorCombination,
    add_scaled,
    add_term,
    normalized,
)
from .trees import UNIT, Forest


def unshuffle(A: Forest) -> TensorCombination:
    """Shuffle coproduct of a monomial: sub-multisets with binomial weights."""
    return _unshuffle(A)


@lru_cache(maxsize=1 << 16)
def _unshuffle(A: Forest) -> TensorCombination:
    groups = list(A.multiplicities().items())
    acc: dict = {}
    for picks in itertools.product(*(range(m + 1) for _, m in groups)):
        left, right, c = [], [], 1
        for (x, m), k in zip(groups, picks):
            left += [x] * k
            right += [x] * (m - k)
            c *= comb(m, k)
        acc[(Forest(left), Forest(right))] = c
    return TensorCombination._trusted(acc)


def unshuffle_by_subsets(A: Forest) -> TensorCombination:
    """Reference coproduct summing over all subsets of factor positions."""
    acc: dict = {}
    n = len(A)
    for mask in range(1 << n):
        left = [x for i, x in enumerate(A.factors) if mask >> i & 1]
        right = [x for i, x in enumerate(A.factors) if not mask >> i & 1]
        add_term(acc, (Forest(left), Forest(right)), 1)
    return TensorCombination._trusted(acc)


def counit(A: LinearCombination):
    return A[UNIT]


def _monomial_product(A: LinearCombination, B: LinearCombination) -> LinearCombination:
    acc: dict = {}
    for a, ca in A.items():
        for b, cb in B.items():
            add_term(acc, a * b, ca * cb)
    return normalized(acc)


class SymmetricHopf:
    """Circle product, star product and antipode on S(L) for a pre-Lie ``L``.

    All basis-level results are cached with :func:`functools.lru_cache`, which
    is safe to share between threads.
    """

    def __init__(self, L):
        self.L = L
        self.circle_single = lru_cache(maxsize=None)(self._circle_single)
        self.circle_monomial = lru_cache(maxsize=None)(self._circle_monomial)
        self.star_monomial = lru_cache(maxsize=None)(self._star_monomial)
        self.antipode_monomial = lru_cache(maxsize=None)(self._antipode_monomial)

    # -- coalgebra -----------------------------------------------------------
    unshuffle = staticmethod(unshuffle)
    counit = staticmethod(counit)

    def coproduct(self, A: LinearCombination) -> TensorCombination:
        acc: dict = {}
        for a, c in A.items():
            add_scaled(acc, unshuffle(a), c)
        return normalized(acc, TensorCombination)

    def unit_element(self) -> LinearCombination:
        return LinearCombination._trusted({UNIT: 1})

    def embed(self, X: LinearCombination) -> LinearCombination:
        """View a combination of basis elements as length-one monomials."""
        return X.map_basis(lambda x: Forest._sorted((x,)))

    product = staticmethod(_monomial_product)

    # -- circle ------------------------------------------------------------------
    def right_action(self, A: Forest, T) -> LinearCombination:
        """``(X1⋯Xn)∘T = sum_i X1⋯(Xi∘T)⋯Xn``; zero on the unit."""
        acc: dict = {}
        f = A.factors
        for i, x in enumerate(f):
            rest = f[:i] + f[i + 1:]
            for y, c in self.L.circle(x, T).items():
                add_term(acc, Forest(rest + (y,)), c)
        return normalized(acc)

    def _circle_single(self, T, A: Forest) -> LinearCombination:
        # T∘1 = T ; T∘(BX) = (T∘B)∘X − T∘(B∘X) with X the largest factor
        if not A.factors:
            return LinearCombination._trusted({T: 1})
        X = A.factors[-1]
        B = Forest._sorted(A.factors[:-1])
        acc: dict = {}
        for y, c in self.circle_single(T, B).items():
            add_scaled(acc, self.L.circle(y, X), c)
        for mono, c in self.right_action(B, X).items():
            add_scaled(acc, self.circle_single(T, mono), -c)
        return normalized(acc)

    def circle_single_with_order(self, T, factors) -> LinearCombination:
        """Def-style recursion peeling factors in the given order (last first).

        Used to check that the result does not depend on the factor order.
        """
        if not factors:
            return LinearCombination._trusted({T: 1})
        X = factors[-1]
        B = list(factors[:-1])
        acc: dict = {}
        for y, c in self.circle_single_with_order(T, B).items():
            add_scaled(acc, self.L.circle(y, X), c)
        for i, x in enumerate(B):
            for z, cz in self.L.circle(x, X).items():
                add_scaled(acc, self.circle_single_with_order(T, B[:i] + [z] + B[i + 1:]), -cz)
        return normalized(acc)

    def symmetric_brace(self, X, A: Forest) -> LinearCombination:
        """``X{A}``; for a pre-Lie algebra this is ``X∘A``."""
        return self.circle_single(X, A)

    def _circle_monomial(self, A: Forest, C: Forest) -> LinearCombination:
        # AB∘C = (A∘C(1))(B∘C(2)), 1∘C = ε(C)
        if not A.factors:
            return LinearCombination._trusted({UNIT: 1}) if not C.factors else LinearCombination.zero()
        if not C.factors:
            return LinearCombination._trusted({A: 1})
        T = A.factors[0]
        rest = Forest._sorted(A.factors[1:])
        acc: dict = {}
        for (C1, C2), c in unshuffle(C).items():
            head = self.circle_single(T, C1)
            if not head:
                continue
            tail = self.circle_monomial(rest, C2)
            for y, cy in head.items():
                for mono, cm in tail.items():
                    add_term(acc, mono.with_factor(y), c * cy * cm)
        return normalized(acc)

    def circle(self, A: LinearCombination, B: LinearCombination) -> LinearCombination:
        acc: dict = {}
        for a, ca in A.items():
            for b, cb in B.items():
                add_scaled(acc, self.circle_monomial(a, b), ca * cb)
        return normalized(acc)

    # -- star ----------------------------------------------------------------------
    def _star_monomial(self, A: Forest, B: Forest) -> LinearCombination:
        acc: dict = {}
        for (B1, B2), c in unshuffle(B).items():
            for mono, cm in self.circle_monomial(A, B1).items():
                add_term(acc, mono * B2, c * cm)
        return normalized(acc)

    def star(self, A: LinearCombination, B: LinearCombination) -> LinearCombination:
        acc: dict = {}
        for a, ca in A.items():
            for b, cb in B.items():
                add_scaled(acc, self.star_monomial(a, b), ca * cb)
        return normalized(acc)

    # -- antipode ------------------------------------------------------------------
    def _antipode_monomial(self, A: Forest) -> LinearCombination:
        # S(A) = ε(A) − sum_{A(1) ≠ A} S(A(1)) * A(2)
        if not A.factors:
            return LinearCombination._trusted({UNIT: 1})
        acc: dict = {}
        for (A1, A2), c in unshuffle(A).items():
            if not A2.factors:
                continue
            for mono, cm in self.antipode_monomial(A1).items():
                add_scaled(acc, self.star_monomial(mono, A2), -c * cm)
        return normalized(acc)

    def antipode(self, A: LinearCombination) -> LinearCombination:
        return A.apply(self.antipode_monomial)
