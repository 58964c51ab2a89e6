"""The tensor coalgebra T(V) of a brace algebra V: deconcatenation, the star
product, and Foissy's coproduct on words of planar trees."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Protocol

from .algebra import (
    LinearCombination,
    TensorCombination,
    add_scaled,
    add_term,
    componentwise,
    normalized,
)
from .planar import EMPTY_WORD, PlanarTree, Word, planar_brace


class BraceAlgebra(Protocol):
    def brace(self, x, word: Word) -> LinearCombination: ...


class PlanarBraces:
    """Braces on colored planar rooted trees given by sector grafting."""

    def brace(self, x: PlanarTree, word: Word) -> LinearCombination:
        return planar_brace(x, word)


class ZeroBraces:
    """``X{1} = X`` and every other brace zero; the star product is then the
    shuffle product of words."""

    def brace(self, x, word: Word) -> LinearCombination:
        if word.letters:
            return LinearCombination.zero()
        return LinearCombination._trusted({x: 1})


def deconcat(A: Word) -> TensorCombination:
    """``Δ(X1⋯Xn) = sum_i X1⋯Xi ⊗ Xi+1⋯Xn``."""
    return TensorCombination._trusted({(A[:i], A[i:]): 1 for i in range(len(A) + 1)})


def _splits(n: int, parts: int):
    # non-decreasing cut positions 0 <= c1 <= ... <= c_{parts-1} <= n
    for cuts in itertools.combinations_with_replacement(range(n + 1), parts - 1):
        yield (0,) + cuts + (n,)


def counit(A: Word) -> int:
    return 0 if A.letters else 1


def concat(A: LinearCombination, B: LinearCombination) -> LinearCombination:
    acc: dict = {}
    for a, ca in A.items():
        for b, cb in B.items():
            add_term(acc, a + b, ca * cb)
    return normalized(acc)


class TensorHopf:
    """Star product, coproduct and antipode on T(V) for a brace algebra V."""

    def __init__(self, V: BraceAlgebra):
        self.V = V
        self.star_word = lru_cache(maxsize=None)(self._star_word)
        self.antipode_word = lru_cache(maxsize=None)(self._antipode_word)

    deconcat = staticmethod(deconcat)
    counit = staticmethod(counit)

    def coproduct(self, A: LinearCombination) -> TensorCombination:
        acc: dict = {}
        for w, c in A.items():
            add_scaled(acc, deconcat(w), c)
        return normalized(acc, TensorCombination)

    def brace(self, X: LinearCombination, A: LinearCombination) -> LinearCombination:
        """``X{A}`` extended linearly in both arguments."""
        acc: dict = {}
        for x, cx in X.items():
            for w, cw in A.items():
                add_scaled(acc, self.V.brace(x, w), cx * cw)
        return normalized(acc)

    def _star_word(self, A: Word, B: Word) -> LinearCombination:
        # 1*B = B ; XA*B = B(1) X{B(2)} (A*B(3))
        if not A.letters:
            return LinearCombination._trusted({B: 1})
        X, rest = A.letters[0], Word(A.letters[1:])
        acc: dict = {}
        n = len(B)
        for _, i, j, _ in _splits(n, 3):
            head = B[:i]
            braced = self.V.brace(X, B[i:j])
            if not braced:
                continue
            tail = self.star_word(rest, B[j:])
            for y, cy in braced.items():
                middle = head + Word((y,))
                for w, cw in tail.items():
                    add_term(acc, middle + w, cy * cw)
        return normalized(acc)

    def star(self, A: LinearCombination, B: LinearCombination) -> LinearCombination:
        acc: dict = {}
        for a, ca in A.items():
            for b, cb in B.items():
                add_scaled(acc, self.star_word(a, b), ca * cb)
        return normalized(acc)

    def star_closed(self, A: Word, B: Word) -> LinearCombination:
        """``X1⋯Xn * B = B(1) X1{B(2)} B(3) ⋯ Xn{B(2n)} B(2n+1)`` evaluated directly."""
        n = len(A)
        acc: dict = {}
        for cuts in _splits(len(B), 2 * n + 1):
            pieces = [B[cuts[k]:cuts[k + 1]] for k in range(2 * n + 1)]
            partial = {pieces[0]: 1}
            for idx, X in enumerate(A.letters):
                braced = self.V.brace(X, pieces[2 * idx + 1])
                after = pieces[2 * idx + 2]
                nxt: dict = {}
                for w, c in partial.items():
                    for y, cy in braced.items():
                        add_term(nxt, w + Word((y,)) + after, c * cy)
                partial = nxt
                if not partial:
                    break
            for w, c in partial.items():
                add_term(acc, w, c)
        return normalized(acc)

    def brace_composition_check(self, X, B: Word, C: Word) -> bool:
        """``X{B}{C} == X{B*C}``."""
        X_ = LinearCombination._trusted({X: 1})
        lhs = self.brace(self.brace(X_, LinearCombination._trusted({B: 1})), LinearCombination._trusted({C: 1}))
        rhs = self.brace(X_, self.star_word(B, C))
        return lhs == rhs

    def _antipode_word(self, A: Word) -> LinearCombination:
        # S(A) = ε(A) − sum_{A(1) ≠ A} S(A(1)) * A(2)
        if not A.letters:
            return LinearCombination._trusted({EMPTY_WORD: 1})
        acc: dict = {}
        for i in range(len(A)):
            for w, c in self.antipode_word(A[:i]).items():
                add_scaled(acc, self.star_word(w, A[i:]), -c)
        return normalized(acc)

    def antipode(self, A: LinearCombination) -> LinearCombination:
        return A.apply(self.antipode_word)


# -- Foissy's coproduct ------------------------------------------------------------

def b_planar_plus(x: str, W: Word) -> PlanarTree:
    return PlanarTree(x, W.letters)


def b_planar_minus(A: LinearCombination, x: str) -> LinearCombination:
    """Child word of a single ``x``-rooted tree; zero on other monomials."""
    acc: dict = {}
    for w, c in A.items():
        if len(w) == 1 and w[0].color == x:
            add_term(acc, Word(w[0].children), c)
    return normalized(acc)


def _concat_words(a: Word, b: Word) -> LinearCombination:
    return LinearCombination._trusted({a + b: 1})


def foissy_coproduct(A: Word) -> TensorCombination:
    """``Δ B_x+ = B_x+ ⊗ 1 + (1 ⊗ B_x+) Δ``, multiplicative for concatenation."""
    return _foissy_word(A)


@lru_cache(maxsize=None)
def _foissy_word(A: Word) -> TensorCombination:
    result = TensorCombination._trusted({(EMPTY_WORD, EMPTY_WORD): 1})
    for t in A.letters:
        result = componentwise(_concat_words, result, _foissy_tree(t))
    return result


@lru_cache(maxsize=None)
def _foissy_tree(t: PlanarTree) -> TensorCombination:
    acc: dict = {(Word((t,)), EMPTY_WORD): 1}
    for (left, right), c in _foissy_word(Word(t.children)).items():
        add_term(acc, (left, Word((b_planar_plus(t.color, right),))), c)
    return TensorCombination._trusted(acc)


def b_minus_identity_holds(H: TensorHopf, A: Word, B: Word, colors: Iterable[str]) -> bool:
    """``B_x−(A*B) = ε(A) B_x−(B) + B_x−(A)*B`` for every color ``x``."""
    A_ = LinearCombination._trusted({A: 1})
    B_ = LinearCombination._trusted({B: 1})
    prod = H.star_word(A, B)
    for x in colors:
        lhs = b_planar_minus(prod, x)
        rhs = counit(A) * b_planar_minus(B_, x) + H.star(b_planar_minus(A_, x), B_)
        if lhs != rhs:
            return False
    return True
