"""Connes-Kreimer coproduct on forests and its duality with the star product."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import LinearCombination, TensorCombination, add_term, componentwise, normalized
from .prelie import FreePreLie
from .symmetric import SymmetricHopf
from .trees import UNIT, Forest, RootedTree, enumerate_forests, symmetry_factor

PAIRINGS = ("plain-delta", "delta-times-symmetry-factor")


def b_plus(x: str, F: Forest) -> RootedTree:
    """Add an ``x``-colored root below the trees of ``F``."""
    return RootedTree(x, F.factors)


def b_minus(A: LinearCombination, x: str | None = None) -> LinearCombination:
    """Transpose of ``b_plus``: a single tree rooted in color ``x`` maps to its
    branch forest, every other monomial to zero.  ``x=None`` accepts any root
    color (the uncolored operator)."""
    acc: dict = {}
    for mono, c in A.items():
        if len(mono) != 1:
            continue
        t = mono.factors[0]
        if x is None or t.color == x:
            add_term(acc, Forest._sorted(t.children), c)
    return normalized(acc)


def _forest_mul(F: Forest, G: Forest) -> LinearCombination:
    return LinearCombination._trusted({F * G: 1})


def ck_coproduct(A: Forest) -> TensorCombination:
    """Connes-Kreimer coproduct via ``Δ B+ = B+ ⊗ 1 + (1 ⊗ B+) Δ``, multiplicative
    on forests."""
    return _ck_forest(A)


@lru_cache(maxsize=None)
def _ck_forest(A: Forest) -> TensorCombination:
    result = TensorCombination._trusted({(UNIT, UNIT): 1})
    for t in A.factors:
        result = componentwise(_forest_mul, result, _ck_tree(t))
    return result


@lru_cache(maxsize=None)
def _ck_tree(t: RootedTree) -> TensorCombination:
    acc: dict = {(Forest._sorted((t,)), UNIT): 1}
    for (left, right), c in _ck_forest(Forest._sorted(t.children)).items():
        add_term(acc, (left, Forest._sorted((b_plus(t.color, right),))), c)
    return TensorCombination._trusted(acc)


def ck_coproduct_cuts(A: Forest) -> TensorCombination:
    """Independent coproduct: sum over descendant-closed vertex sets ``P`` of
    ``(forest on P) ⊗ (forest on the rest)``.

    Descendant-closed sets are exactly the admissible cuts (including the
    empty and the total cut) of every tree of the forest simultaneously.
    """
    # flatten: vertex i has color[i], parent[i] (-1 for roots)
    color: list[str] = []
    parent: list[int] = []

    def walk(t: RootedTree, p: int) -> None:
        me = len(color)
        color.append(t.color)
        parent.append(p)
        for c in t.children:
            walk(c, me)

    for t in A.factors:
        walk(t, -1)
    n = len(color)
    acc: dict = {}
    for mask in range(1 << n):
        inside = [bool(mask >> i & 1) for i in range(n)]
        if any(inside[parent[i]] and not inside[i] for i in range(n) if parent[i] >= 0):
            continue
        pruned = _induced_forest(color, parent, inside)
        trunk = _induced_forest(color, parent, [not b for b in inside])
        add_term(acc, (pruned, trunk), 1)
    return TensorCombination._trusted(acc)


def _induced_forest(color, parent, keep) -> Forest:
    kids: dict = {i: [] for i in range(len(color)) if keep[i]}
    roots = []
    for i in kids:
        p = parent[i]
        if p >= 0 and keep[p]:
            kids[p].append(i)
        else:
            roots.append(i)

    def build(i):
        return RootedTree(color[i], [build(j) for j in kids[i]])

    return Forest(build(i) for i in roots)


def counit(A: Forest) -> int:
    return 1 if not A.factors else 0


# -- duality ---------------------------------------------------------------------

@dataclass
class DualityReport:
    variant: str
    cap: int
    checked: int = 0
    counterexample: tuple | None = None
    passed: bool = field(init=False, default=True)

    def fail(self, example: tuple) -> None:
        self.passed = False
        if self.counterexample is None:
            self.counterexample = example


def _weight(variant: str):
    if variant == "plain-delta":
        return lambda F: 1
    if variant == "delta-times-symmetry-factor":
        return symmetry_factor
    raise ValueError(f"unknown pairing variant {variant!r}")


def duality_check(degree_cap: int, variant: str, colors: Iterable[str] = ("a",), S: SymmetricHopf | None = None) -> DualityReport:
    """Compare ``<Δ_CK(C), A⊗B> = <C, B*A>`` for every forest triple of total
    degree ``<= degree_cap`` under the pairing ``<F, G> = δ_{F,G} w(F)``."""
    w = _weight(variant)
    colors = tuple(colors)
    if S is None:
        S = SymmetricHopf(FreePreLie(colors))
    report = DualityReport(variant, degree_cap)
    by_degree = [enumerate_forests(d, colors) for d in range(degree_cap + 1)]
    for d in range(degree_cap + 1):
        # lhs[(A, B)][C] from the coproducts of all degree-d forests
        lhs: dict = {}
        for C in by_degree[d]:
            for (A, B), c in ck_coproduct(C).items():
                lhs.setdefault((A, B), {})[C] = c * w(A) * w(B)
        for k in range(d + 1):
            for A in by_degree[k]:
                for B in by_degree[d - k]:
                    prod = S.star_monomial(B, A)
                    rhs = {C: c * w(C) for C, c in prod.items()}
                    report.checked += 1
                    if lhs.get((A, B), {}) != rhs:
                        report.fail((A, B))
    return report


def b_minus_identity_holds(S: SymmetricHopf, A: Forest, B: Forest, colors: Iterable[str]) -> bool:
    """``B−(A*B) = ε(A) B−(B) + B−(A)*B`` for every root color."""
    A_ = LinearCombination._trusted({A: 1})
    B_ = LinearCombination._trusted({B: 1})
    prod = S.star_monomial(A, B)
    for x in colors:
        lhs = b_minus(prod, x)
        rhs = counit(A) * b_minus(B_, x) + S.star(b_minus(A_, x), B_)
        if lhs != rhs:
            return False
    return True


def matching_pairings(cap: int, colors: Iterable[str] = ("a",)) -> list[str]:
    return [v for v in PAIRINGS if duality_check(cap, v, colors).passed]
