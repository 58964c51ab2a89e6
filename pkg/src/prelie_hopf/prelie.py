"""Pre-Lie algebras: the free one on colored rooted trees and finite-dimensional
ones given by structure constants."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Protocol, Sequence

from .algebra import LinearCombination, add_scaled, bilinear_extend, combine, normalized, scalar
from .trees import Forest, RootedTree, all_grafts, enumerate_trees


class PreLieStructure(Protocol):
    """Anything exposing a basis-level circle product."""

    def circle(self, x, y) -> LinearCombination: ...


def free_circle(T1: RootedTree, T2: RootedTree) -> LinearCombination:
    """Sum of ``T1 ∘_v T2`` over all vertices ``v`` of ``T1``."""
    return _free_circle(T1, T2)


@lru_cache(maxsize=1 << 18)
def _free_circle(T1, T2):
    return LinearCombination._trusted(dict(Counter(all_grafts(T1, T2))))


class FreePreLie:
    """The free pre-Lie algebra on a set of colors, with basis the rooted trees."""

    def __init__(self, colors: Iterable[str] = ("a",)):
        self.colors = tuple(sorted(set(colors)))

    def circle(self, x: RootedTree, y: RootedTree) -> LinearCombination:
        return _free_circle(x, y)

    def basis(self, degree: int) -> list[RootedTree]:
        return enumerate_trees(degree, self.colors)

    def __repr__(self) -> str:
        return f"FreePreLie(colors={self.colors!r})"


def corolla_graft(A: Forest, Ts: Sequence[RootedTree]) -> LinearCombination:
    """Sum over all n-tuples of vertices of ``A`` of the iterated graftings.

    Brute force: the tree ``T_i`` is attached at the i-th chosen vertex of the
    original forest, so grafted trees never receive later trees.
    """
    # flatten A into (tree index, preorder vertex) pairs
    positions = [(ti, v) for ti, t in enumerate(A.factors) for v in range(t.size)]
    acc: Counter = Counter()
    for choice in itertools.product(positions, repeat=len(Ts)):
        trees = [_Mutable.from_tree(t) for t in A.factors]
        for (ti, v), T in zip(choice, Ts):
            trees[ti].attach(v, T)
        acc[Forest(m.freeze() for m in trees)] += 1
    return LinearCombination._trusted(dict(acc))


class _Mutable:
    # preorder-indexed mutable copy used only by the brute-force grafting oracle
    __slots__ = ("color", "children", "extra")

    def __init__(self, color, children):
        self.color = color
        self.children = children
        self.extra: list = []

    @classmethod
    def from_tree(cls, t: RootedTree) -> "_Mutable":
        return cls(t.color, [cls.from_tree(c) for c in t.children])

    def preorder(self):
        yield self
        for c in self.children:
            yield from c.preorder()

    def attach(self, v: int, T: RootedTree) -> None:
        next(itertools.islice(self.preorder(), v, None)).extra.append(T)

    def freeze(self) -> RootedTree:
        return RootedTree(self.color, [c.freeze() for c in self.children] + self.extra)


def lie_bracket(L: PreLieStructure, X: LinearCombination, Y: LinearCombination) -> LinearCombination:
    """``[X, Y] = X∘Y − Y∘X``."""
    return combine(1, bilinear_extend(L.circle, X, Y), -1, bilinear_extend(L.circle, Y, X))


def associator(L: PreLieStructure, X, Y, Z) -> LinearCombination:
    """``X∘(Y∘Z) − (X∘Y)∘Z`` for combinations X, Y, Z."""
    c = L.circle
    return bilinear_extend(c, X, bilinear_extend(c, Y, Z)) - bilinear_extend(c, bilinear_extend(c, X, Y), Z)


def universal_morphism_apply(f: Mapping[str, LinearCombination], T: RootedTree, M: PreLieStructure, S=None) -> LinearCombination:
    """Value on ``T`` of the pre-Lie morphism from the free algebra extending ``f``.

    Uses ``φ(x[T1 … Tn]) = f(x) ∘ φ(T1)⋯φ(Tn)`` with the multi-argument circle
    of the symmetric algebra of ``M``; pass ``S`` to reuse its caches.
    """
    from .symmetric import SymmetricHopf

    if S is None:
        S = SymmetricHopf(M)
    memo: dict = {}

    def phi(t: RootedTree) -> LinearCombination:
        if t in memo:
            return memo[t]
        if t.color not in f:
            raise KeyError(f"unknown color {t.color!r}")
        branches = S.unit_element()
        for c in t.children:
            branches = S.product(branches, S.embed(phi(c)))
        acc: dict = {}
        for x, cx in f[t.color].items():
            for mono, cm in branches.items():
                add_scaled(acc, S.circle_single(x, mono), cx * cm)
        memo[t] = normalized(acc)
        return memo[t]

    return phi(T)


# -- structure constants -----------------------------------------------------------

@dataclass(frozen=True)
class StructureConstantPreLie:
    """``e_i ∘ e_j = sum_k constants[i][j][k] e_k`` with basis ``0..dimension-1``."""

    dimension: int
    constants: tuple

    def __post_init__(self):
        d = self.dimension
        table = tuple(tuple(tuple(scalar(v) for v in row) for row in plane) for plane in self.constants)
        if len(table) != d or any(len(p) != d or any(len(r) != d for r in p) for p in table):
            raise ValueError("structure constant table must be dimension^3")
        object.__setattr__(self, "constants", table)

    @classmethod
    def from_products(cls, dimension: int, products: Mapping[tuple, Mapping[int, object]]) -> "StructureConstantPreLie":
        """Build from sparse ``{(i, j): {k: c}}`` with 0-based indices."""
        table = [[[0] * dimension for _ in range(dimension)] for _ in range(dimension)]
        for (i, j), row in products.items():
            for k, c in row.items():
                table[i][j][k] = c
        return cls(dimension, table)

    def circle(self, i: int, j: int) -> LinearCombination:
        return LinearCombination._trusted({k: c for k, c in enumerate(self.constants[i][j]) if c})

    def basis(self, degree: int = 1) -> list[int]:
        return list(range(self.dimension)) if degree == 1 else []


def sc_prelie_check(S: StructureConstantPreLie):
    """Return ``None`` when the pre-Lie identity holds, else the first bad (i, j, k)."""
    d = S.dimension
    c = S.constants
    for i, j, k in itertools.product(range(d), repeat=3):
        # assoc(i,j,k)_m = sum_l c[j][k][l] c[i][l][m] - c[i][j][l] c[l][k][m]
        for m in range(d):
            a = sum(c[j][k][l] * c[i][l][m] - c[i][j][l] * c[l][k][m] for l in range(d))
            b = sum(c[k][j][l] * c[i][l][m] - c[i][k][l] * c[l][j][m] for l in range(d))
            if a != b:
                return (i, j, k)
    return None


def parse_structure_constants(text: str) -> StructureConstantPreLie:
    """Parse ``dim n`` followed by lines ``i j k num/den`` (1-based indices)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("dim"):
        raise ValueError("structure constants must start with 'dim n'")
    parts = lines[0].split()
    if len(parts) != 2:
        raise ValueError(f"bad header: {lines[0]!r}")
    d = int(parts[1])
    products: dict = {}
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 4:
            raise ValueError(f"bad structure constant line: {ln!r}")
        i, j, k = (int(x) - 1 for x in fields[:3])
        if not all(0 <= x < d for x in (i, j, k)):
            raise ValueError(f"index out of range in {ln!r}")
        products.setdefault((i, j), {})[k] = scalar(fields[3])
    return StructureConstantPreLie.from_products(d, products)


def format_structure_constants(S: StructureConstantPreLie) -> str:
    from .algebra import format_scalar

    lines = [f"dim {S.dimension}"]
    for i, j, k in itertools.product(range(S.dimension), repeat=3):
        c = S.constants[i][j][k]
        if c:
            lines.append(f"{i + 1} {j + 1} {k + 1} {format_scalar(c)}")
    return "\n".join(lines) + "\n"


ONE_DIM = StructureConstantPreLie(1, (((1,),),))
