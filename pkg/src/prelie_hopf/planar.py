"""Colored planar rooted trees, their sectors and the grafting braces.

A sector ``(v, i)`` of the vertex with preorder index ``v`` is the slot
immediately left of its i-th upgoing edge when ``i < arity``, and the
rightmost slot ``∞_v`` when ``i == arity``.  Sectors are ordered by the
left-to-right rooted-path order of the tree obtained by drawing every
sector as an extra leaf edge, which is a depth-first walk that lists the
slot left of each edge before descending through that edge.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .algebra import LinearCombination
from .trees import ParseError, _parse_trees, check_color


class PlanarTree:
    """Rooted tree whose children are totally ordered; equality is structural."""

    __slots__ = ("color", "children", "encoding", "size", "_hash")

    def __init__(self, color: str, children: Iterable["PlanarTree"] = ()):
        children = tuple(children)
        self.color = color
        self.children = children
        if children:
            self.encoding = color + "[" + " ".join(c.encoding for c in children) + "]"
        else:
            self.encoding = color
        self.size = 1 + sum(c.size for c in children)
        self._hash = hash(("planar", self.encoding))

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, PlanarTree) and self.encoding == other.encoding)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "PlanarTree") -> bool:
        return self.encoding < other.encoding

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return self.encoding

    def __repr__(self) -> str:
        return f"PlanarTree({self.encoding!r})"

    def sort_key(self):
        return (-self.size, 1, (self.encoding,))

    def vertices(self):
        yield self
        for c in self.children:
            yield from c.vertices()


class Word:
    """Ordered word of basis elements: a monomial of the tensor algebra."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable = ()):
        self.letters = tuple(letters)
        self._hash = hash(("word", self.letters))

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx])
        return self.letters[idx]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    @property
    def factors(self) -> tuple:
        return self.letters

    @property
    def degree(self) -> int:
        return sum(getattr(x, "size", 1) for x in self.letters)

    def sort_key(self):
        return (-self.degree, len(self.letters), tuple(str(x) for x in self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else "1"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY_WORD = Word()


def parse_planar_tree(text: str) -> PlanarTree:
    word = parse_planar_forest(text)
    if len(word) != 1:
        raise ParseError(f"expected exactly one tree, got {len(word)}", 0)
    return word[0]


def parse_planar_forest(text: str) -> Word:
    """Parse trees in the shared grammar keeping children in written order."""
    if text.strip() == "1":
        return EMPTY_WORD
    trees, _ = _parse_trees(text, 0, PlanarTree, False)
    return Word(trees)


# -- sectors -----------------------------------------------------------------------

class Sector(NamedTuple):
    vertex: int
    slot: int


def _arities(T: PlanarTree) -> list[int]:
    return [len(v.children) for v in T.vertices()]


def sector_list(T: PlanarTree) -> list[Sector]:
    """All ``2|T| - 1`` sectors in increasing order."""
    out: list[Sector] = []
    counter = itertools.count()

    def walk(t: PlanarTree) -> None:
        v = next(counter)
        for i, c in enumerate(t.children):
            out.append(Sector(v, i))
            walk(c)
        out.append(Sector(v, len(t.children)))

    walk(T)
    return out


def _sector_path(T: PlanarTree, s: Sector) -> tuple:
    # edge positions from the root in the sector-augmented tree: at a vertex of
    # arity k the upgoing edges are ordered slot0 < e0 < slot1 < e1 < ... < ∞
    arities = _arities(T)
    if not 0 <= s.vertex < len(arities) or not 0 <= s.slot <= arities[s.vertex]:
        raise ValueError(f"invalid sector {tuple(s)} for tree {T}")
    path: list[int] = []
    t, v = T, 0
    while v != s.vertex:
        nxt = v + 1
        for i, c in enumerate(t.children):
            if nxt <= s.vertex < nxt + c.size:
                path.append(2 * i + 1)
                t, v = c, nxt
                break
            nxt += c.size
    path.append(2 * s.slot)
    return tuple(path)


def _path_leq(l: tuple, m: tuple) -> bool:
    if len(l) <= len(m) and m[: len(l)] == l:
        return True
    for a, b in zip(l, m):
        if a != b:
            return a < b
    return False


def sector_compare(T: PlanarTree, s1: Sector, s2: Sector) -> int:
    """-1, 0 or 1 following the left-to-right rooted-path order."""
    l, m = _sector_path(T, s1), _sector_path(T, s2)
    if l == m:
        return 0
    return -1 if _path_leq(l, m) else 1


# -- grafting ------------------------------------------------------------------------

def graft_sector(T: PlanarTree, s: Sector, W: Sequence[PlanarTree]) -> PlanarTree:
    """Attach the trees of ``W`` (in order) to the sector's vertex at its slot."""
    arities = _arities(T)
    if not 0 <= s.vertex < len(arities) or not 0 <= s.slot <= arities[s.vertex]:
        raise ValueError(f"invalid sector {tuple(s)} for tree {T}")
    return _graft_fibers(T, {s: tuple(W)})


def _graft_fibers(T: PlanarTree, fibers: dict) -> PlanarTree:
    counter = itertools.count()

    def build(t: PlanarTree) -> PlanarTree:
        v = next(counter)
        kids: list = []
        for i, c in enumerate(t.children):
            kids.extend(fibers.get((v, i), ()))
            kids.append(build(c))
        kids.extend(fibers.get((v, len(t.children)), ()))
        return PlanarTree(t.color, kids)

    return build(T)


def graft_along(T: PlanarTree, f: Sequence[Sector], W: Sequence[PlanarTree]) -> PlanarTree:
    """``T ∘_f W`` for a non-decreasing map ``f`` from word positions to sectors."""
    fibers: dict = {}
    for s, t in zip(f, W):
        fibers.setdefault(s, []).append(t)
    return _graft_fibers(T, {s: tuple(ts) for s, ts in fibers.items()})


def planar_brace(T: PlanarTree, W) -> LinearCombination:
    """``T{T1⋯Tn}``: sum of graftings over non-decreasing maps into the sectors."""
    return _planar_brace(T, W if isinstance(W, Word) else Word(W))


@lru_cache(maxsize=1 << 16)
def _planar_brace(T: PlanarTree, W: Word) -> LinearCombination:
    if not W.letters:
        return LinearCombination._trusted({T: 1})
    sectors = sector_list(T)
    acc = Counter(
        graft_along(T, f, W.letters)
        for f in itertools.combinations_with_replacement(sectors, len(W))
    )
    return LinearCombination._trusted(dict(acc))


def brace_term_count(T: PlanarTree, n: int) -> int:
    """Number of graftings (with multiplicity) in ``T{T1⋯Tn}``."""
    return comb(2 * T.size - 1 + n - 1, n)


# -- enumeration ------------------------------------------------------------------

def enumerate_planar(n: int, colors: Iterable[str] = ("a",)) -> list[PlanarTree]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_planar(n, tuple(sorted(set(check_color(c) for c in colors)))))


def enumerate_planar_words(n: int, colors: Iterable[str] = ("a",)) -> list[Word]:
    """All words of planar trees with total vertex count ``n``."""
    cols = tuple(sorted(set(colors)))
    return [Word(w) for w in _planar_words(n, cols)]


@lru_cache(maxsize=None)
def _planar(n: int, colors: tuple) -> tuple:
    return tuple(PlanarTree(x, w) for x in colors for w in _planar_words(n - 1, colors))


@lru_cache(maxsize=None)
def _planar_words(n: int, colors: tuple) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for t in _planar(first, colors):
            for rest in _planar_words(n - first, colors):
                out.append((t,) + rest)
    return tuple(out)
