"""Colored unordered rooted trees, forests and their canonical text form.

A tree is stored in canonical form: children are sorted by their canonical
encoding ``color[enc(c1) enc(c2) ...]``, so two trees are isomorphic exactly
when their encodings coincide.  The encoding doubles as the text format.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

_COLOR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Syntax error in tree, forest or expression text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidVertexError(IndexError):
    pass


def check_color(color: str) -> str:
    if not isinstance(color, str) or not _COLOR_RE.match(color):
        raise ValueError(f"invalid color token: {color!r}")
    return color


class RootedTree:
    """Canonical colored rooted tree; hashing and ordering follow the encoding."""

    __slots__ = ("color", "children", "encoding", "size", "_hash")

    def __init__(self, color: str, children: Iterable["RootedTree"] = ()):
        children = tuple(sorted(children, key=_enc))
        self.color = color
        self.children = children
        if children:
            self.encoding = color + "[" + " ".join(c.encoding for c in children) + "]"
        else:
            self.encoding = color
        self.size = 1 + sum(c.size for c in children)
        self._hash = hash(self.encoding)

    @classmethod
    def _from_sorted(cls, color: str, children: tuple) -> "RootedTree":
        # children must already be in canonical (encoding) order
        obj = cls.__new__(cls)
        obj.color = color
        obj.children = children
        obj.encoding = color + "[" + " ".join([c.encoding for c in children]) + "]" if children else color
        obj.size = 1 + sum([c.size for c in children])
        obj._hash = hash(obj.encoding)
        return obj

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, RootedTree) and self.encoding == other.encoding)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "RootedTree") -> bool:
        return self.encoding < other.encoding

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return self.encoding

    def __repr__(self) -> str:
        return f"RootedTree({self.encoding!r})"

    def sort_key(self):
        return (-self.size, 1, (self.encoding,))

    @property
    def branches(self) -> "Forest":
        return Forest(self.children)

    def vertices(self) -> Iterator["RootedTree"]:
        """Subtrees rooted at each vertex, in depth-first preorder."""
        yield self
        for c in self.children:
            yield from c.vertices()

    def colors(self) -> set[str]:
        return {v.color for v in self.vertices()}


def _enc(t) -> str:
    return t.encoding


def canonicalize(root_color: str, children: Sequence[RootedTree]) -> RootedTree:
    """Build the canonical tree with the given root color and branch multiset."""
    return RootedTree(check_color(root_color), children)


def leaf(color: str = "a") -> RootedTree:
    return RootedTree(color)


class Forest:
    """Sorted multiset of basis elements: a monomial of a symmetric algebra.

    For the free pre-Lie algebra the factors are rooted trees and the monomial
    is a forest; any hashable, totally ordered basis works.  The empty forest
    is the unit ``1``.
    """

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Iterable = ()):
        self.factors = tuple(sorted(factors))
        self._hash = hash(self.factors)

    @classmethod
    def _sorted(cls, factors: tuple) -> "Forest":
        obj = cls.__new__(cls)
        obj.factors = factors
        obj._hash = hash(factors)
        return obj

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.factors == other.factors

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Forest") -> bool:
        return self.sort_key() < other.sort_key()

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other: "Forest") -> "Forest":
        if not other.factors:
            return self
        if not self.factors:
            return other
        return Forest._sorted(tuple(sorted(self.factors + other.factors)))

    def with_factor(self, x) -> "Forest":
        return Forest._sorted(tuple(sorted(self.factors + (x,))))

    @property
    def degree(self) -> int:
        return sum(getattr(x, "size", 1) for x in self.factors)

    def multiplicities(self) -> Counter:
        return Counter(self.factors)

    def sort_key(self):
        return (-self.degree, len(self.factors), tuple(str(x) for x in self.factors))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.factors) if self.factors else "1"

    def __repr__(self) -> str:
        return f"Forest({str(self)!r})"


UNIT = Forest()


# -- grafting ------------------------------------------------------------------

def all_grafts(T1: RootedTree, T2: RootedTree) -> list[RootedTree]:
    """``T1 ∘_v T2`` for every vertex ``v`` of ``T1`` in preorder."""
    from ._kernels import all_grafts as kernel

    return kernel(T1, T2)


def graft_at(T1: RootedTree, v: int, T2: RootedTree) -> RootedTree:
    """Attach the root of ``T2`` as a new child of vertex ``v`` of ``T1``.

    ``v`` is the preorder index of a vertex in the canonical form of ``T1``.
    """
    if not 0 <= v < T1.size:
        raise InvalidVertexError(f"vertex {v} out of range for tree with {T1.size} vertices")
    return _graft_at(T1, v, T2)


def _graft_at(T: RootedTree, v: int, T2: RootedTree) -> RootedTree:
    if v == 0:
        return RootedTree(T.color, T.children + (T2,))
    v -= 1
    children = list(T.children)
    for i, c in enumerate(children):
        if v < c.size:
            children[i] = _graft_at(c, v, T2)
            return RootedTree(T.color, children)
        v -= c.size
    raise AssertionError("unreachable")


# -- enumeration -----------------------------------------------------------------

def enumerate_trees(n: int, colors: Iterable[str] = ("a",)) -> list[RootedTree]:
    """All canonical trees with ``n`` vertices, sorted by encoding."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_trees(n, tuple(sorted(set(colors)))))


def enumerate_forests(n: int, colors: Iterable[str] = ("a",)) -> list[Forest]:
    """All forests of total degree ``n`` (``n == 0`` gives the unit)."""
    cols = tuple(sorted(set(colors)))
    return [Forest(f) for f in _forests(n, cols, n)]


@lru_cache(maxsize=None)
def _trees(n: int, colors: tuple) -> tuple:
    out = [RootedTree(x, f) for x in colors for f in _forests(n - 1, colors, n - 1)]
    out.sort(key=_enc)
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(n: int, colors: tuple, max_size: int) -> tuple:
    # multisets of trees of total size n with every tree of size <= max_size,
    # generated with tree sizes non-increasing to avoid repeats
    if n == 0:
        return ((),)
    out = []
    for size in range(min(n, max_size), 0, -1):
        trees = _trees(size, colors)
        for idx, t in enumerate(trees):
            for rest in _forests(n - size, colors, size):
                # within equal sizes keep indices non-decreasing
                if rest and rest[0].size == size and _index(trees, rest[0]) < idx:
                    continue
                out.append((t,) + rest)
    return tuple(out)


def _index(trees: tuple, t: RootedTree) -> int:
    return _tree_index(trees)[t]


@lru_cache(maxsize=None)
def _tree_index(trees: tuple) -> dict:
    return {t: i for i, t in enumerate(trees)}


# -- symmetry ------------------------------------------------------------------

def symmetry_factor(F) -> int:
    """Order of the automorphism group of a tree or forest."""
    if isinstance(F, RootedTree):
        return _tree_symmetry(F)
    result = 1
    for t, m in Counter(F.factors).items():
        result *= _tree_symmetry(t) ** m * math.factorial(m)
    return result


@lru_cache(maxsize=None)
def _tree_symmetry(T: RootedTree) -> int:
    return symmetry_factor(Forest._sorted(T.children))


# -- text format -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\[)|(\]))")


def _parse_trees(text: str, pos: int, make, stop_at_bracket: bool):
    trees = []
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if stop_at_bracket:
                raise ParseError("unbalanced '['", pos)
            return trees, pos
        ch = text[pos]
        if ch == "]":
            if not stop_at_bracket:
                raise ParseError("unexpected ']'", pos)
            return trees, pos + 1
        m = _TOKEN_RE.match(text, pos)
        if not m or not m.group(1):
            raise ParseError(f"unknown token {ch!r}", pos)
        color = m.group(1)
        pos = m.end()
        children = []
        if pos < n and text[pos] == "[":
            children, pos = _parse_trees(text, pos + 1, make, True)
        trees.append(make(color, children))


def parse_tree(text: str) -> RootedTree:
    forest = parse_forest(text)
    if len(forest) != 1:
        raise ParseError(f"expected exactly one tree, got {len(forest)}", 0)
    return forest.factors[0]


def parse_forest(text: str) -> Forest:
    """Parse whitespace-separated trees such as ``"a[a b] c"``; ``""`` is the unit."""
    stripped = text.strip()
    if stripped == "1":
        return UNIT
    trees, _ = _parse_trees(text, 0, RootedTree, False)
    return Forest(trees)


def format_forest(F: Forest) -> str:
    return str(F)
