"""Pure-Python implementations of the hot grafting kernels."""
from __future__ import annotations

from bisect import bisect_left

from .trees import RootedTree


def _insert(children: tuple, skip: int, g: RootedTree) -> tuple:
    # children without position ``skip``, plus ``g``, kept in encoding order
    rest = children[:skip] + children[skip + 1:]
    k = bisect_left([c.encoding for c in rest], g.encoding)
    return rest[:k] + (g,) + rest[k:]


def all_grafts(T1: RootedTree, T2: RootedTree) -> list:
    """Graft ``T2`` on every vertex of ``T1``; results listed in preorder."""
    make = RootedTree._from_sorted
    children = T1.children
    out = [make(T1.color, _insert(children + (T2,), len(children), T2))]
    for i, c in enumerate(children):
        for g in all_grafts(c, T2):
            out.append(make(T1.color, _insert(children, i, g)))
    return out
