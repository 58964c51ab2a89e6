"""Brute-force reference implementations used only by the tests.

These work on labeled vertex sets (parent arrays) instead of recursive
canonical trees, so they share no code path with the library.
"""
from __future__ import annotations

import itertools
from collections import Counter

from prelie_hopf.algebra import LinearCombination
from prelie_hopf.planar import PlanarTree, Word
from prelie_hopf.trees import Forest, RootedTree


def parent_arrays(n: int):
    """All parent arrays with ``parent[0] = -1`` and ``parent[i] < i``."""
    for rest in itertools.product(*[range(i) for i in range(1, n)]):
        yield (-1,) + rest


def build(parent, colors, cls=RootedTree):
    n = len(parent)
    kids = [[] for _ in range(n)]
    for i in range(1, n):
        kids[parent[i]].append(i)

    def rec(v):
        return cls(colors[v], [rec(c) for c in kids[v]])

    return rec(0)


def labeled_trees(n: int, colors=("a",)) -> set:
    out = set()
    for parent in parent_arrays(n):
        for coloring in itertools.product(colors, repeat=n):
            out.add(build(parent, coloring))
    return out


def labeled_planar(n: int, colors=("a",)) -> set:
    # children are ordered by label; every planar tree arises from its preorder labeling
    out = set()
    for parent in parent_arrays(n):
        for coloring in itertools.product(colors, repeat=n):
            out.add(build(parent, coloring, PlanarTree))
    return out


def to_parent_array(T):
    parent, colors = [], []

    def walk(t, p):
        v = len(parent)
        parent.append(p)
        colors.append(t.color)
        for c in t.children:
            walk(c, v)

    walk(T, -1)
    return parent, colors


def automorphisms(T: RootedTree) -> int:
    """Vertex permutations preserving root, parent relation and colors."""
    parent, colors = to_parent_array(T)
    n = len(parent)
    count = 0
    for perm in itertools.permutations(range(n)):
        if perm[0] != 0:
            continue
        if all(colors[perm[i]] == colors[i] for i in range(n)) and all(
            parent[i] == -1 or perm[parent[i]] == parent[perm[i]] for i in range(n)
        ):
            count += 1
    return count


def forest_symmetry(F: Forest) -> int:
    value = 1
    for t, m in F.multiplicities().items():
        value *= automorphisms(t) ** m
        for k in range(2, m + 1):
            value *= k
    return value


def _forest_from_vertices(parent, colors, keep) -> Forest:
    keep = set(keep)
    kids = {v: [] for v in keep}
    roots = []
    for v in sorted(keep):
        if parent[v] in keep:
            kids[parent[v]].append(v)
        else:
            roots.append(v)

    def rec(v):
        return RootedTree(colors[v], [rec(c) for c in kids[v]])

    return Forest([rec(r) for r in roots])


def edge_cut_coproduct(F: Forest) -> LinearCombination:
    """Admissible cuts as edge sets meeting each root-to-leaf path at most once.

    Returns a combination over pairs (pruned forest, trunk), including the
    total cut (everything pruned) and the empty cut.
    """
    acc: Counter = Counter()
    pieces = [to_parent_array(t) for t in F.factors]
    per_tree = []
    for parent, colors in pieces:
        n = len(parent)
        edges = list(range(1, n))  # edge i joins i to parent[i]
        options = []
        for k in range(len(edges) + 1):
            for cut in itertools.combinations(edges, k):
                if any(_is_ancestor(parent, a, b) for a in cut for b in cut if a != b):
                    continue
                below = set()
                for e in cut:
                    below |= _subtree(parent, e)
                trunk = [v for v in range(n) if v not in below]
                options.append((_forest_from_vertices(parent, colors, below), _forest_from_vertices(parent, colors, trunk)))
        options.append((_forest_from_vertices(parent, colors, range(n)), Forest()))
        per_tree.append(options)
    for combo in itertools.product(*per_tree):
        pruned = Forest([t for p, _ in combo for t in p.factors])
        trunk = Forest([t for _, r in combo for t in r.factors])
        acc[(pruned, trunk)] += 1
    return LinearCombination(acc)


def _is_ancestor(parent, a, b) -> bool:
    v = parent[b]
    while v != -1:
        if v == a:
            return True
        v = parent[v]
    return False


def _subtree(parent, root) -> set:
    out = {root}
    changed = True
    while changed:
        changed = False
        for v in range(len(parent)):
            if v not in out and parent[v] in out:
                out.add(v)
                changed = True
    return out


def planar_brace_by_insertion(T: PlanarTree, W) -> Counter:
    """``T{W}`` by explicit insertion positions in the preorder child lists.

    A grafting is a weakly increasing assignment of the letters of ``W`` to the
    positions ``(vertex, gap)``; gaps are walked in depth-first order with the
    gap before each child listed before that child's own gaps.
    """
    parent, colors = to_parent_array(T)
    n = len(parent)
    kids = [[] for _ in range(n)]
    for i in range(1, n):
        kids[parent[i]].append(i)
    gaps = []

    def walk(v):
        for g, c in enumerate(kids[v]):
            gaps.append((v, g))
            walk(c)
        gaps.append((v, len(kids[v])))

    walk(0)
    out: Counter = Counter()
    letters = list(W)
    for choice in itertools.combinations_with_replacement(range(len(gaps)), len(letters)):
        inserted = {}
        for idx, t in zip(choice, letters):
            inserted.setdefault(gaps[idx], []).append(t)

        def rec(v):
            children = []
            for g, c in enumerate(kids[v]):
                children.extend(inserted.get((v, g), []))
                children.append(rec(c))
            children.extend(inserted.get((v, len(kids[v])), []))
            return PlanarTree(colors[v], children)

        out[rec(0)] += 1
    return out


def shuffles(A: Word, B: Word) -> Counter:
    out: Counter = Counter()
    n, m = len(A), len(B)
    for mask in itertools.product((0, 1), repeat=n + m):
        if sum(mask) != n:
            continue
        ia, ib = iter(A), iter(B)
        out[Word(next(ia) if bit else next(ib) for bit in mask)] += 1
    return out
