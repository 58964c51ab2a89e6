"""Hypothesis strategies for trees, forests and words."""
from hypothesis import strategies as st

from prelie_hopf.planar import PlanarTree, Word
from prelie_hopf.trees import Forest, RootedTree

from oracles import build

COLORS = ("a", "b")


@st.composite
def parent_arrays(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    return (-1,) + tuple(draw(st.integers(0, i - 1)) for i in range(1, n))


@st.composite
def trees(draw, max_size=5, colors=COLORS, cls=RootedTree):
    parent = draw(parent_arrays(max_size))
    coloring = draw(st.lists(st.sampled_from(colors), min_size=len(parent), max_size=len(parent)))
    return build(parent, coloring, cls)


def planar_trees(max_size=5, colors=COLORS):
    return trees(max_size, colors, PlanarTree)


@st.composite
def forests(draw, max_degree=5, colors=COLORS):
    out, budget = [], max_degree
    while budget > 0 and draw(st.booleans()):
        t = draw(trees(budget, colors))
        out.append(t)
        budget -= t.size
    return Forest(out)


@st.composite
def words(draw, max_degree=5, colors=COLORS):
    out, budget = [], max_degree
    while budget > 0 and draw(st.booleans()):
        t = draw(planar_trees(budget, colors))
        out.append(t)
        budget -= t.size
    return Word(out)
