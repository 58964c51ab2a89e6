# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled grafting kernel; same algorithm and output order as _pykernels."""
from .trees import RootedTree


cdef object _make(str color, tuple children):
    cdef object obj = RootedTree.__new__(RootedTree)
    cdef Py_ssize_t size = 1
    cdef list parts
    for c in children:
        size += <Py_ssize_t>c.size
    if children:
        parts = [c.encoding for c in children]
        enc = color + "[" + " ".join(parts) + "]"
    else:
        enc = color
    obj.color = color
    obj.children = children
    obj.encoding = enc
    obj.size = size
    obj._hash = hash(enc)
    return obj


cdef tuple _insert(tuple children, Py_ssize_t skip, object g):
    cdef list out = []
    cdef str key = g.encoding
    cdef bint placed = False
    cdef Py_ssize_t i, n = len(children)
    for i in range(n):
        if i == skip:
            continue
        c = children[i]
        if not placed and key <= <str>c.encoding:
            out.append(g)
            placed = True
        out.append(c)
    if not placed:
        out.append(g)
    return tuple(out)


cdef void _grafts(object T1, object T2, list out):
    cdef tuple children = T1.children
    cdef str color = T1.color
    cdef Py_ssize_t i, n = len(children)
    cdef list sub
    out.append(_make(color, _insert(children, -1, T2)))
    for i in range(n):
        sub = []
        _grafts(children[i], T2, sub)
        for g in sub:
            out.append(_make(color, _insert(children, i, g)))


def all_grafts(T1, T2):
    """Graft ``T2`` on every vertex of ``T1``; results listed in preorder."""
    cdef list out = []
    _grafts(T1, T2, out)
    return out
