"""Exact formal linear combinations over an arbitrary hashable basis.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; a fraction
whose denominator is 1 is always stored as an ``int`` so that the common
integer case stays fast.  Both are exact rationals and compare equal across
types.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Coerce ``value`` (int, Fraction or text ``"num/den"``) to a reduced scalar."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif not isinstance(value, Fraction):
        raise TypeError(f"not an exact scalar: {value!r}")
    if value.denominator == 1:
        return value.numerator
    return value


def format_scalar(c: Scalar) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _sort_key(b):
    key = getattr(b, "sort_key", None)
    if key is not None:
        return key()
    if isinstance(b, tuple):
        return (sum(_length(x) for x in b), tuple(_sort_key(x) for x in b))
    return (0, b)


def _length(b) -> int:
    return len(b) if hasattr(b, "factors") else 1


class LinearCombination:
    """Immutable finite sum ``sum c_b * b`` with no zero coefficients stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict = {}
        for b, c in items:
            c = scalar(c)
            if c:
                c = acc.get(b, 0) + c
                if c:
                    acc[b] = c
                else:
                    del acc[b]
        self._terms = acc
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> "LinearCombination":
        # caller guarantees: no zero coefficients, values already normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, b, c: Scalar = 1) -> "LinearCombination":
        return cls({b: c})

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls._trusted({})

    # -- mapping-like access ------------------------------------------------
    def __getitem__(self, b) -> Scalar:
        return self._terms.get(b, 0)

    coefficient = __getitem__

    def __contains__(self, b) -> bool:
        return b in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    # -- arithmetic ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LinearCombination):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return combine(1, self, 1, other)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return combine(1, self, -1, other)

    def __neg__(self) -> "LinearCombination":
        return self._trusted({b: -c for b, c in self._terms.items()})

    def __mul__(self, c) -> "LinearCombination":
        if isinstance(c, LinearCombination):
            return NotImplemented
        return combine(c, self, 0, self.zero())

    __rmul__ = __mul__

    def map_basis(self, f: Callable) -> "LinearCombination":
        """Apply a basis-to-basis map linearly; colliding images are summed."""
        acc: dict = {}
        for b, c in self._terms.items():
            add_term(acc, f(b), c)
        return normalized(acc, type(self))

    def apply(self, f: Callable[..., "LinearCombination"]) -> "LinearCombination":
        """Extend a basis-to-combination map linearly."""
        acc: dict = {}
        for b, c in self._terms.items():
            add_scaled(acc, f(b), c)
        return normalized(acc, type(self))

    def __str__(self) -> str:
        return format_combination(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class TensorCombination(LinearCombination):
    """Linear combination over k-tuples of basis elements (Sweedler components)."""

    __slots__ = ()

    @property
    def arity(self) -> int | None:
        for key in self._terms:
            return len(key)
        return None

    def __str__(self) -> str:
        return format_combination(self, tensor=True)


def format_combination(lc: LinearCombination, tensor: bool = False) -> str:
    """Canonical text: ``"2 a[a a] - 1/2 a a"``; tensor slots joined by ``⊗``.

    Coefficients are always printed for ordinary combinations and omitted
    when equal to 1 for tensors.
    """
    if not lc:
        return "0"
    out = []
    for i, (b, c) in enumerate(lc.sorted_items()):
        body = "⊗".join(str(x) for x in b) if tensor else str(b)
        mag = -c if c < 0 else c
        text = body if tensor and mag == 1 else f"{format_scalar(mag)} {body}"
        if i == 0:
            out.append("-" + text if c < 0 else text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)


def add_term(acc: dict, b, c: Scalar) -> None:
    """In-place ``acc[b] += c`` dropping zeros."""
    c = acc.get(b, 0) + c
    if c:
        acc[b] = c
    else:
        acc.pop(b, None)


def add_scaled(acc: dict, lc: LinearCombination, c: Scalar) -> None:
    """In-place ``acc += c * lc`` dropping zeros."""
    get = acc.get
    for b, d in lc._terms.items():
        v = get(b, 0) + c * d
        if v:
            acc[b] = v
        else:
            del acc[b]


def normalized(acc: dict, cls=LinearCombination) -> LinearCombination:
    """Wrap an accumulator dict, converting integral fractions to ``int``."""
    for b, c in acc.items():
        if isinstance(c, Fraction) and c.denominator == 1:
            acc[b] = c.numerator
    return cls._trusted(acc)


def combine(alpha, A: LinearCombination, beta, B: LinearCombination) -> LinearCombination:
    """Return ``alpha*A + beta*B`` with zero terms pruned."""
    alpha, beta = scalar(alpha), scalar(beta)
    acc: dict = {}
    if alpha:
        add_scaled(acc, A, alpha)
    if beta:
        add_scaled(acc, B, beta)
    cls = TensorCombination if isinstance(A, TensorCombination) or isinstance(B, TensorCombination) else LinearCombination
    return normalized(acc, cls)


def bilinear_extend(prod: Callable, A: LinearCombination, B: LinearCombination) -> LinearCombination:
    """``sum_{a,b} A[a] B[b] prod(a, b)`` for a basis-level product."""
    acc: dict = {}
    cls = LinearCombination
    for a, ca in A.items():
        for b, cb in B.items():
            p = prod(a, b)
            if isinstance(p, TensorCombination):
                cls = TensorCombination
            add_scaled(acc, p, ca * cb)
    return normalized(acc, cls)


def iterate_coproduct(delta: Callable, A: LinearCombination, k: int):
    """k-fold Sweedler expansion obtained by splitting the last component.

    ``delta`` maps a basis element to a 2-component TensorCombination.  For
    ``k == 1`` the input is returned unchanged.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return A
    current = {(b,): c for b, c in A.items()}
    for _ in range(k - 1):
        nxt: dict = {}
        for key, c in current.items():
            head, last = key[:-1], key[-1]
            for (x, y), d in delta(last).items():
                add_term(nxt, head + (x, y), c * d)
        current = nxt
    return normalized(current, TensorCombination)


def tensor(*parts: LinearCombination) -> TensorCombination:
    """Tensor product of ordinary combinations."""
    current = {(): 1}
    for part in parts:
        nxt: dict = {}
        for key, c in current.items():
            for b, d in part.items():
                add_term(nxt, key + (b,), c * d)
        current = nxt
    return normalized(current, TensorCombination)


def tensor_map(T: TensorCombination, f: Callable, position: int) -> TensorCombination:
    """Apply a basis-to-combination map ``f`` to one tensor slot."""
    acc: dict = {}
    for key, c in T.items():
        for b, d in f(key[position]).items():
            add_term(acc, key[:position] + (b,) + key[position + 1:], c * d)
    return normalized(acc, TensorCombination)


def componentwise(mul: Callable, S: TensorCombination, T: TensorCombination) -> TensorCombination:
    """``(s1⊗…⊗sk)(t1⊗…⊗tk) = mul(s1,t1)⊗…⊗mul(sk,tk)`` extended bilinearly.

    ``mul`` returns a LinearCombination for every pair of basis elements.
    """
    acc: dict = {}
    for skey, sc in S.items():
        for tkey, tc in T.items():
            partial = {(): sc * tc}
            for s, t in zip(skey, tkey):
                prod = mul(s, t)
                nxt: dict = {}
                for head, c in partial.items():
                    for b, d in prod.items():
                        add_term(nxt, head + (b,), c * d)
                partial = nxt
            for key, c in partial.items():
                add_term(acc, key, c)
    return normalized(acc, TensorCombination)
