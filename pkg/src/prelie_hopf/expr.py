"""Parser and evaluator for the command-line expression language.

Grammar (``o`` and ``(x)`` are ASCII aliases of ``∘`` and ``⊗``)::

    combination := term (('+' | '-') term)*
    term        := ['-'] [rational ['*']] tensorial | rational
    tensorial   := product (('⊗' | '(x)') product)*
    product     := atom (('∘' | '*') atom)*
    atom        := forest | '1' | '(' combination ')'
                 | ('Δ' | 'coprod' | 'ckΔ' | 'ckcoprod' | 'fΔ' | 'fcoprod' | 'S') '(' combination ')'
                 | 'brace' '(' combination ';' combination ')'
                 | ('B+' | 'B-') '(' color ';' combination ')'
    forest      := tree+          (whitespace separated)

In symmetric mode a forest is a monomial of S(PL) (unordered trees); in
planar mode it is a word of planar trees with children kept as written.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import ck
from .algebra import LinearCombination, TensorCombination, add_term, normalized, scalar, tensor
from .planar import EMPTY_WORD, PlanarTree, Word
from .prelie import FreePreLie
from .symmetric import SymmetricHopf
from .tensor import PlanarBraces, TensorHopf, b_planar_minus, b_planar_plus, foissy_coproduct
from .trees import UNIT, Forest, ParseError, RootedTree

MODES = ("symmetric", "planar")


class ModeError(ValueError):
    """Operation not available in the current mode or on this kind of value."""


_TOKEN_SPEC = [
    ("WS", r"\s+"),
    ("NUMBER", r"\d+(?:/\d+)?"),
    ("FUNC", r"(?:ckΔ|fΔ|Δ|ckcoprod|fcoprod|coprod|brace|B\+|B-|S)(?=\s*\()"),
    ("TENSOR_ASCII", r"\(x\)"),
    ("COLOR", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("LBRACK", r"\["),
    ("RBRACK", r"\]"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("STAR", r"\*"),
    ("CIRCLE", r"∘"),
    ("TENSOR", r"⊗"),
    ("SEMI", r";"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in _TOKEN_SPEC))
_FUNC_ALIASES = {"coprod": "Δ", "ckcoprod": "ckΔ", "fcoprod": "fΔ"}


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unknown token {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "TENSOR_ASCII":
            # "(x)" is the tensor sign only right after an operand
            if not tokens or tokens[-1].kind not in ("COLOR", "RBRACK", "RPAREN", "NUMBER"):
                m = re.compile(r"\(").match(text, pos)
                kind = "LPAREN"
            else:
                kind = "TENSOR"
        elif kind == "COLOR" and m.group() == "o":
            kind = "CIRCLE"
        if kind != "WS":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class Evaluator:
    """Evaluate expressions; values are LinearCombinations or TensorCombinations."""

    def __init__(self, mode: str = "symmetric", colors=None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.S = SymmetricHopf(FreePreLie(colors or ("a",)))
        self.T = TensorHopf(PlanarBraces())

    # -- entry ---------------------------------------------------------------
    def evaluate(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        value = self.combination()
        if self.peek().kind != "END":
            tok = self.peek()
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    # -- token helpers -----------------------------------------------------------
    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind: str | None = None) -> Token:
        tok = self.peek()
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind.lower()}, got {tok.text or 'end of input'!r}", tok.pos)
        self.i += 1
        return tok

    def _starts_atom(self, tok: Token) -> bool:
        return tok.kind in ("COLOR", "LPAREN", "FUNC", "NUMBER")

    # -- grammar -------------------------------------------------------------------
    def combination(self):
        value = self.term()
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.take().kind == "PLUS" else -1
            rhs = self.term()
            value = self._add(value, rhs, sign)
        return value

    def term(self):
        sign = 1
        if self.peek().kind == "MINUS":
            self.take()
            sign = -1
        coef = Fraction(1)
        if self.peek().kind == "NUMBER":
            nxt = self.peek(1)
            if self._starts_atom(nxt) or (nxt.kind == "STAR" and self._starts_atom(self.peek(2))):
                coef = Fraction(self.take().text)
                if self.peek().kind == "STAR":
                    self.take()
        value = self.tensorial()
        c = scalar(coef * sign)
        return value if c == 1 else c * value

    def tensorial(self):
        value = self.product()
        while self.peek().kind == "TENSOR":
            self.take()
            rhs = self.product()
            value = self._tensor(value, rhs)
        return value

    def product(self):
        value = self.atom()
        while self.peek().kind in ("STAR", "CIRCLE"):
            op = self.take()
            rhs = self.atom()
            value = self._star(value, rhs) if op.kind == "STAR" else self._circle(value, rhs, op.pos)
        return value

    def atom(self):
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.take()
            return scalar(Fraction(tok.text)) * self._unit()
        if tok.kind == "LPAREN":
            self.take()
            value = self.combination()
            self.take("RPAREN")
            return value
        if tok.kind == "FUNC":
            return self.call()
        if tok.kind == "COLOR":
            return self.forest()
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def forest(self):
        trees = []
        while self.peek().kind == "COLOR":
            trees.append(self.tree())
        if self.mode == "symmetric":
            mono = Forest(trees)
        else:
            mono = Word(trees)
        return LinearCombination._trusted({mono: 1})

    def tree(self):
        color = self.take("COLOR").text
        children = []
        if self.peek().kind == "LBRACK":
            self.take()
            while self.peek().kind == "COLOR":
                children.append(self.tree())
            self.take("RBRACK")
        cls = RootedTree if self.mode == "symmetric" else PlanarTree
        return cls(color, children)

    def call(self):
        tok = self.take("FUNC")
        name = _FUNC_ALIASES.get(tok.text, tok.text)
        self.take("LPAREN")
        if name in ("B+", "B-"):
            color = self.take("COLOR").text
            self.take("SEMI")
            arg = self.combination()
            self.take("RPAREN")
            return self._bplus(color, arg, tok.pos) if name == "B+" else self._bminus(color, arg, tok.pos)
        first = self.combination()
        if name == "brace":
            self.take("SEMI")
            second = self.combination()
            self.take("RPAREN")
            return self._brace(first, second, tok.pos)
        self.take("RPAREN")
        self._need_element(first, name, tok.pos)
        if name == "Δ":
            return self.S.coproduct(first) if self.mode == "symmetric" else self.T.coproduct(first)
        if name == "ckΔ":
            self._need_mode("symmetric", name, tok.pos)
            return _linear_tensor(first, ck.ck_coproduct)
        if name == "fΔ":
            self._need_mode("planar", name, tok.pos)
            return _linear_tensor(first, foissy_coproduct)
        if name == "S":
            return self.S.antipode(first) if self.mode == "symmetric" else self.T.antipode(first)
        raise ParseError(f"unknown function {tok.text!r}", tok.pos)

    # -- semantics -------------------------------------------------------------------
    def _unit(self) -> LinearCombination:
        return LinearCombination._trusted({UNIT if self.mode == "symmetric" else EMPTY_WORD: 1})

    def _need_element(self, value, what: str, pos: int) -> None:
        if isinstance(value, TensorCombination):
            raise ModeError(f"{what} at position {pos} needs an element, not a tensor")

    def _need_mode(self, mode: str, what: str, pos: int) -> None:
        if self.mode != mode:
            raise ModeError(f"{what} at position {pos} is only available in {mode} mode")

    def _add(self, a, b, sign: int):
        if isinstance(a, TensorCombination) != isinstance(b, TensorCombination):
            raise ModeError("cannot add a tensor and an element")
        if isinstance(a, TensorCombination) and a and b and a.arity != b.arity:
            raise ModeError("cannot add tensors of different arity")
        return a + b if sign > 0 else a - b

    def _tensor(self, a, b):
        if isinstance(b, TensorCombination):
            raise ModeError("right factor of ⊗ must be an element")
        if isinstance(a, TensorCombination):
            acc: dict = {}
            for key, c in a.items():
                for m, d in b.items():
                    add_term(acc, key + (m,), c * d)
            return normalized(acc, TensorCombination)
        return tensor(a, b)

    def _star(self, a, b):
        self._need_element(a, "*", 0)
        self._need_element(b, "*", 0)
        return self.S.star(a, b) if self.mode == "symmetric" else self.T.star(a, b)

    def _circle(self, a, b, pos: int):
        self._need_mode("symmetric", "∘", pos)
        self._need_element(a, "∘", pos)
        self._need_element(b, "∘", pos)
        return self.S.circle(a, b)

    def _brace(self, X, A, pos: int):
        self._need_element(X, "brace", pos)
        self._need_element(A, "brace", pos)
        acc: dict = {}
        for mono, cx in X.items():
            if len(mono) != 1:
                raise ModeError(f"brace at position {pos} needs a combination of single trees")
            x = mono.factors[0]
            for a, ca in A.items():
                if self.mode == "symmetric":
                    res = self.S.symmetric_brace(x, a)
                    for y, c in res.items():
                        add_term(acc, Forest._sorted((y,)), cx * ca * c)
                else:
                    for y, c in self.T.V.brace(x, a).items():
                        add_term(acc, Word((y,)), cx * ca * c)
        return normalized(acc)

    def _bplus(self, color: str, A, pos: int):
        self._need_element(A, "B+", pos)
        if self.mode == "symmetric":
            return A.map_basis(lambda F: Forest._sorted((ck.b_plus(color, F),)))
        return A.map_basis(lambda W: Word((b_planar_plus(color, W),)))

    def _bminus(self, color: str, A, pos: int):
        self._need_element(A, "B-", pos)
        if self.mode == "symmetric":
            return ck.b_minus(A, color)
        return b_planar_minus(A, color)


def _linear_tensor(A: LinearCombination, delta) -> TensorCombination:
    acc: dict = {}
    for m, c in A.items():
        for key, d in delta(m).items():
            add_term(acc, key, c * d)
    return normalized(acc, TensorCombination)


def evaluate(text: str, mode: str = "symmetric", colors=None):
    """Evaluate an expression and return the resulting combination."""
    return Evaluator(mode, colors).evaluate(text)
