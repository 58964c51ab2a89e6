"""Exhaustive identity checks up to a degree cap.

Each suite enumerates every admissible input up to ``cap`` (or a seeded
random sample of them when ``samples`` is positive), checks exact equality,
and stops at the first counterexample.
"""
from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from . import ck
from .algebra import (
    LinearCombination,
    TensorCombination,
    add_scaled,
    add_term,
    componentwise,
    iterate_coproduct,
    normalized,
)
from .planar import (
    EMPTY_WORD,
    PlanarTree,
    Sector,
    Word,
    enumerate_planar,
    enumerate_planar_words,
    graft_along,
    graft_sector,
    parse_planar_tree,
    planar_brace,
    sector_compare,
    sector_list,
)
from .prelie import (
    ONE_DIM,
    FreePreLie,
    StructureConstantPreLie,
    associator,
    corolla_graft,
    free_circle,
    lie_bracket,
    sc_prelie_check,
    universal_morphism_apply,
)
from .symmetric import SymmetricHopf, unshuffle, unshuffle_by_subsets
from .tensor import PlanarBraces, TensorHopf, ZeroBraces, b_minus_identity_holds, concat, deconcat, foissy_coproduct
from .trees import UNIT, Forest, RootedTree, enumerate_forests, enumerate_trees

SUITES = (
    "prelie",
    "circle-axioms",
    "star-hopf",
    "ck-duality",
    "symbrace",
    "planar-brace",
    "tensor-hopf",
    "foissy-duality",
)

DEFAULT_CAPS = {
    "prelie": 8,
    "circle-axioms": 6,
    "star-hopf": 6,
    "ck-duality": 6,
    "symbrace": 6,
    "planar-brace": 7,
    "tensor-hopf": 6,
    "foissy-duality": 6,
}

# seven-vertex planar tree whose thirteen sectors are checked one by one in the tests
SAMPLE_TREE = "a[a[a[a] a] a[a]]"


class _Stop(Exception):
    pass


@dataclass
class SuiteReport:
    suite: str
    cap: int
    counts: Counter = field(default_factory=Counter)
    failure: str | None = None
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure is None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite} (cap {self.cap}): {status}, {self.total} checks in {self.seconds:.2f}s"]
        for name, n in self.counts.items():
            lines.append(f"  {name}: {n}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        if self.failure:
            lines.append(f"  counterexample: {self.failure}")
        return "\n".join(lines)


class _Checker:
    def __init__(self, suite: str, cap: int, seed: int, samples: int):
        self.report = SuiteReport(suite, cap)
        self.rng = random.Random(seed)
        self.samples = samples

    def cases(self, items: Sequence) -> Sequence:
        items = list(items)
        if self.samples and len(items) > self.samples:
            return self.rng.sample(items, self.samples)
        return items

    def check(self, name: str, ok: bool, example: Callable[[], str] | str = "") -> None:
        self.report.counts[name] += 1
        if not ok:
            text = example() if callable(example) else example
            self.report.failure = f"{name}: {text}"
            raise _Stop


def _lc(b) -> LinearCombination:
    return LinearCombination._trusted({b: 1})


def _p(x) -> str:
    return f"({x})"


def _trees_upto(n: int, colors) -> list[RootedTree]:
    return [t for d in range(1, n + 1) for t in enumerate_trees(d, colors)]


def _forests_upto(n: int, colors) -> list[Forest]:
    return [f for d in range(0, n + 1) for f in enumerate_forests(d, colors)]


def _degree(x) -> int:
    return x.degree if hasattr(x, "degree") else x.size


def _tuples(pools: Sequence[list], cap: int, degree=_degree):
    """All tuples from the pools with total degree <= cap."""
    buckets = []
    for pool in pools:
        by_deg: dict = {}
        for x in pool:
            by_deg.setdefault(degree(x), []).append(x)
        buckets.append(sorted(by_deg.items()))

    def rec(i, budget):
        if i == len(buckets):
            yield ()
            return
        for d, xs in buckets[i]:
            if d > budget:
                break
            tails = list(rec(i + 1, budget - d))
            for x in xs:
                for rest in tails:
                    yield (x,) + rest
    return list(rec(0, cap))


def _sweedler(delta, A: LinearCombination, k: int):
    """k-fold expansion as ``(tuple_of_components, coefficient)`` pairs."""
    if k == 1:
        return [((b,), c) for b, c in A.items()]
    return list(iterate_coproduct(delta, A, k).items())


def _monomials_1d(max_len: int) -> list[Forest]:
    return [Forest([0] * k) for k in range(max_len + 1)]


# -- pre-Lie ------------------------------------------------------------------------

def suite_prelie(ch: _Checker, cap: int, colors, structure: StructureConstantPreLie | None = None) -> None:
    L = FreePreLie(colors)
    pool = _trees_upto(cap, colors)
    for X, Y, Z in ch.cases(_tuples([pool, pool, pool], cap)):
        x, y, z = _lc(X), _lc(Y), _lc(Z)
        ch.check(
            "associator symmetry",
            associator(L, x, y, z) == associator(L, x, z, y),
            lambda: f"{_p(X)} o ({_p(Y)} o {_p(Z)}) - ({_p(X)} o {_p(Y)}) o {_p(Z)} vs same with {Y} and {Z} swapped",
        )
    jcap = min(cap, 7)
    for X, Y in ch.cases(_tuples([pool, pool], jcap)):
        x, y = _lc(X), _lc(Y)
        ch.check("bracket antisymmetry", lie_bracket(L, x, y) == -lie_bracket(L, y, x), f"X={X}, Y={Y}")
    for X, Y, Z in ch.cases(_tuples([pool, pool, pool], jcap)):
        x, y, z = _lc(X), _lc(Y), _lc(Z)
        jac = lie_bracket(L, x, lie_bracket(L, y, z)) + lie_bracket(L, y, lie_bracket(L, z, x)) + lie_bracket(L, z, lie_bracket(L, x, y))
        ch.check("jacobi", not jac, f"X={X}, Y={Y}, Z={Z}")

    # universal morphism to the free algebra itself and to e∘e = e
    ucap = min(cap, 6)
    identity = {c: _lc(RootedTree(c)) for c in colors}
    to_one = {c: _lc(0) for c in colors}
    for T in _trees_upto(min(ucap, 5), colors):
        ch.check("universal morphism is identity", universal_morphism_apply(identity, T, L) == _lc(T), f"T={T}")
    for target, f, name in ((L, identity, "free"), (ONE_DIM, to_one, "one-dimensional")):
        S = SymmetricHopf(target)
        for T1, T2 in ch.cases(_tuples([pool, pool], ucap)):
            lhs = free_circle(T1, T2).apply(lambda t: universal_morphism_apply(f, t, target, S))
            rhs = _circle_lc(target, universal_morphism_apply(f, T1, target, S), universal_morphism_apply(f, T2, target, S))
            ch.check(f"morphism respects circle ({name})", lhs == rhs, f"T1={T1}, T2={T2}")

    ch.check("structure constants e∘e=e", sc_prelie_check(ONE_DIM) is None, "dim 1, e∘e=e")
    if structure is not None:
        bad = sc_prelie_check(structure)
        ch.check("structure constants", bad is None, lambda: f"basis triple {tuple(i + 1 for i in bad)}")


def _circle_lc(L, X: LinearCombination, Y: LinearCombination) -> LinearCombination:
    acc: dict = {}
    for x, cx in X.items():
        for y, cy in Y.items():
            add_scaled(acc, L.circle(x, y), cx * cy)
    return normalized(acc)


# -- S(L) circle axioms -------------------------------------------------------------------

def _circle_axioms(ch: _Checker, S: SymmetricHopf, monos: list[Forest], gens: list, cap: int, tag: str) -> None:
    def deg(x):
        return x.degree if isinstance(x, Forest) else getattr(x, "size", 1)

    circ = S.circle_monomial
    for A in monos:
        ch.check(f"right unit{tag}", circ(A, UNIT) == _lc(A), f"A={A}")
        ch.check(f"left unit is counit{tag}", circ(UNIT, A) == (_lc(UNIT) if not A.factors else 0), f"A={A}")
    for A, B in ch.cases(_tuples([monos, monos], cap, deg)):
        AB = circ(A, B)
        ch.check(f"counit multiplicative{tag}", AB[UNIT] == (1 if not A.factors and not B.factors else 0), f"A={A}, B={B}")
        lhs = S.coproduct(AB)
        rhs = componentwise(circ, unshuffle(A), unshuffle(B))
        ch.check(f"coproduct of circle{tag}", lhs == rhs, f"Δ({_p(A)} o {_p(B)})")
    for A, B, X in ch.cases(_tuples([monos, monos, gens], cap, deg)):
        BX = B.with_factor(X)
        lhs = circ(A, BX)
        rhs = S.circle(circ(A, B), _lc(Forest._sorted((X,)))) - S.circle(_lc(A), S.right_action(B, X))
        name = "single-tree recursion" if len(A) == 1 else "circle derivation"
        ch.check(f"{name}{tag}", lhs == rhs, lambda: f"{_p(A)} o {_p(BX)} with X={X}")
    for A, B, C in ch.cases(_tuples([monos, monos, monos], cap, deg)):
        lhs = circ(A * B, C)
        acc: dict = {}
        for (C1, C2), c in unshuffle(C).items():
            for m1, c1 in circ(A, C1).items():
                for m2, c2 in circ(B, C2).items():
                    add_term(acc, m1 * m2, c * c1 * c2)
        ch.check(f"product rule{tag}", lhs == normalized(acc), lambda: f"{_p(A * B)} o {_p(C)} split as {A} | {B}")
        lhs = S.circle(circ(A, B), _lc(C))
        inner: dict = {}
        for (C1, C2), c in unshuffle(C).items():
            for m, cm in circ(B, C1).items():
                add_term(inner, m * C2, c * cm)
        rhs = S.circle(_lc(A), normalized(inner))
        ch.check(f"circle composition{tag}", lhs == rhs, lambda: f"({_p(A)} o {_p(B)}) o {_p(C)}")


def suite_circle_axioms(ch: _Checker, cap: int, colors) -> None:
    S = SymmetricHopf(FreePreLie(colors))
    _circle_axioms(ch, S, _forests_upto(cap, colors), _trees_upto(cap, colors), cap, "")
    S1 = SymmetricHopf(ONE_DIM)
    _circle_axioms(ch, S1, _monomials_1d(cap), [0], cap, " [e∘e=e]")
    ch.check("e∘(e·e) vanishes [e∘e=e]", S1.circle_single(0, Forest([0, 0])) == 0, "e o (e e)")

    # order independence of the single-tree recursion
    pool = _trees_upto(cap, colors)
    for T in pool:
        for F in _forests_upto(cap - T.size, colors):
            if not 1 <= len(F) <= 4:
                continue
            ref = S.circle_single(T, F)
            for perm in set(itertools.permutations(F.factors)):
                ch.check("order independence", S.circle_single_with_order(T, list(perm)) == ref, lambda: f"{T} o ({' '.join(map(str, perm))})")

    # recursion against brute-force multi-grafting
    gcap = min(cap, 5)
    for T in _trees_upto(gcap, colors):
        for F in _forests_upto(gcap - T.size, colors):
            brute = corolla_graft(Forest([T]), F.factors)
            ch.check("grafting oracle", S.embed(S.circle_single(T, F)) == brute, f"{T} o ({F})")
    for A in _forests_upto(gcap, colors):
        for F in _forests_upto(gcap - A.degree, colors):
            if A.factors:
                ch.check("grafting oracle (forests)", S.circle_monomial(A, F) == corolla_graft(A, F.factors), f"({A}) o ({F})")


# -- star Hopf algebra -----------------------------------------------------------------

def suite_star_hopf(ch: _Checker, cap: int, colors) -> None:
    S = SymmetricHopf(FreePreLie(colors))
    _star_laws(ch, S, _forests_upto(cap, colors), cap, "")
    S1 = SymmetricHopf(ONE_DIM)
    _star_laws(ch, S1, _monomials_1d(cap), cap, " [e∘e=e]")
    pool = _trees_upto(cap, colors)
    for X, Y in ch.cases(_tuples([pool, pool], cap)):
        x, y = _lc(Forest._sorted((X,))), _lc(Forest._sorted((Y,)))
        lhs = S.star(x, y) - S.star(y, x)
        rhs = S.circle(x, y) - S.circle(y, x)
        ch.check("commutator is bracket", lhs == rhs, f"{X} * {Y} - {Y} * {X}")


def _star_laws(ch: _Checker, S: SymmetricHopf, monos: list[Forest], cap: int, tag: str) -> None:
    def deg(m):
        return m.degree

    star = S.star_monomial
    for A in monos:
        ch.check(f"unit{tag}", star(UNIT, A) == _lc(A) and star(A, UNIT) == _lc(A), f"A={A}")
        lhs: dict = {}
        rhs: dict = {}
        for (A1, A2), c in unshuffle(A).items():
            for m, cm in S.antipode_monomial(A1).items():
                add_scaled(lhs, star(m, A2), c * cm)
            for m, cm in S.antipode_monomial(A2).items():
                add_scaled(rhs, star(A1, m), c * cm)
        eps = _lc(UNIT) if not A.factors else LinearCombination.zero()
        ch.check(f"antipode{tag}", normalized(lhs) == eps and normalized(rhs) == eps, f"S({A})")
    for A, B in ch.cases(_tuples([monos, monos], cap, deg)):
        AB = star(A, B)
        ch.check(f"counit multiplicative{tag}", AB[UNIT] == (1 if not A.factors and not B.factors else 0), f"{A} * {B}")
        ch.check(f"coproduct multiplicative{tag}", S.coproduct(AB) == componentwise(star, unshuffle(A), unshuffle(B)), f"Δ({_p(A)} * {_p(B)})")
        top = len(A) + len(B)
        ok = all(len(m) <= top for m in AB) and AB[A * B] == 1
        ch.check(f"length filtration{tag}", ok, f"{A} * {B}")
    for A, B, C in ch.cases(_tuples([monos, monos, monos], cap, deg)):
        lhs = S.star(star(A, B), _lc(C))
        rhs = S.star(_lc(A), star(B, C))
        ch.check(f"associativity{tag}", lhs == rhs, lambda: f"({_p(A)} * {_p(B)}) * {_p(C)} vs {_p(A)} * ({_p(B)} * {_p(C)})")


# -- Connes-Kreimer -----------------------------------------------------------------------

def suite_ck_duality(ch: _Checker, cap: int, colors) -> None:
    S = SymmetricHopf(FreePreLie(colors))
    ocap = min(cap, 5)
    forests = _forests_upto(ocap, colors)
    for F in forests:
        D = ck.ck_coproduct(F)
        ch.check("recursion equals cuts", D == ck.ck_coproduct_cuts(F), f"ckΔ({F})")
        left = _apply_left(D, ck.ck_coproduct)
        right = _apply_right(D, ck.ck_coproduct)
        ch.check("coassociativity", left == right, f"ckΔ({F})")
        ch.check(
            "counit",
            _counit_left(D) == _lc(F) and _counit_right(D) == _lc(F),
            f"ckΔ({F})",
        )
    for F, G in ch.cases(_tuples([forests, forests], ocap, lambda m: m.degree)):
        lhs = ck.ck_coproduct(F * G)
        rhs = componentwise(lambda a, b: _lc(a * b), ck.ck_coproduct(F), ck.ck_coproduct(G))
        ch.check("multiplicativity", lhs == rhs, f"ckΔ({F} {G})")
    big = _forests_upto(cap, colors)
    for A, B in ch.cases(_tuples([big, big], cap, lambda m: m.degree)):
        ch.check("B- identity", ck.b_minus_identity_holds(S, A, B, colors), f"B-({_p(A)} * {_p(B)})")
    matched = []
    for variant in ck.PAIRINGS:
        rep = ck.duality_check(ocap, variant, colors, S)
        ch.report.counts[f"pairing {variant}"] += rep.checked
        if rep.passed:
            matched.append(variant)
        else:
            A, B = rep.counterexample
            ch.report.notes.append(f"pairing {variant} fails, first at A={A}, B={B}")
    ch.report.notes.append(f"matching pairing: {', '.join(matched) or 'none'}")
    ch.check("exactly one pairing matches", len(matched) == 1, f"matched {matched}")


def _apply_left(D: TensorCombination, delta) -> TensorCombination:
    acc: dict = {}
    for (x, y), c in D.items():
        for (a, b), d in delta(x).items():
            add_term(acc, (a, b, y), c * d)
    return normalized(acc, TensorCombination)


def _apply_right(D: TensorCombination, delta) -> TensorCombination:
    acc: dict = {}
    for (x, y), c in D.items():
        for (a, b), d in delta(y).items():
            add_term(acc, (x, a, b), c * d)
    return normalized(acc, TensorCombination)


def _counit_left(D: TensorCombination) -> LinearCombination:
    return normalized({y: c for (x, y), c in D.items() if len(x) == 0})


def _counit_right(D: TensorCombination) -> LinearCombination:
    return normalized({x: c for (x, y), c in D.items() if len(y) == 0})


# -- symmetric braces ------------------------------------------------------------------------

def suite_symbrace(ch: _Checker, cap: int, colors) -> None:
    S = SymmetricHopf(FreePreLie(colors))
    pool = _trees_upto(cap, colors)
    for X in pool:
        ch.check("empty brace", S.symmetric_brace(X, UNIT) == _lc(X), f"brace({X}; 1)")
    monos = [F for F in _forests_upto(min(cap, 3), colors)]
    for n in (1, 2):
        for combo in ch.cases(_tuples([pool] * (n + 1) + [monos], cap)):
            X, Ys, A = combo[0], combo[1:-1], combo[-1]
            if list(Ys) != sorted(Ys):
                continue  # brace arguments are a multiset
            inner = S.symmetric_brace(X, Forest(Ys))
            lhs: dict = {}
            for t, c in inner.items():
                add_scaled(lhs, S.symmetric_brace(t, A), c)
            rhs: dict = {}
            for key, c in _sweedler(unshuffle, _lc(A), n + 1):
                arg = _lc(key[-1])
                for Y, part in zip(Ys, key[:-1]):
                    arg = S.product(arg, S.embed(S.symmetric_brace(Y, part)))
                for m, cm in arg.items():
                    add_scaled(rhs, S.symmetric_brace(X, m), c * cm)
            ch.check(
                "nested brace",
                normalized(lhs) == normalized(rhs),
                lambda: f"brace(brace({X}; {' '.join(map(str, Ys))}); {A})",
            )
    for F in _forests_upto(min(cap, 4), colors):
        ch.check("unshuffle binomials", unshuffle(F) == unshuffle_by_subsets(F), f"Δ({F})")


# -- planar braces ------------------------------------------------------------------------------

def suite_planar_brace(ch: _Checker, cap: int, colors) -> None:
    for v in range(1, cap + 1):
        for T in enumerate_planar(v, colors):
            ch.check("sector count", len(sector_list(T)) == 2 * v - 1, f"{T}")
    sample = parse_planar_tree(SAMPLE_TREE)
    ch.check("seven-vertex sample sectors", len(sector_list(sample)) == 13, SAMPLE_TREE)

    for v in range(1, min(cap, 5) + 1):
        for T in enumerate_planar(v, colors):
            secs = sector_list(T)
            for i, s in enumerate(secs):
                for j, t in enumerate(secs):
                    c = sector_compare(T, s, t)
                    ok = c == (i > j) - (i < j) and c == -sector_compare(T, t, s)
                    ch.check("sector order matches list", ok, f"{T}: {tuple(s)} vs {tuple(t)}")
            for s, t, u in itertools.product(secs, repeat=3):
                if sector_compare(T, s, t) <= 0 and sector_compare(T, t, u) <= 0:
                    ch.check("sector order transitive", sector_compare(T, s, u) <= 0, f"{T}: {s}, {t}, {u}")

    leaf = PlanarTree(sorted(colors)[0])
    for v in range(1, min(cap, 4) + 1):
        for T in enumerate_planar(v, colors):
            for n in range(0, 4):
                total = sum(c for _, c in planar_brace(T, Word([leaf] * n)).items())
                ch.check("brace term count", total == comb(2 * v - 1 + n - 1, n), f"brace({T}; {' '.join([str(leaf)] * n)})")

    # one-pass fiber grafting against sector-by-sector grafting, largest sector first
    for v in range(1, min(cap, 4) + 1):
        for T in enumerate_planar(v, colors):
            secs = sector_list(T)
            extras = [PlanarTree(c) for c in sorted(colors)] + [PlanarTree(sorted(colors)[0], [PlanarTree(sorted(colors)[0])])]
            for n in (1, 2, 3):
                for f in itertools.combinations_with_replacement(secs, n):
                    W = [extras[i % len(extras)] for i in range(n)]
                    step = T
                    groups: dict = {}
                    for s, t in zip(f, W):
                        groups.setdefault(s, []).append(t)
                    for s in reversed([s for s in secs if s in groups]):
                        step = graft_sector(step, s, groups[s])
                    ch.check("iterated sector grafting", step == graft_along(T, f, W), f"{T} along {f}")

    H = TensorHopf(PlanarBraces())
    xs = [t for d in range(1, min(cap, 3) + 1) for t in enumerate_planar(d, colors)]
    ys = [t for d in range(1, cap + 1) for t in enumerate_planar(d, colors)]
    As = enumerate_planar_words(0, colors) + enumerate_planar_words(1, colors) + enumerate_planar_words(2, colors)
    for X in xs:
        ch.check("empty brace", planar_brace(X, EMPTY_WORD) == _lc(X), f"brace({X}; 1)")
    for n in (0, 1, 2):
        for combo in ch.cases(_tuples([xs] + [ys] * n + [As], cap)):
            X, Ys, A = combo[0], combo[1:-1], combo[-1]
            lhs = H.brace(planar_brace(X, Word(Ys)), _lc(A))
            rhs: dict = {}
            for key, c in _sweedler(deconcat, _lc(A), 2 * n + 1):
                arg = _lc(key[0])
                for k, Y in enumerate(Ys):
                    braced = planar_brace(Y, key[2 * k + 1]).map_basis(lambda y: Word((y,)))
                    arg = concat(concat(arg, braced), _lc(key[2 * k + 2]))
                add_scaled(rhs, H.brace(_lc(X), arg), c)
            ch.check(
                "nested brace",
                lhs == normalized(rhs),
                lambda: f"brace(brace({X}; {' '.join(map(str, Ys))}); {A}) [planar]",
            )


# -- tensor Hopf algebra ------------------------------------------------------------------

def _words_upto(n: int, colors) -> list[Word]:
    return [w for d in range(0, n + 1) for w in enumerate_planar_words(d, colors)]


def suite_tensor_hopf(ch: _Checker, cap: int, colors) -> None:
    H = TensorHopf(PlanarBraces())
    words = _words_upto(cap, colors)
    deg = lambda w: w.degree if isinstance(w, Word) else w.size
    star = H.star_word
    for A, B in ch.cases(_tuples([words, words], cap, deg)):
        AB = star(A, B)
        ch.check("closed form", AB == H.star_closed(A, B), lambda: f"{_p(A)} * {_p(B)} [planar]")
        ch.check("coproduct multiplicative", H.coproduct(AB) == componentwise(star, deconcat(A), deconcat(B)), f"Δ({_p(A)} * {_p(B)})")
        ch.check("counit multiplicative", AB[EMPTY_WORD] == (1 if not len(A) and not len(B) else 0), f"{A} * {B}")
    for A in words:
        ch.check("unit", star(EMPTY_WORD, A) == _lc(A) and star(A, EMPTY_WORD) == _lc(A), f"A={A}")
        lhs: dict = {}
        rhs: dict = {}
        for i in range(len(A) + 1):
            for w, c in H.antipode_word(A[:i]).items():
                add_scaled(lhs, star(w, A[i:]), c)
            for w, c in H.antipode_word(A[i:]).items():
                add_scaled(rhs, star(A[:i], w), c)
        eps = _lc(EMPTY_WORD) if not len(A) else LinearCombination.zero()
        ch.check("antipode", normalized(lhs) == eps and normalized(rhs) == eps, f"S({A}) [planar]")
    for A, B, C in ch.cases(_tuples([words, words, words], cap, deg)):
        lhs = H.star(star(A, B), _lc(C))
        rhs = H.star(_lc(A), star(B, C))
        ch.check("associativity", lhs == rhs, lambda: f"({_p(A)} * {_p(B)}) * {_p(C)} [planar]")
    trees = [t for d in range(1, cap + 1) for t in enumerate_planar(d, colors)]
    for A, Y, B, C in ch.cases(_tuples([words, trees, words, words], cap, deg)):
        lhs = star(A + Word((Y,)) + B, C)
        acc: dict = {}
        for key, c in _sweedler(deconcat, _lc(C), 3):
            left = star(A, key[0])
            mid = planar_brace(Y, key[1]).map_basis(lambda y: Word((y,)))
            right = star(B, key[2])
            add_scaled(acc, concat(concat(left, mid), right), c)
        ch.check("concatenation rule", lhs == normalized(acc), f"{_p(A + Word((Y,)) + B)} * {_p(C)}")
    for X, B, C in ch.cases(_tuples([trees, words, words], cap, deg)):
        ch.check("brace composition", H.brace_composition_check(X, B, C), lambda: f"brace(brace({X}; {B}); {C}) vs brace({X}; {_p(B)} * {_p(C)})")

    Z = TensorHopf(ZeroBraces())
    for A, B in ch.cases(_tuples([words, words], cap, deg)):
        ch.check("zero braces give shuffle", Z.star_word(A, B) == _shuffle(A, B), f"{A} * {B} [zero braces]")


def _shuffle(A: Word, B: Word) -> LinearCombination:
    n, m = len(A), len(B)
    acc: dict = {}
    for pos in itertools.combinations(range(n + m), n):
        it_a, it_b = iter(A.letters), iter(B.letters)
        chosen = set(pos)
        add_term(acc, Word(next(it_a) if k in chosen else next(it_b) for k in range(n + m)), 1)
    return normalized(acc)


# -- Foissy duality ------------------------------------------------------------------------

def suite_foissy_duality(ch: _Checker, cap: int, colors) -> None:
    H = TensorHopf(PlanarBraces())
    words = _words_upto(cap, colors)
    deg = lambda w: w.degree
    for A, B in ch.cases(_tuples([words, words], cap, deg)):
        ch.check("B- identity", b_minus_identity_holds(H, A, B, colors), f"B-({_p(A)} * {_p(B)}) [planar]")
    ocap = min(cap, 5)
    small = _words_upto(ocap, colors)
    for W in small:
        D = foissy_coproduct(W)
        ch.check("coassociativity", _apply_left(D, foissy_coproduct) == _apply_right(D, foissy_coproduct), f"fΔ({W})")
        ch.check("counit", _counit_left(D) == _lc(W) and _counit_right(D) == _lc(W), f"fΔ({W})")
    for U, V in ch.cases(_tuples([small, small], ocap, deg)):
        lhs = foissy_coproduct(U + V)
        rhs = componentwise(lambda a, b: _lc(a + b), foissy_coproduct(U), foissy_coproduct(V))
        ch.check("multiplicativity", lhs == rhs, f"fΔ({U} {V})")
    # <Δ(C), A⊗B> = <C, B*A> with the plain pairing
    for d in range(ocap + 1):
        lhs: dict = {}
        for C in enumerate_planar_words(d, colors):
            for (A, B), c in foissy_coproduct(C).items():
                lhs.setdefault((A, B), {})[C] = c
        for k in range(d + 1):
            for A in enumerate_planar_words(k, colors):
                for B in enumerate_planar_words(d - k, colors):
                    rhs = dict(H.star_word(B, A).items())
                    ch.check("plain pairing duality", lhs.get((A, B), {}) == rhs, f"A={A}, B={B}")


_RUNNERS = {
    "prelie": suite_prelie,
    "circle-axioms": suite_circle_axioms,
    "star-hopf": suite_star_hopf,
    "ck-duality": suite_ck_duality,
    "symbrace": suite_symbrace,
    "planar-brace": suite_planar_brace,
    "tensor-hopf": suite_tensor_hopf,
    "foissy-duality": suite_foissy_duality,
}


def run_suite(name: str, cap: int | None = None, colors: Iterable[str] = ("a",), seed: int = 0,
              samples: int = 0, structure: StructureConstantPreLie | None = None) -> SuiteReport:
    """Run one named suite and return its report."""
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    cap = DEFAULT_CAPS[name] if cap is None else cap
    colors = tuple(sorted(set(colors)))
    ch = _Checker(name, cap, seed, samples)
    start = time.perf_counter()
    try:
        if name == "prelie":
            suite_prelie(ch, cap, colors, structure)
        else:
            _RUNNERS[name](ch, cap, colors)
    except _Stop:
        pass
    ch.report.seconds = time.perf_counter() - start
    return ch.report


def run_all(cap: int | None = None, colors=("a",), seed: int = 0, samples: int = 0) -> list[SuiteReport]:
    reports = []
    for name in SUITES:
        rep = run_suite(name, cap, colors, seed, samples)
        reports.append(rep)
        if not rep.passed:
            break
    return reports
