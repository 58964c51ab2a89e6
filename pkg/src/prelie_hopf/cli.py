"""Command-line front end: ``prelie-hopf <eval|verify|count|dot> ...``."""
from __future__ import annotations

import argparse
import string
import sys
from typing import Sequence

from .algebra import TensorCombination, format_scalar
from .expr import MODES, ModeError, evaluate
from .planar import PlanarTree, enumerate_planar
from .prelie import parse_structure_constants
from .trees import ParseError, enumerate_trees
from .verify import SUITES, run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def color_names(k: int) -> list[str]:
    """The first ``k`` color names: a, b, ..., z, then c26, c27, ..."""
    letters = string.ascii_lowercase
    return [letters[i] if i < 26 else f"c{i}" for i in range(k)]


def _parse_colors(text: str | None) -> tuple[str, ...]:
    if not text:
        return ("a",)
    return tuple(c.strip() for c in text.split(",") if c.strip())


# -- DOT rendering ---------------------------------------------------------------

def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def monomial_to_dot(mono, coefficient, name: str = "G") -> str:
    """One digraph for a forest or word; roots sit on the bottom rank."""
    trees = list(mono.factors)
    planar = any(isinstance(t, PlanarTree) for t in trees)
    lines = [f"// coefficient {format_scalar(coefficient)}", f"// monomial {mono}", f"digraph {name} {{", "  rankdir=BT;"]
    if planar:
        lines.append("  node [shape=record];")
    counter = iter(range(1 << 30))
    roots = []

    def emit(t) -> str:
        node = f"n{next(counter)}"
        kids = list(t.children)
        if planar and kids:
            ports = "|".join(f"<p{i}> {i + 1}" for i in range(len(kids)))
            lines.append(f'  {node} [label="{{{{{ports}}}|{_dot_escape(t.color)}}}"];')
        else:
            lines.append(f'  {node} [label="{_dot_escape(t.color)}"];')
        for i, c in enumerate(kids):
            child = emit(c)
            tail = f"{node}:p{i}" if planar else node
            lines.append(f"  {tail} -> {child};")
        return node

    for t in trees:
        roots.append(emit(t))
    if roots:
        lines.append(f"  {{ rank=min; {'; '.join(roots)}; }}")
    lines.append("}")
    return "\n".join(lines)


def combination_to_dot(lc) -> str:
    if isinstance(lc, TensorCombination):
        raise ModeError("dot output needs a combination of trees or forests, not a tensor")
    if not lc:
        return "// zero combination"
    return "\n".join(monomial_to_dot(m, c, f"G{i}") for i, (m, c) in enumerate(lc.sorted_items()))


# -- argument parsing ------------------------------------------------------------

def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--mode", choices=MODES, default=d("symmetric"), help="tree semantics (default symmetric)")
    parser.add_argument("--cap", type=int, default=d(None), help="degree cap for verify")
    parser.add_argument("--colors", default=d(None), help="comma separated colors (default a)")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for sampled verification")
    parser.add_argument("--format", choices=("text", "dot"), default=d("text"), dest="fmt", help="output format of eval")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prelie-hopf", description="Exact computations with pre-Lie and brace Hopf algebras of rooted trees.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _common(p, suppress=True)

    p = sub.add_parser("dot", help="render an expression as DOT digraphs")
    p.add_argument("expr")
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--samples", type=int, default=0, help="check a seeded random sample of this many cases per identity (0: all)")
    p.add_argument("--structure", help="file with structure constants of an extra pre-Lie instance")
    _common(p, suppress=True)

    p = sub.add_parser("count", help="count trees with n vertices and k colors")
    p.add_argument("kind", choices=("trees", "planar"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    _common(p, suppress=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _dispatch(parser, args)
    except (ParseError, ModeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(parser, args) -> int:
    colors = _parse_colors(args.colors)
    if args.command in ("eval", "dot"):
        value = evaluate(args.expr, args.mode, colors)
        if args.command == "dot" or args.fmt == "dot":
            print(combination_to_dot(value))
        else:
            print(value)
        return EXIT_OK

    if args.command == "count":
        if args.n < 1 or args.k < 1:
            print("error: count needs n >= 1 and k >= 1", file=sys.stderr)
            return EXIT_USAGE
        cols = color_names(args.k)
        trees = enumerate_trees(args.n, cols) if args.kind == "trees" else enumerate_planar(args.n, cols)
        print(len(trees))
        return EXIT_OK

    structure = None
    if args.structure:
        with open(args.structure, encoding="utf-8") as fh:
            structure = parse_structure_constants(fh.read())
    names = SUITES if args.suite == "all" else (args.suite,)
    for name in names:
        rep = run_suite(name, args.cap, colors, args.seed, args.samples, structure if name == "prelie" else None)
        print(rep.format(), flush=True)
        if not rep.passed:
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
