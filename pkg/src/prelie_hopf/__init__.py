"""Exact computations with pre-Lie algebras of rooted trees, the Hopf algebra
structures they induce on the symmetric and tensor coalgebras, and the
Connes-Kreimer and Foissy dualities."""
from ._kernels import BACKEND
from .algebra import LinearCombination, TensorCombination, scalar
from .ck import b_minus, b_plus, ck_coproduct, ck_coproduct_cuts, duality_check
from .expr import ModeError, evaluate
from .planar import (
    EMPTY_WORD,
    PlanarTree,
    Sector,
    Word,
    enumerate_planar,
    parse_planar_forest,
    parse_planar_tree,
    planar_brace,
    sector_compare,
    sector_list,
)
from .prelie import FreePreLie, StructureConstantPreLie, corolla_graft, free_circle
from .symmetric import SymmetricHopf, unshuffle
from .tensor import PlanarBraces, TensorHopf, ZeroBraces, deconcat, foissy_coproduct
from .trees import (
    UNIT,
    Forest,
    ParseError,
    RootedTree,
    enumerate_forests,
    enumerate_trees,
    graft_at,
    parse_forest,
    parse_tree,
    symmetry_factor,
)
from .verify import SUITES, run_suite

__all__ = [
    "BACKEND", "LinearCombination", "TensorCombination", "scalar",
    "b_minus", "b_plus", "ck_coproduct", "ck_coproduct_cuts", "duality_check",
    "ModeError", "evaluate",
    "EMPTY_WORD", "PlanarTree", "Sector", "Word", "enumerate_planar", "parse_planar_forest",
    "parse_planar_tree", "planar_brace", "sector_compare", "sector_list",
    "FreePreLie", "StructureConstantPreLie", "corolla_graft", "free_circle",
    "SymmetricHopf", "unshuffle",
    "PlanarBraces", "TensorHopf", "ZeroBraces", "deconcat", "foissy_coproduct",
    "UNIT", "Forest", "ParseError", "RootedTree", "enumerate_forests", "enumerate_trees",
    "graft_at", "parse_forest", "parse_tree", "symmetry_factor",
    "SUITES", "run_suite",
]
