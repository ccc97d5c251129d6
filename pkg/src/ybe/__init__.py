"""Finite set-theoretic solutions of the Yang-Baxter equation and the
structures they generate: cyclic conditions, skew-polynomial normal forms,
I-structures, group quotients, retracts, binomial linear lifts, and a small
catalog enumerator.  The command line entry point lives in ybe.cli."""

from .solutions import (
    SolutionMap,
    PropertyReport,
    Relabeling,
    classify,
    is_braided,
    build_permutation_solution,
    build_from_left_actions,
    canonical_form,
    is_isomorphic,
    parse_solution,
    serialize_solution,
)

__all__ = [
    "SolutionMap",
    "PropertyReport",
    "Relabeling",
    "classify",
    "is_braided",
    "build_permutation_solution",
    "build_from_left_actions",
    "canonical_form",
    "is_isomorphic",
    "parse_solution",
    "serialize_solution",
]

__version__ = "0.1.0"
