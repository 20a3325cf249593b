"""Sandwich problems for chordal, C5-free, odd-hole-free and even-hole-free graphs."""

from ._core import (
    Error,
    EvenReduction,
    Instance,
    OddReduction,
    ParseError,
    brute_force_solve,
    check,
    parse_dimacs,
    properties,
    reduce_even,
    reduce_odd,
    run_suite,
    solve,
    suite_names,
)

__all__ = [
    "Error",
    "EvenReduction",
    "Instance",
    "OddReduction",
    "ParseError",
    "brute_force_solve",
    "check",
    "parse_dimacs",
    "properties",
    "reduce_even",
    "reduce_odd",
    "run_suite",
    "solve",
    "suite_names",
]
