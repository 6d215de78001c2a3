"""Finite restriction categories: checks and constructions."""

from ._rcat import (
    Category,
    PartialFn,
    RcatError,
    all_partial_fns,
    check_par_axioms,
    decide,
    decompose,
    recompose,
    run,
)

__all__ = [
    "Category",
    "PartialFn",
    "RcatError",
    "all_partial_fns",
    "check_par_axioms",
    "decide",
    "decompose",
    "recompose",
    "run",
]
