"""Exact periodic decomposition and ergodicity analysis of invariant credal sets.

Rationals cross the boundary as ``fractions.Fraction``; inputs may be ints,
strings such as ``"1/3"``, or fractions.
"""

from ._isex import (
    IsexError,
    System,
    check_invariance,
    extreme_points,
    gen_cycle,
    gen_product_shift,
    gen_random_invariant,
    run_subcommand,
)

__all__ = [
    "IsexError",
    "System",
    "check_invariance",
    "extreme_points",
    "gen_cycle",
    "gen_product_shift",
    "gen_random_invariant",
    "run_subcommand",
]
