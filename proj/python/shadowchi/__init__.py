"""Exact chromatic computations on Cayley graphs of Z_k^2 x Z and their finite pieces."""

from ._shadowchi import (
    BudgetExhausted,
    FiniteGraph,
    GroupElement,
    InputError,
    InvariantViolation,
    MarkedGroupSpec,
    cayley_quotient,
    cayley_window,
    chromatic_number,
    color_tower,
    color_two_ended,
    count_colorings,
    find_coloring,
    generators,
    grid_graph,
    inverse,
    is_proper,
    multiply,
    quotient_chi,
    run_cli,
    swap_odd_levels,
    verify_alternation_obstruction,
    verify_dichotomy,
    verify_invariance,
    verify_rigidity,
    verify_swap_isomorphism,
)

__version__ = "0.1.0"
