"""Exact and heuristic solvers for target set selection.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its surface.  Vertices are 0-based everywhere; the text formats
(``parse_tss`` / ``write_tss``) are 1-based on disk.
"""

from ._core import (
    MhsInstance,
    ParseError,
    SetCoverInstance,
    SolveResult,
    TssInstance,
    approx_vertex_cover,
    brute_force_setcover,
    brute_force_tss,
    diffuse,
    exact_min_vertex_cover,
    generate_bounded_vc,
    generate_setcover,
    greedy_set_cover,
    greedy_tss,
    influence,
    is_target_set,
    is_vertex_cover,
    mhs_minimize,
    normalize_bipartite_solution,
    parse_setcover,
    parse_tss,
    select_solver_cover,
    setcover_to_tss,
    solve_decision,
    solve_optimal,
    subdivide_to_bipartite,
    write_result,
    write_setcover,
    write_tss,
)

__version__ = "0.1.0"

__all__ = [
    "MhsInstance",
    "ParseError",
    "SetCoverInstance",
    "SolveResult",
    "TssInstance",
    "approx_vertex_cover",
    "brute_force_setcover",
    "brute_force_tss",
    "diffuse",
    "exact_min_vertex_cover",
    "generate_bounded_vc",
    "generate_setcover",
    "greedy_set_cover",
    "greedy_tss",
    "influence",
    "is_target_set",
    "is_vertex_cover",
    "mhs_minimize",
    "normalize_bipartite_solution",
    "parse_setcover",
    "parse_tss",
    "select_solver_cover",
    "setcover_to_tss",
    "solve_decision",
    "solve_optimal",
    "subdivide_to_bipartite",
    "write_result",
    "write_setcover",
    "write_tss",
]
