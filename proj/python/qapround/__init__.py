"""Rounding heuristics for quadratic assignment problems.

Thin re-export of the compiled core: nearest-permutation rounding (X0),
golden-section search over the one-parametric rounding family (X1),
closed-form parameter rounding at theta2 = 2*gamma_star (X2), plus the
projection machinery certifying gamma_star and the experiment harness.
"""

from qapround._core import (
    BasisCheck,
    BruteForceResult,
    ComparisonRow,
    DoublyStochastic,
    Instance,
    LapSolution,
    ParseError,
    Permutation,
    ProjectionBasis,
    ReducedHessian,
    RMode,
    RoundingResult,
    Sense,
    SolutionFile,
    TableEntry,
    ThetaProfile,
    ThetaSample,
    BasisIndependenceReport,
    XcSpec,
    best_gamma_numeric,
    brute_force_lap,
    brute_force_min,
    comparison_csv,
    default_theta_max,
    derive_seed,
    gamma_star,
    golden_section_search,
    gradient,
    gram_schmidt_basis,
    householder_basis,
    load_instance,
    load_solution,
    nearest_permutation,
    objective,
    objective_general,
    parse_instance,
    parse_solution,
    profile_csv,
    random_xc,
    reduced_gamma,
    reduced_hessian,
    round_theta,
    round_x0,
    round_x2,
    run_comparison,
    run_table,
    solve_lap_max,
    solve_lap_min,
    theta2,
    theta_profile,
    verify_basis_independence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
