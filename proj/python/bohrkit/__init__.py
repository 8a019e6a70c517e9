"""Exact Dirichlet polynomials, the Bohr lift, and witness computations."""

from ._bohrkit import (
    BudgetError,
    ConvergenceError,
    DirichletPolynomial,
    MultiPoly,
    expand_cofactors,
    find_fixed_point,
    is_member,
    kronecker_hit,
    lift,
    norm_est_torus,
    norm_est_vertical,
    norm_upper_l1,
    obstruction_report,
    relation_kernel,
    section,
    section_gap_check,
    unlift,
    verify_bezout,
    witness_certified,
    witness_tuple,
)

__all__ = [
    "BudgetError",
    "ConvergenceError",
    "DirichletPolynomial",
    "MultiPoly",
    "expand_cofactors",
    "find_fixed_point",
    "is_member",
    "kronecker_hit",
    "lift",
    "norm_est_torus",
    "norm_est_vertical",
    "norm_upper_l1",
    "obstruction_report",
    "relation_kernel",
    "section",
    "section_gap_check",
    "unlift",
    "verify_bezout",
    "witness_certified",
    "witness_tuple",
]
