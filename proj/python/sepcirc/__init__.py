"""Separators, r-divisions, multilayer circuits and counting bounds."""

from ._core import (
    CapExceeded,
    GeometricLayout,
    GridGraph,
    PreconditionError,
    SepcircError,
    Support,
    bounds_sweep,
    brute_force_min_cut,
    corollary2_bound,
    count_abstract,
    count_subgraphs,
    degree_bound,
    delta_constant,
    enumerate_computable,
    log_count_bound,
    lower_bound_ddim,
    lower_bound_lambda,
    make_grid,
    plane_separator,
    r_partition,
    shannon_value,
    validate,
    z_oracle,
)

__all__ = [
    "CapExceeded",
    "GeometricLayout",
    "GridGraph",
    "PreconditionError",
    "SepcircError",
    "Support",
    "bounds_sweep",
    "brute_force_min_cut",
    "corollary2_bound",
    "count_abstract",
    "count_subgraphs",
    "degree_bound",
    "delta_constant",
    "enumerate_computable",
    "log_count_bound",
    "lower_bound_ddim",
    "lower_bound_lambda",
    "make_grid",
    "plane_separator",
    "r_partition",
    "shannon_value",
    "validate",
    "z_oracle",
]
