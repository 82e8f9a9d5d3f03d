"""Exact computations for principal series Whittaker functions on Sp(3,R)."""

from ._core import (
    chi,
    chi_at,
    chi_oracle,
    compare_system,
    enumerate,
    normal_order,
    rmatrix,
    run_suite,
    sigma_enumerate,
    suite_names,
    system_operators,
    weyl_dim,
)

__all__ = [
    "chi",
    "chi_at",
    "chi_oracle",
    "compare_system",
    "enumerate",
    "normal_order",
    "rmatrix",
    "run_suite",
    "sigma_enumerate",
    "suite_names",
    "system_operators",
    "weyl_dim",
]
