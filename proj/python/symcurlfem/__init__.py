"""Tetrahedral finite elements for matrix-valued H(sym Curl) problems."""

from symcurlfem._core import (
    ConvergenceRecord,
    InputError,
    Mesh,
    SolverError,
    dof_count,
    estimate_rate,
    eval_exact,
    eval_moment,
    generate_cube_mesh,
    interpolation_errors,
    run_convergence,
    verify_identities,
    write_csv,
)

__all__ = [
    "ConvergenceRecord",
    "InputError",
    "Mesh",
    "SolverError",
    "dof_count",
    "estimate_rate",
    "eval_exact",
    "eval_moment",
    "generate_cube_mesh",
    "interpolation_errors",
    "run_convergence",
    "verify_identities",
    "write_csv",
]

__version__ = "0.1.0"
