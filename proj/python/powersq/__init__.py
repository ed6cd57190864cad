"""Dominant eigenpairs of self-adjoint matrices by power iteration and
repeated squaring."""

from ._core import (
    DegenerateInputError,
    EigenEstimate,
    EmptyDataError,
    NonConvergenceError,
    NumericOverflowError,
    Spectrum,
    jacobi_eigen,
    matrix_power_squaring,
    power_iteration,
    power_iteration_squared,
    random_matrix,
    random_unit_vector,
    run_suite,
    top_k_eigenpairs,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "EigenEstimate",
    "EmptyDataError",
    "NonConvergenceError",
    "NumericOverflowError",
    "Spectrum",
    "jacobi_eigen",
    "matrix_power_squaring",
    "power_iteration",
    "power_iteration_squared",
    "random_matrix",
    "random_unit_vector",
    "run_suite",
    "top_k_eigenpairs",
]
