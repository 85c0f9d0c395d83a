"""Recovery of a Householder reflection and binary coefficients from their product.

Given ``Y = H X`` with ``H = I - 2 u u^T`` for an unknown unit vector ``u``
and an unknown 0/1 matrix ``X``, this package recovers the factors: exactly
(exponential-time enumeration, small n) or approximately in O(n*p) time from
the moments of ``Y``, together with closed-form Hoeffding-type failure bounds
and a seeded Monte-Carlo harness that checks the estimators against them.
"""

from .bounds import plan_columns, theta_bound, u_recovery_bound
from .estimator import HouseholderDictionaryLearning
from .exact import (
    ColumnGuessSolution,
    DistinctColumnsError,
    enumerate_column_candidates,
    exact_recover,
    match_candidates,
    nonbinary_ambiguity_example,
    solve_u_from_column,
)
from .experiments import TrialReport, run_theta_trials, run_u_trials, sweep_columns
from .householder import HouseholderReflection, linf_error_up_to_sign
from .recovery import (
    DegenerateInputError,
    Diagnostics,
    RecoveryResult,
    UnrecoverableError,
    estimate_c_squared,
    estimate_theta,
    recover_coefficients,
    recover_factors,
    recover_unit_vector,
)
from .sampling import make_instance, sample_binary_matrix, sample_unit_vector

__version__ = "0.1.0"

__all__ = [
    "HouseholderReflection",
    "linf_error_up_to_sign",
    "sample_unit_vector",
    "sample_binary_matrix",
    "make_instance",
    "estimate_theta",
    "estimate_c_squared",
    "recover_unit_vector",
    "recover_coefficients",
    "recover_factors",
    "RecoveryResult",
    "Diagnostics",
    "DegenerateInputError",
    "UnrecoverableError",
    "ColumnGuessSolution",
    "solve_u_from_column",
    "enumerate_column_candidates",
    "match_candidates",
    "exact_recover",
    "nonbinary_ambiguity_example",
    "DistinctColumnsError",
    "theta_bound",
    "u_recovery_bound",
    "plan_columns",
    "TrialReport",
    "run_theta_trials",
    "run_u_trials",
    "sweep_columns",
    "HouseholderDictionaryLearning",
    "__version__",
]
