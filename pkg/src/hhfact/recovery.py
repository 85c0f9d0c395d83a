"""Polynomial-time recovery of the reflection generator and binary coefficients.

Given ``Y = (I - 2 u u^T) X`` with Bernoulli(theta) binary ``X``, the moments
of ``Y`` expose everything needed for an O(n*p) estimate: the mean square of
the entries estimates theta, the grand sum estimates the squared entry sum of
``u``, and the row sums estimate ``u`` itself (up to global sign). The
coefficients are then read back through the estimated reflection and hard
thresholded.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .householder import HouseholderReflection
from .validation import check_data_matrix

__all__ = [
    "DegenerateInputError",
    "UnrecoverableError",
    "Diagnostics",
    "RecoveryResult",
    "UnitVectorRecovery",
    "estimate_theta",
    "estimate_c_squared",
    "recover_unit_vector",
    "recover_coefficients",
    "recover_factors",
]

DEFAULT_THRESHOLD = 0.5

# Column block for the O(n*p) passes: keeps scratch inside the cache and the
# per-call temporaries small enough for the allocator to recycle.
_BLOCK_COLUMNS = 512


class DegenerateInputError(ValueError):
    """The data matrix carries no signal (all zero), so no estimate exists."""


class UnrecoverableError(ValueError):
    """Row sums match their zero-generator expectation exactly.

    Happens iff the estimated per-row statistics are all zero, which
    corresponds to a generator whose entry sum is zero; that regime is
    unidentifiable for this estimator.
    """


@dataclass(frozen=True)
class Diagnostics:
    """Flags describing clamps and fallbacks taken during recovery."""

    threshold: float
    clamped_theta: bool = False
    clamped_c_squared: bool = False
    negative_k_sum: bool = False


@dataclass(frozen=True, eq=False)
class RecoveryResult:
    """Everything the pipeline produced, including intermediates.

    ``k`` holds the per-row first-moment statistics; ``u_hat`` is that vector
    scaled to unit norm. ``x_hat`` is a uint8 0/1 matrix.
    """

    u_hat: np.ndarray
    x_hat: np.ndarray
    theta_hat: float
    c_squared_hat: float
    k: np.ndarray
    diagnostics: Diagnostics


class UnitVectorRecovery(NamedTuple):
    u_hat: np.ndarray
    k: np.ndarray
    negative_k_sum: bool


def _moments(Y):
    """Sum of squares and row sums in one blocked pass over Y."""
    n, p = Y.shape
    square_sum = 0.0
    row_sums = np.zeros(n)
    for j in range(0, p, _BLOCK_COLUMNS):
        block = Y[:, j : j + _BLOCK_COLUMNS]
        square_sum += float(np.einsum("ij,ij->", block, block))
        row_sums += block.sum(axis=1)
    return square_sum, row_sums


def _raw_theta(Y):
    square_sum = 0.0
    for j in range(0, Y.shape[1], _BLOCK_COLUMNS):
        block = Y[:, j : j + _BLOCK_COLUMNS]
        square_sum += float(np.einsum("ij,ij->", block, block))
    return square_sum / Y.size


def _threshold_codes(u, Y, threshold):
    """Blocked ``(I - 2 u u^T) @ Y >= threshold`` as a uint8 matrix."""
    n, p = Y.shape
    codes = np.empty((n, p), dtype=np.uint8)
    width = min(_BLOCK_COLUMNS, p)
    scratch = np.empty((n, width))
    flags = np.empty((n, width), dtype=bool)
    for j in range(0, p, _BLOCK_COLUMNS):
        block = Y[:, j : j + _BLOCK_COLUMNS]
        w = block.shape[1]
        s, f = scratch[:, :w], flags[:, :w]
        proj = u @ block
        proj *= 2.0
        np.multiply.outer(u, proj, out=s)
        np.subtract(block, s, out=s)
        np.greater_equal(s, threshold, out=f)
        codes[:, j : j + _BLOCK_COLUMNS] = f
    return codes


def _generator_from_row_sums(row_sums, p, theta):
    k = -0.5 * (row_sums / (p * theta) - 1.0)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise UnrecoverableError(
            "every row sums to exactly p*theta; the generator's entry sum is "
            "zero and cannot be recovered from first moments"
        )
    negative_k_sum = float(k.sum()) <= 0.0
    return UnitVectorRecovery(k / norm, k, negative_k_sum)


def estimate_theta(Y):
    """Estimate the Bernoulli parameter as the mean square of the entries.

    The reflection is orthogonal, so the sum of squares of ``Y`` equals that
    of ``X``, whose entries are 0/1; dividing by n*p estimates theta. The
    value is clamped to [0, 1] (it can escape only through rounding).
    """
    Y = check_data_matrix(Y)
    return min(_raw_theta(Y), 1.0)


def _raw_c_squared(Y, theta):
    n, p = Y.shape
    return float(-0.5 * (Y.sum() / (p * theta) - n))


def estimate_c_squared(Y, theta):
    """Estimate the squared entry sum of the generator from the grand sum of Y.

    In expectation the grand sum equals ``p * theta * (n - 2 c^2)`` where
    ``c`` is the entry sum of ``u``; inverting gives the estimate. Sampling
    noise can push it negative, in which case 0 is returned (the pipeline
    records the clamp).
    """
    Y = check_data_matrix(Y)
    theta = float(theta)
    if theta <= 0.0:
        raise ValueError(f"theta must be positive, got {theta!r}")
    return max(_raw_c_squared(Y, theta), 0.0)


def recover_unit_vector(Y, theta):
    """Estimate the generator from the row sums of Y.

    Each row statistic ``k_i = -(row_sum_i / (p * theta) - 1) / 2`` estimates
    ``u_i`` times the entry sum of ``u``, so ``u`` is ``k`` over the square
    root of ``sum(k)``. Renormalizing that to exact unit norm reduces to
    ``k / ||k||_2``, which also keeps the sign of each entry equal to the
    sign of ``k_i``; when ``sum(k) <= 0`` under noise the same fallback is
    used and flagged (the global sign is unidentifiable anyway).
    """
    Y = check_data_matrix(Y)
    theta = float(theta)
    if theta <= 0.0:
        raise ValueError(f"theta must be positive, got {theta!r}")
    return _generator_from_row_sums(Y.sum(axis=1), Y.shape[1], theta)


def recover_coefficients(Y, u_hat, threshold=DEFAULT_THRESHOLD):
    """Read the coefficients back through the reflection and hard threshold.

    The reflection is its own inverse, so ``X' = H_hat @ Y`` recovers ``X``
    exactly when ``u_hat`` is exact. Entries at or above ``threshold`` map to
    1, the rest to 0 (ties go up, keeping reruns bit-identical). The result
    is a uint8 0/1 matrix, computed in column blocks so the data is streamed
    once with small scratch.
    """
    threshold = float(threshold)
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold!r}")
    Y = check_data_matrix(Y)
    H = HouseholderReflection(u_hat)
    if Y.shape[0] != H.n:
        raise ValueError(f"row count mismatch: {Y.shape[0]} != {H.n}")
    return _threshold_codes(H.u, Y, threshold)


def recover_factors(Y, threshold=DEFAULT_THRESHOLD):
    """Full O(n*p) pipeline: theta, squared entry sum, generator, coefficients.

    Raises :class:`DegenerateInputError` on an all-zero ``Y`` (no theta to
    divide by) and propagates :class:`UnrecoverableError` from the generator
    step.
    """
    threshold = float(threshold)
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold!r}")
    Y = check_data_matrix(Y)
    n, p = Y.shape
    square_sum, row_sums = _moments(Y)
    raw_theta = square_sum / Y.size
    theta_hat = min(raw_theta, 1.0)
    if theta_hat == 0.0:
        raise DegenerateInputError("data matrix is all zero")
    raw_c2 = -0.5 * (float(row_sums.sum()) / (p * theta_hat) - n)
    u_hat, k, negative_k_sum = _generator_from_row_sums(row_sums, p, theta_hat)
    x_hat = _threshold_codes(u_hat, Y, threshold)
    diagnostics = Diagnostics(
        threshold=float(threshold),
        clamped_theta=raw_theta > 1.0,
        clamped_c_squared=raw_c2 < 0.0,
        negative_k_sum=negative_k_sum,
    )
    return RecoveryResult(
        u_hat=u_hat,
        x_hat=x_hat,
        theta_hat=theta_hat,
        c_squared_hat=max(raw_c2, 0.0),
        k=k,
        diagnostics=diagnostics,
    )
