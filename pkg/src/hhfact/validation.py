"""Input validation helpers shared across the package."""

import numpy as np

__all__ = [
    "as_unit_vector",
    "check_data_matrix",
    "check_binary_matrix",
    "check_theta",
]


def as_unit_vector(u, reject_tol=1e-9):
    """Validate and return a fresh float64 unit vector.

    Accepts any 1-D array-like of length >= 2 whose Euclidean norm is within
    ``reject_tol`` of 1, and renormalizes it to unit norm exactly (up to
    rounding) so downstream algebra never compounds a construction error.
    """
    u = np.array(u, dtype=np.float64)
    if u.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {u.shape}")
    if u.size < 2:
        raise ValueError(f"need at least 2 entries, got {u.size}")
    if not np.all(np.isfinite(u)):
        raise ValueError("entries must be finite")
    norm = float(np.linalg.norm(u))
    if abs(norm - 1.0) > reject_tol:
        raise ValueError(f"not unit norm: ||u||_2 = {norm!r}")
    return u / norm


def check_data_matrix(Y):
    """Return Y as a finite, nonempty 2-D float64 array."""
    Y = np.asarray(Y, dtype=np.float64)
    if Y.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {Y.shape}")
    if Y.size == 0:
        raise ValueError("matrix must be nonempty")
    if not np.all(np.isfinite(Y)):
        raise ValueError("matrix entries must be finite")
    return Y


def check_binary_matrix(X):
    """Return X as a 2-D float64 array after verifying every entry is 0 or 1."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {X.shape}")
    if X.size == 0:
        raise ValueError("matrix must be nonempty")
    if not np.all((X == 0.0) | (X == 1.0)):
        raise ValueError("matrix entries must be exactly 0 or 1")
    return X


def check_theta(theta):
    """Validate a Bernoulli inclusion probability, strictly inside (0, 1)."""
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie strictly in (0, 1), got {theta!r}")
    return theta
