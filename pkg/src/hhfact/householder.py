"""Householder reflections represented implicitly by their generating vector."""

import numpy as np

from .validation import as_unit_vector

__all__ = ["HouseholderReflection", "linf_error_up_to_sign"]

# Dense materialization is meant for inspection and small exact problems only;
# everything else must go through the O(n*m) implicit product.
DENSE_MAX_N = 64


class HouseholderReflection:
    """The reflection ``I - 2 u u^T`` for a unit vector ``u``, stored as ``u``.

    The full matrix is never formed: multiplying an ``n x m`` matrix costs
    O(n*m). The reflection is symmetric, orthogonal and involutory, and ``u``
    and ``-u`` generate the identical matrix.
    """

    __slots__ = ("_u",)

    def __init__(self, u):
        u = as_unit_vector(u)
        u.flags.writeable = False
        self._u = u

    @property
    def u(self):
        """Read-only view of the generating unit vector."""
        return self._u

    @property
    def n(self):
        return self._u.size

    def matmul(self, M):
        """Return ``(I - 2 u u^T) @ M`` without forming the dense matrix.

        ``M`` may be a vector of length n or a matrix with n rows; the result
        has the same shape.
        """
        M = np.asarray(M, dtype=np.float64)
        if M.ndim == 1:
            if M.size != self.n:
                raise ValueError(f"length mismatch: {M.size} != {self.n}")
            return M - 2.0 * self._u * (self._u @ M)
        if M.ndim != 2:
            raise ValueError(f"expected a vector or matrix, got shape {M.shape}")
        if M.shape[0] != self.n:
            raise ValueError(f"row count mismatch: {M.shape[0]} != {self.n}")
        return M - 2.0 * np.outer(self._u, self._u @ M)

    __matmul__ = matmul

    def dense(self):
        """Materialize the n x n matrix; refused above n = 64."""
        if self.n > DENSE_MAX_N:
            raise ValueError(
                f"dense materialization is limited to n <= {DENSE_MAX_N}, got n = {self.n}"
            )
        return np.eye(self.n) - 2.0 * np.outer(self._u, self._u)

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


def linf_error_up_to_sign(u, u_hat):
    """Max-entry distance between two vectors, minimized over a global sign flip.

    ``u`` and ``-u`` generate the same reflection, so recovery is assessed as
    ``min(max_i |u_i - v_i|, max_i |u_i + v_i|)``.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(u_hat, dtype=np.float64)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"shape mismatch: {u.shape} vs {v.shape}")
    return float(min(np.max(np.abs(u - v)), np.max(np.abs(u + v))))
