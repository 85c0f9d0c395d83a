"""Scikit-learn estimator wrapping the factorization recovery.

Follows the sklearn sample convention: each ROW of the input is one observed
vector, i.e. the input is the transpose of the n x p product matrix used by
the functional API. ``fit`` learns the reflection dictionary, ``transform``
returns the binary codes.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils import check_array
from sklearn.utils.validation import check_is_fitted

from .exact import exact_recover
from .recovery import DEFAULT_THRESHOLD, recover_factors

__all__ = ["HouseholderDictionaryLearning"]


class HouseholderDictionaryLearning(BaseEstimator, TransformerMixin):
    """Learn a single-reflection orthogonal dictionary and binary codes.

    Models each sample (row) as ``code @ H`` for one shared Householder
    reflection ``H = I - 2 u u^T`` and a binary code vector. Because the
    reflection is symmetric and involutory, encoding and decoding are the
    same O(n) product with the learned generator.

    Parameters
    ----------
    algorithm : {'threshold', 'exact'}, default='threshold'
        'threshold' runs the O(n_samples * n_features) moment pipeline and
        hard-thresholds the codes; 'exact' brute-forces binary column guesses
        (exponential in n_features, refused above ``n_max``) and requires a
        noiseless input with two distinct samples.
    threshold : float, default=0.5
        Hard-threshold level used when binarizing codes.
    n_max : int, default=20
        Feature-count guard for the exact algorithm.

    Attributes
    ----------
    u_ : ndarray of shape (n_features,)
        Generator of the learned reflection, unit norm.
    theta_ : float or None
        Estimated code density ('threshold' algorithm only).
    c_squared_ : float or None
        Estimated squared entry sum of the generator ('threshold' only).
    diagnostics_ : Diagnostics or None
        Clamp/fallback flags from the pipeline ('threshold' only).
    n_features_in_ : int
        Number of features seen during fit.
    """

    def __init__(self, algorithm="threshold", threshold=DEFAULT_THRESHOLD, n_max=20):
        self.algorithm = algorithm
        self.threshold = threshold
        self.n_max = n_max

    def fit(self, X, y=None):
        """Learn the reflection generator from observed samples.

        Parameters
        ----------
        X : array-like of shape (n_samples, n_features)
            Observed vectors, one per row.
        y : ignored
        """
        X = check_array(X, dtype=np.float64, ensure_min_features=2)
        if self.algorithm == "threshold":
            result = recover_factors(X.T, threshold=self.threshold)
            self.u_ = result.u_hat
            self.theta_ = result.theta_hat
            self.c_squared_ = result.c_squared_hat
            self.diagnostics_ = result.diagnostics
        elif self.algorithm == "exact":
            recovered = exact_recover(X.T, n_max=self.n_max)
            if recovered is None:
                raise ValueError(
                    "no exact reflection/binary factorization fits the data"
                )
            self.u_ = recovered[0]
            self.theta_ = None
            self.c_squared_ = None
            self.diagnostics_ = None
        else:
            raise ValueError(
                f"algorithm must be 'threshold' or 'exact', got {self.algorithm!r}"
            )
        self.n_features_in_ = X.shape[1]
        return self

    def _reflect(self, X):
        return X - 2.0 * np.outer(X @ self.u_, self.u_)

    def transform(self, X):
        """Binary codes of the samples under the learned reflection."""
        check_is_fitted(self, "u_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}"
            )
        return (self._reflect(X) >= self.threshold).astype(np.float64)

    def inverse_transform(self, X):
        """Reconstruct observed vectors from codes (the reflection is its own inverse)."""
        check_is_fitted(self, "u_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}"
            )
        return self._reflect(X)
