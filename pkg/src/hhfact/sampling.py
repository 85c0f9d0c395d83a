"""Seeded generators for ground-truth problem instances.

Every sampler takes an explicit seed and is deterministic given it; the seed
is anything ``numpy.random.default_rng`` accepts (an int, or a sequence of
ints for derived per-trial streams).
"""

import numpy as np

from .householder import HouseholderReflection
from .validation import check_theta

__all__ = ["sample_unit_vector", "sample_binary_matrix", "make_instance"]


def sample_unit_vector(n, seed, min_abs_c=0.0, max_tries=1000):
    """Draw a uniform random unit vector with ``|sum of entries| >= min_abs_c``.

    Rejection-samples from the uniform distribution on the sphere. The entry
    sum of a unit vector is at most sqrt(n) in absolute value, so thresholds
    beyond that are rejected outright; feasible-but-rare thresholds fail after
    ``max_tries`` draws.
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    min_abs_c = float(min_abs_c)
    if min_abs_c < 0.0:
        raise ValueError("min_abs_c must be nonnegative")
    if min_abs_c > np.sqrt(n):
        raise ValueError(
            f"min_abs_c = {min_abs_c} is infeasible: a unit vector's entry sum "
            f"is at most sqrt(n) = {np.sqrt(n):.6g}"
        )
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        g = rng.standard_normal(n)
        norm = np.linalg.norm(g)
        if norm == 0.0:
            continue
        u = g / norm
        if abs(float(u.sum())) >= min_abs_c:
            return u
    raise RuntimeError(
        f"no unit vector with |entry sum| >= {min_abs_c} in {max_tries} draws; "
        "lower min_abs_c"
    )


def sample_binary_matrix(n, p, theta, seed):
    """Draw an n x p matrix of i.i.d. Bernoulli(theta) entries as float 0/1."""
    n, p = int(n), int(p)
    if n < 1 or p < 1:
        raise ValueError(f"need n, p >= 1, got n={n}, p={p}")
    theta = check_theta(theta)
    rng = np.random.default_rng(seed)
    return (rng.random((n, p)) < theta).astype(np.float64)


def make_instance(n, p, theta, seed, min_abs_c=0.0):
    """Generate a ground-truth triple (u, X, Y) with ``Y = (I - 2uu^T) X``.

    ``seed`` must be an integer; the generator and coefficient draws use the
    derived streams ``[seed, 0]`` and ``[seed, 1]``.
    """
    seed = int(seed)
    u = sample_unit_vector(n, [seed, 0], min_abs_c=min_abs_c)
    X = sample_binary_matrix(n, p, theta, [seed, 1])
    Y = HouseholderReflection(u) @ X
    return u, X, Y
