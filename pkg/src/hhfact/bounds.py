"""Closed-form failure-probability bounds and the column-count planner.

Both bounds are Hoeffding-type upper bounds on tail events, clamped to 1 so
they always read as probabilities. They can be loose by orders of magnitude;
empirical validation against them must therefore be one-sided.
"""

import math

__all__ = ["theta_bound", "u_recovery_bound", "plan_columns"]


def theta_bound(n, p, t):
    """Bound P(|theta_hat - theta| > t) by ``min(1, 2 exp(-2 t^2 n p))``."""
    n, p = int(n), int(p)
    if n < 1 or p < 1:
        raise ValueError(f"need n, p >= 1, got n={n}, p={p}")
    t = float(t)
    if t <= 0.0:
        raise ValueError(f"need t > 0, got {t!r}")
    return min(1.0, 2.0 * math.exp(-2.0 * t * t * n * p))


def u_recovery_bound(n, p, theta, c, t):
    """Bound P(max-entry error of u_hat > t) by ``min(1, 2n exp(-8 t^2 c^2 theta^2 p))``.

    ``c`` is the entry sum of the generator and must be nonzero: at ``c = 0``
    the row-sum statistics carry no signal and no guarantee exists.
    """
    n, p = int(n), int(p)
    if n < 1 or p < 0:
        raise ValueError(f"need n >= 1 and p >= 0, got n={n}, p={p}")
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie strictly in (0, 1), got {theta!r}")
    c = float(c)
    if c == 0.0:
        raise ValueError("the bound requires a nonzero generator entry sum c")
    t = float(t)
    if t <= 0.0:
        raise ValueError(f"need t > 0, got {t!r}")
    return min(1.0, 2.0 * n * math.exp(-8.0 * t * t * c * c * theta * theta * p))


def plan_columns(n, theta, c, t):
    """Smallest column count making the union-bounded failure rate at most 1/n.

    Solves ``2 n exp(-8 t^2 c^2 theta^2 p) <= 1/n`` for ``p`` and rounds up:
    ``ceil(log(2 n^2) / (8 t^2 theta^2 c^2))``.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    theta = float(theta)
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie strictly in (0, 1), got {theta!r}")
    c = float(c)
    if c == 0.0:
        raise ValueError("the planner requires a nonzero generator entry sum c")
    t = float(t)
    if t <= 0.0:
        raise ValueError(f"need t > 0, got {t!r}")
    return math.ceil(math.log(2.0 * n * n) / (8.0 * t * t * theta * theta * c * c))
