"""Exact zero-error recovery by exhausting binary column guesses.

For one observed column ``y`` and a guessed binary column ``x`` of the
coefficients, ``y = x - 2 u (u^T x)`` pins ``u`` in closed form: with
``d = x - y``, a solution exists iff ``||d||^2 = 2 d^T x``, and then
``u = d / ||d||``. Collecting the candidates of two distinct observed
columns and intersecting them identifies the generator uniquely, after
which every coefficient column is read back through the reflection.
"""

from dataclasses import dataclass

import numpy as np

from .householder import HouseholderReflection
from .validation import check_data_matrix

__all__ = [
    "DistinctColumnsError",
    "ColumnGuessSolution",
    "solve_u_from_column",
    "enumerate_column_candidates",
    "match_candidates",
    "exact_recover",
    "nonbinary_ambiguity_example",
]

DEFAULT_N_MAX = 20
DEFAULT_TOL = 1e-8

_ENUM_CHUNK = 1 << 14


class DistinctColumnsError(ValueError):
    """Raised when the data has fewer than two distinct columns."""


@dataclass(frozen=True, eq=False)
class ColumnGuessSolution:
    """Generator candidate pinned by one binary guess for one observed column.

    ``u_candidate`` carries the canonical sign (first entry above 1e-12 in
    magnitude is positive) and is ``None`` when ``degenerate`` is true: a
    guess equal to the observed column only constrains the generator to the
    hyperplane orthogonal to the guess.
    """

    u_candidate: np.ndarray | None
    guess: np.ndarray
    degenerate: bool


def _canonical_sign(u):
    for v in u:
        if abs(v) > 1e-12:
            return u if v > 0 else -u
    return u


def solve_u_from_column(y, x, tol=DEFAULT_TOL):
    """Solve ``y = x - 2 u (u^T x)`` for ``u`` given a binary guess ``x``.

    Returns a :class:`ColumnGuessSolution`, or ``None`` when the consistency
    identity ``||x - y||^2 = 2 (x - y)^T x`` fails beyond ``tol`` (no unit
    vector maps the guess to the observation).
    """
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if y.ndim != 1 or x.shape != y.shape:
        raise ValueError(f"shape mismatch: y {y.shape}, x {x.shape}")
    if not np.all(np.isfinite(y)):
        raise ValueError("observed column must be finite")
    if not np.all((x == 0.0) | (x == 1.0)):
        raise ValueError("guess must be a binary vector")
    d = x - y
    dd = float(d @ d)
    if dd == 0.0:
        return ColumnGuessSolution(u_candidate=None, guess=x.copy(), degenerate=True)
    if abs(dd - 2.0 * float(d @ x)) > tol * max(1.0, dd):
        return None
    u = _canonical_sign(d / np.sqrt(dd))
    return ColumnGuessSolution(u_candidate=u, guess=x.copy(), degenerate=False)


def _dedup(solutions, tol):
    """Drop sign-folded duplicates, keeping a deterministic sorted order."""
    solutions.sort(key=lambda s: tuple(s.u_candidate))
    kept = []
    for sol in solutions:
        if any(
            np.max(np.abs(sol.u_candidate - k.u_candidate)) <= tol for k in kept
        ):
            continue
        kept.append(sol)
    return kept


def enumerate_column_candidates(y, n_max=DEFAULT_N_MAX, tol=DEFAULT_TOL):
    """Try every binary guess for one observed column; return the pinned candidates.

    Runs the closed-form solve over all 2^n guesses (vectorized in chunks),
    keeping non-degenerate consistent solutions deduplicated up to sign.
    Refuses n above ``n_max``: the enumeration is inherently exponential.
    """
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1:
        raise ValueError(f"expected a vector, got shape {y.shape}")
    if not np.all(np.isfinite(y)):
        raise ValueError("observed column must be finite")
    n = y.size
    if n > n_max:
        raise ValueError(
            f"n = {n} needs 2^{n} guesses; refusing above n_max = {n_max} "
            "(pass a larger n_max to override)"
        )
    bit_positions = np.arange(n, dtype=np.int64)
    total = 1 << n
    found = []
    for start in range(0, total, _ENUM_CHUNK):
        codes = np.arange(start, min(start + _ENUM_CHUNK, total), dtype=np.int64)
        X = ((codes[:, None] >> bit_positions) & 1).astype(np.float64)
        D = X - y
        dd = np.einsum("ij,ij->i", D, D)
        dx = np.einsum("ij,ij->i", D, X)
        ok = (dd > 0.0) & (np.abs(dd - 2.0 * dx) <= tol * np.maximum(1.0, dd))
        for i in np.flatnonzero(ok):
            u = _canonical_sign(D[i] / np.sqrt(dd[i]))
            found.append(
                ColumnGuessSolution(u_candidate=u, guess=X[i].copy(), degenerate=False)
            )
    return _dedup(found, tol)


def match_candidates(first, second, tol=DEFAULT_TOL):
    """Intersect two candidate lists up to sign at tolerance ``tol``.

    Both lists must hold canonical-sign candidates (as produced by
    :func:`enumerate_column_candidates`); returns the members of ``first``
    that appear in ``second``.
    """
    return [
        a
        for a in first
        if any(
            np.max(np.abs(a.u_candidate - b.u_candidate)) <= tol for b in second
        )
    ]


def _binary_readback(u, Y, tol):
    """Coefficients X = H_u @ Y if they are binary within ``tol``, else None."""
    X = HouseholderReflection(u) @ Y
    rounded = np.rint(X)
    if np.max(np.abs(X - rounded)) > tol:
        return None
    if not np.all((rounded == 0.0) | (rounded == 1.0)):
        return None
    return rounded.astype(np.uint8)


def exact_recover(Y, n_max=DEFAULT_N_MAX, tol=DEFAULT_TOL):
    """Recover (u, X) exactly from ``Y`` by brute force over column guesses.

    Intersects the candidate sets of the first two distinct columns; a
    candidate survives only if reading every coefficient column back through
    its reflection gives binary entries within ``tol``. A column equal to its
    own coefficient column pins nothing (the guess is degenerate), which can
    leave the pinned intersection empty even for valid data, so an empty
    intersection falls back to verifying each column's candidates against the
    whole matrix. Returns ``(u, X)`` on a unique surviving generator, ``None``
    when none or several survive, and raises :class:`DistinctColumnsError`
    when all columns coincide (two distinct columns are what pins the
    generator down).
    """
    Y = check_data_matrix(Y)
    n, p = Y.shape
    if n > n_max:
        raise ValueError(
            f"n = {n} needs 2^{n} guesses; refusing above n_max = {n_max} "
            "(pass a larger n_max to override)"
        )
    first = Y[:, 0]
    second = None
    for j in range(1, p):
        if not np.array_equal(Y[:, j], first):
            second = Y[:, j]
            break
    if second is None:
        raise DistinctColumnsError(
            "need at least two distinct columns to pin the generator"
        )
    c_first = enumerate_column_candidates(first, n_max=n_max, tol=tol)
    c_second = enumerate_column_candidates(second, n_max=n_max, tol=tol)
    pool = match_candidates(c_first, c_second, tol=tol)
    if not pool:
        pool = _dedup(list(c_first) + list(c_second), tol)
    winners = []
    for cand in pool:
        X = _binary_readback(cand.u_candidate, Y, tol)
        if X is None:
            continue
        if any(
            np.max(np.abs(cand.u_candidate - u)) <= tol for u, _ in winners
        ):
            continue
        winners.append((cand.u_candidate, X))
    if len(winners) != 1:
        return None
    return winners[0]


def nonbinary_ambiguity_example():
    """Two different reflection/coefficient pairs with the same product column.

    Returns ``(H1, x1, H2, x2)`` where ``H1 @ x1 == H2 @ x2 == [0, -1]`` and
    ``x1`` is not binary: with real-valued coefficients the factorization is
    not unique, which is exactly why the binary restriction matters.
    """
    h1 = HouseholderReflection([np.sqrt(1.0 / 3.0), np.sqrt(2.0 / 3.0)])
    x1 = np.array([2.0 * np.sqrt(2.0) / 3.0, 1.0 / 3.0])
    h2 = HouseholderReflection([1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0)])
    x2 = np.array([1.0, 0.0])
    return h1, x1, h2, x2
