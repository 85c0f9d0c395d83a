"""Lossless CSV matrix files and stable JSON results.

Matrices are headerless row-major CSV. Real values are written with Python's
shortest round-trip decimal repr, so a load reproduces the in-memory doubles
bit for bit; binary matrices are written as literal 0/1.
"""

import json

import numpy as np

__all__ = [
    "save_real_matrix",
    "save_binary_matrix",
    "save_vector",
    "load_matrix",
    "load_vector",
    "dump_json",
]


def save_real_matrix(path, M):
    M = np.atleast_2d(np.asarray(M, dtype=np.float64))
    with open(path, "w", encoding="ascii") as fh:
        for row in M:
            fh.write(",".join(repr(float(v)) for v in row))
            fh.write("\n")


def save_binary_matrix(path, M):
    M = np.atleast_2d(np.asarray(M))
    if not np.all((M == 0) | (M == 1)):
        raise ValueError("matrix entries must be exactly 0 or 1")
    with open(path, "w", encoding="ascii") as fh:
        for row in M:
            fh.write(",".join("1" if v else "0" for v in row))
            fh.write("\n")


def save_vector(path, v):
    """Write a vector as a single CSV row."""
    save_real_matrix(path, np.asarray(v, dtype=np.float64).reshape(1, -1))


def load_matrix(path):
    return np.loadtxt(path, delimiter=",", dtype=np.float64, ndmin=2)


def load_vector(path):
    v = load_matrix(path)
    if v.shape[0] != 1:
        raise ValueError(f"expected a single-row vector file, got shape {v.shape}")
    return v[0]


def dump_json(path, obj):
    """Write JSON with keys in insertion order and a trailing newline."""
    with open(path, "w", encoding="ascii") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
