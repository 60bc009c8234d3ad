"""Exact integer-scaled dense matrix helpers.

A rational matrix is held as (int64 numpy array, common denominator).  Products
use numpy int64 matmul when an a-priori overflow bound certifies safety, and
fall back to object-dtype (Python int) matmul otherwise.  Both paths are exact.
"""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from .matrix import QMat
from .scalars import clear_denominators

INT64_MAX = (1 << 63) - 1


def qmat_to_int(mat: QMat) -> tuple[np.ndarray, int]:
    """Return (A, d) with mat == A / d exactly; A is int64 or object dtype."""
    vals = []
    for r in mat.rows:
        vals.extend(r.values())
    ints, d = clear_denominators(vals)
    big = any(abs(x) > INT64_MAX for x in ints)
    a = np.zeros(mat.shape, dtype=object if big else np.int64)
    k = 0
    for i, r in enumerate(mat.rows):
        for j in r:
            a[i, j] = ints[k]
            k += 1
    return a, d


def int_to_qmat(a: np.ndarray, d: int = 1) -> QMat:
    m = QMat(a.shape[0], a.shape[1])
    for i in range(a.shape[0]):
        row = a[i]
        for j in np.nonzero(row)[0]:
            m.rows[i][int(j)] = mpq(int(row[j]), d)
    return m


def safe_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact a @ b for integer matrices, guarding against int64 overflow."""
    if a.dtype == np.int64 and b.dtype == np.int64 and a.size and b.size:
        bound = int(np.abs(a).max()) * int(np.abs(b).max()) * max(1, a.shape[1])
        if bound <= INT64_MAX:
            return a @ b
    return a.astype(object) @ b.astype(object)


def max_abs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0
