"""Dense mod-p elimination kernels: numba @njit with a pure-numpy fallback.

The fallback is selected by setting the env var ``SUPERREP_NO_NUMBA=1`` before
import (or when numba is unavailable).  Both paths are exact integer
arithmetic; primes are ~31 bits so products fit in int64.
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("SUPERREP_NO_NUMBA", "") not in ("1", "true", "yes")
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

__all__ = ["USE_NUMBA", "rref_mod", "rank_mod", "spin_mod", "matmul_mod"]


def _rref_mod_py(a: np.ndarray, p: int) -> np.ndarray:
    """In-place reduced row echelon form of ``a`` mod p (numpy fallback).

    Returns the pivot column indices.
    """
    nrows, ncols = a.shape
    piv_cols = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        piv_cols.append(c)
        r += 1
    return np.array(piv_cols, dtype=np.int64)


def _spin_mod_py(vecs, ops, p):
    """Close the row space of ``vecs`` under right action... see spin_mod."""
    n = vecs.shape[1]
    basis = np.zeros((n, n), dtype=np.int64)   # row i has pivot at col i when used
    have = np.zeros(n, dtype=np.bool_)

    def insert(v):
        v = v % p
        while True:
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                return -1
            j = int(nz[0])
            if not have[j]:
                inv = pow(int(v[j]), p - 2, p)
                basis[j] = (v * inv) % p
                have[j] = True
                return j
            v = (v - v[j] * basis[j]) % p

    queue = []
    for v in vecs:
        j = insert(v.copy())
        if j >= 0:
            queue.append(j)
    while queue:
        j = queue.pop()
        v = basis[j].copy()
        for k in range(ops.shape[0]):
            w = (v @ ops[k]) % p
            t = insert(w)
            if t >= 0:
                queue.append(t)
    rows = np.nonzero(have)[0]
    return basis[rows]


def _matmul_mod_py(a, b, p):
    # split to avoid int64 overflow in long dot products: entries < 2^31,
    # products < 2^62; chunk the inner dimension so sums stay < 2^63.
    inner = a.shape[1]
    chunk = max(1, 2 ** 62 // (int(p) * int(p)))
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, inner, chunk):
        out = (out + a[:, s:s + chunk] @ b[s:s + chunk, :]) % p
    return out


if USE_NUMBA:

    @njit(cache=True)
    def _rref_mod_nb(a, p):  # pragma: no cover - exercised via wrapper
        nrows, ncols = a.shape
        piv = np.empty(min(nrows, ncols), dtype=np.int64)
        npiv = 0
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            sel = -1
            for i in range(r, nrows):
                if a[i, c] % p != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                for j in range(ncols):
                    t = a[r, j]
                    a[r, j] = a[sel, j]
                    a[sel, j] = t
            # modular inverse by Fermat
            inv = 1
            base = a[r, c] % p
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(ncols):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(nrows):
                if i != r:
                    f = a[i, c] % p
                    if f != 0:
                        for j in range(ncols):
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
            piv[npiv] = c
            npiv += 1
            r += 1
        return piv[:npiv]

    @njit(cache=True)
    def _insert_nb(v, basis, have, p):  # pragma: no cover
        n = v.shape[0]
        while True:
            j = -1
            for t in range(n):
                if v[t] % p != 0:
                    j = t
                    break
            if j < 0:
                return -1
            if not have[j]:
                inv = 1
                base = v[j] % p
                e = p - 2
                while e > 0:
                    if e & 1:
                        inv = (inv * base) % p
                    base = (base * base) % p
                    e >>= 1
                for t in range(n):
                    basis[j, t] = (v[t] * inv) % p
                have[j] = True
                return j
            f = v[j] % p
            for t in range(n):
                v[t] = (v[t] - f * basis[j, t]) % p

    @njit(cache=True)
    def _spin_mod_nb(vecs, ops, p):  # pragma: no cover
        n = vecs.shape[1]
        basis = np.zeros((n, n), dtype=np.int64)
        have = np.zeros(n, dtype=np.bool_)
        queue = np.empty(n, dtype=np.int64)
        qn = 0
        for i in range(vecs.shape[0]):
            v = vecs[i].copy()
            j = _insert_nb(v, basis, have, p)
            if j >= 0:
                queue[qn] = j
                qn += 1
        while qn > 0:
            qn -= 1
            j = queue[qn]
            for k in range(ops.shape[0]):
                w = np.zeros(n, dtype=np.int64)
                for s in range(n):
                    c = basis[j, s]
                    if c != 0:
                        for t in range(n):
                            w[t] = (w[t] + c * ops[k, s, t]) % p
                t = _insert_nb(w, basis, have, p)
                if t >= 0:
                    queue[qn] = t
                    qn += 1
        cnt = 0
        for j in range(n):
            if have[j]:
                cnt += 1
        out = np.empty((cnt, n), dtype=np.int64)
        c = 0
        for j in range(n):
            if have[j]:
                out[c] = basis[j]
                c += 1
        return out


def rref_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form of int64 matrix ``a`` mod p, in place.

    Returns pivot column indices.
    """
    a %= p
    if a.size == 0:
        return np.empty(0, dtype=np.int64)
    if USE_NUMBA:
        return _rref_mod_nb(a, p)
    return _rref_mod_py(a, p)


def rank_mod(a: np.ndarray, p: int) -> int:
    return int(rref_mod(a.copy(), p).size)


def spin_mod(vecs: np.ndarray, ops: np.ndarray, p: int) -> np.ndarray:
    """Row-echelon basis (mod p) of the smallest subspace containing the rows
    of ``vecs`` and stable under every right-action matrix in ``ops``
    (shape (k, n, n), acting as v -> v @ op)."""
    vecs = vecs % p
    ops = ops % p
    if USE_NUMBA:
        return _spin_mod_nb(vecs, ops, p)
    return _spin_mod_py(vecs, ops, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = a % p
    b = b % p
    return _matmul_mod_py(a, b, p)
