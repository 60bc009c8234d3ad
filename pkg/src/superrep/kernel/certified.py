"""Certified rank/kernel for large exact systems.

Strategy: eliminate mod a ~31-bit prime (fast jit kernel), then

* rank lower bound: the pivot submatrix is nonsingular mod p, hence has
  nonzero integer determinant, hence the exact rank is >= r;
* rank upper bound: the mod-p kernel basis is lifted by CRT + rational
  reconstruction and re-verified exactly (A @ K == 0 over the integers),
  giving nullity >= n - r.

Together these pin the exact rank and an exact kernel basis.  Unlucky primes
only cost retries; they can never produce a wrong certified answer.
"""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from .intmat import qmat_to_int, safe_matmul
from .matrix import QMat, rank_kernel_image
from .scalars import clear_denominators, crt_pair, prime_stream, rational_reconstruct
from .modkernels import rref_mod


class CertificationError(RuntimeError):
    pass


def _kernel_mod(a: np.ndarray, p: int):
    """(pivot cols, free cols, sparse kernel rows mod p) for int64 matrix a."""
    r = a % p
    piv = [int(x) for x in rref_mod(r, p)]
    n = a.shape[1]
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    kern = []
    for f in free:
        row = {f: 1}
        for k, j in enumerate(piv):
            c = int(r[k, f])
            if c:
                row[j] = p - c
        kern.append(row)
    return piv, free, kern


def rank_kernel_certified(mat: QMat, seed: int = 0, max_primes: int = 12):
    """Exact (rank, kernel_basis, pivot_columns) for a QMat, certified.

    Same contract as :func:`superrep.kernel.matrix.rank_kernel_image`; the
    result is exact (never merely probabilistic).
    """
    a, _den = qmat_to_int(mat)
    if a.dtype == object:
        return rank_kernel_image(mat)  # entries exceed int64; go direct
    n = a.shape[1]
    if a.size == 0 or not a.any():
        return 0, [{j: mpq(1)} for j in range(n)], []

    primes = prime_stream(seed)
    best_rank = -1
    piv = free = None
    residues: list[tuple[int, list[dict]]] = []
    for _ in range(max_primes):
        p = next(primes)
        piv_p, free_p, kern_p = _kernel_mod(a, p)
        if len(piv_p) > best_rank:
            best_rank, piv, free = len(piv_p), piv_p, free_p
            residues = [(p, kern_p)]
        elif len(piv_p) == best_rank and free_p == free:
            residues.append((p, kern_p))
        else:
            continue

        # CRT-combine and rationally reconstruct each kernel row (sparse)
        kernel = []
        ok = True
        for t in range(len(free)):
            support = set()
            for _p, kern in residues:
                support |= set(kern[t])
            vec = {}
            for j in support:
                r, m = residues[0][1][t].get(j, 0), residues[0][0]
                for p2, kern2 in residues[1:]:
                    r, m = crt_pair(r, m, kern2[t].get(j, 0), p2)
                q = rational_reconstruct(r, m)
                if q is None:
                    ok = False
                    break
                if q != 0:
                    vec[j] = q
            if not ok:
                break
            kernel.append(vec)
        if not ok:
            continue

        # exact verification A @ K^T == 0; K columns with cleared denominators
        km = np.zeros((n, len(kernel)), dtype=object)
        for t, vec in enumerate(kernel):
            ints, _d = clear_denominators([vec.get(j, 0) for j in sorted(vec)])
            for (j, _), x in zip(sorted(vec.items()), ints):
                km[j, t] = x
        mx = max((abs(int(x)) for x in km.flat), default=0)
        if mx <= (1 << 62) // max(1, int(np.abs(a).max()) * n):
            prod = a @ km.astype(np.int64)
        else:
            prod = safe_matmul(a.astype(object), km)
        if not np.any(prod):
            return best_rank, kernel, piv
    raise CertificationError(
        "failed to certify rank/kernel after %d primes" % max_primes)


def rank_certified(mat: QMat, seed: int = 0) -> int:
    return rank_kernel_certified(mat, seed=seed)[0]


_SMALL = 600  # below this many columns plain mpq elimination is fine


def rank_kernel_auto(mat: QMat, seed: int = 0):
    """Dispatch between direct elimination and the certified modular path."""
    nr, nc = mat.shape
    if nc <= _SMALL and mat.nnz() <= 40000:
        return rank_kernel_image(mat)
    return rank_kernel_certified(mat, seed=seed)


def rank_auto(mat: QMat, seed: int = 0) -> int:
    return rank_kernel_auto(mat, seed=seed)[0]
