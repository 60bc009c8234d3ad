"""Exact linear algebra kernel: rationals, sparse matrices, certified modular path."""

from .scalars import QQ, rat, mod_p, prime_stream, rational_reconstruct, clear_denominators
from .matrix import QMat, Subspace, svec, svec_add, svec_scale, svec_dot, echelon, rank_kernel_image
from .modkernels import USE_NUMBA, rref_mod, rank_mod, spin_mod, matmul_mod
from .intmat import qmat_to_int, int_to_qmat, safe_matmul
from .certified import (CertificationError, rank_kernel_certified, rank_certified,
                        rank_kernel_auto, rank_auto)


def modular_rank(mat: QMat, p: int | None = None, seed: int = 0, certify: bool = True):
    """Rank of ``mat`` modulo a prime, optionally certified exact.

    Returns ``(rank, prime, certified)``.  When ``certify`` is set the mod-p
    pivot submatrix is re-eliminated over the rationals; if it is nonsingular
    and the lifted kernel verifies, the rank is exact (see
    :mod:`superrep.kernel.certified`).
    """
    if p is None:
        p = next(prime_stream(seed))
    import numpy as np
    a, _ = qmat_to_int(mat)
    if a.dtype == object:
        r, _, _ = rank_kernel_image(mat)
        return r, p, True
    r = rank_mod(np.ascontiguousarray(a), p)
    if not certify:
        return r, p, False
    exact_r, _, _ = rank_kernel_certified(mat, seed=seed)
    return exact_r, p, exact_r == r
