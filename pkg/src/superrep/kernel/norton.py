"""Norton irreducibility test for a set of matrices over a prime field.

`irreducible_mod(ops, p, seed)` certifies that the common row-module of the
operators has no proper invariant subspace mod p, or returns one.  A mod-p
irreducibility certificate implies irreducibility over the rationals for any
prime not dividing the cleared denominators: a proper rational invariant
subspace meets the integer lattice in a saturated sublattice whose reduction
stays proper, nonzero, and invariant.
"""

from __future__ import annotations

import random

import numpy as np

from .modkernels import rref_mod, spin_mod


def _kernel_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right kernel of a mod p."""
    m = a.copy() % p
    piv = rref_mod(m, p)
    n = a.shape[1]
    free = [j for j in range(n) if j not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = 1
        for r, c in enumerate(piv):
            out[t, c] = (-int(m[r, j])) % p
    return out


def _random_word(ops, p, rng, length=3):
    n = ops[0].shape[0]
    z = np.zeros((n, n), dtype=np.int64)
    for _ in range(length):
        w = np.eye(n, dtype=np.int64)
        for _ in range(rng.randrange(1, 4)):
            w = (w @ ops[rng.randrange(len(ops))]) % p
        z = (z + rng.randrange(1, p) * w) % p
    return z


def irreducible_mod(ops, p: int, seed: int = 0, tries: int = 40):
    """(True, None) if the module is irreducible mod p, else (False, W) with W
    an echelonized basis (rows) of a proper nonzero invariant subspace, or
    (None, None) if no singular word was found (inconclusive)."""
    n = ops[0].shape[0]
    if n == 1:
        return True, None
    rng = random.Random(seed)
    ops = np.stack([o % p for o in ops])
    opsT = np.stack([o.T.copy() for o in ops])
    candidates = list(ops) + [_random_word(ops, p, rng) for _ in range(tries)]
    best = None
    for z in candidates:
        ker = _kernel_mod(z, p)
        if 0 < ker.shape[0] < n:
            if best is None or ker.shape[0] < best[1].shape[0]:
                best = (z, ker)
            if ker.shape[0] == 1:
                break
    if best is None:
        return None, None
    z, ker = best
    for v in ker:
        w = spin_mod(v.reshape(1, -1), opsT, p)
        if w.shape[0] < n:
            return False, w
    # dual spin of one transposed kernel vector
    kerT = _kernel_mod(z.T.copy(), p)
    w = spin_mod(kerT[:1], ops, p)
    if w.shape[0] < n:
        # orthogonal complement of an invariant subspace of the dual module
        comp = _kernel_mod(w, p)
        comp = comp % p
        rref_mod(comp, p)
        return False, comp[np.any(comp, axis=1)]
    return True, None
