"""Simplicity test for finite-dimensional superalgebras over QQ.

An algebra is simple iff it has nonzero product and its multiplication module
(the algebra acted on by all left multiplications; right multiplications are
in the same span by super(anti)symmetry) is irreducible.  Irreducibility is
certified mod p, which implies rational irreducibility for primes avoiding
the cleared denominators; a reducible verdict is confirmed by an exact
rational ideal before being reported.
"""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from ..kernel.intmat import qmat_to_int
from ..kernel.matrix import Subspace
from ..kernel.norton import irreducible_mod
from ..kernel.scalars import prime_stream
from .base import Superalgebra


def is_simple_algebra(alg: Superalgebra, seed: int = 0):
    """(True, None) or (False, ideal) with ideal a list of sparse vectors
    spanning a proper nonzero ideal."""
    if not any(alg.table.values()):
        return False, [{i: mpq(1)} for i in range(alg.dim)]
    lmats = [alg.left_mult_matrix({i: mpq(1)}) for i in range(alg.dim)]
    ints = []
    denoms = []
    for m in lmats:
        a, den = qmat_to_int(m)
        ints.append(np.asarray(a, dtype=object))
        denoms.append(den)
    for trial, p in enumerate(prime_stream(seed)):
        if trial >= 8:
            break
        if any(d % p == 0 for d in denoms):
            continue
        ops = [np.asarray(a % p, dtype=np.int64) for a in ints]
        verdict, w = irreducible_mod(ops, p, seed=seed + trial)
        if verdict is True:
            return True, None
        if verdict is False:
            ideal = _exact_ideal_from_hint(alg, lmats, w, p)
            if ideal is not None:
                return False, ideal
    # certification failed; fall back to exhaustive exact search from
    # single basis vectors (catches ideals containing a basis vector)
    for i in range(alg.dim):
        sp = _spin_exact(alg, lmats, {i: mpq(1)})
        if sp.dim < alg.dim:
            return False, sp.basis()
    raise RuntimeError("simplicity undecided for %s" % alg.name)


def _spin_exact(alg, lmats, vec) -> Subspace:
    sp = Subspace(alg.dim, [vec])
    queue = [vec]
    while queue:
        v = queue.pop()
        for m in lmats:
            w = m.apply(v)
            if w and sp.add(w):
                queue.append(w)
    return sp


def _exact_ideal_from_hint(alg, lmats, w, p):
    """Lift a mod-p invariant subspace by spinning rational lifts of its rows;
    returns a proper ideal or None if the hint does not lift."""
    for row in w:
        vec = {j: mpq(int(x)) for j, x in enumerate(row) if x}
        sp = _spin_exact(alg, lmats, vec)
        if 0 < sp.dim < alg.dim:
            return sp.basis()
    return None
