"""Randomized-but-verified structure analysis of finite-dimensional modules.

Simplicity is decided by a Norton-style test over a large prime field;
a positive answer is exact because the action matrices are p-integral
after denominator clearing (a proper rational submodule would reduce to
a proper one mod p).  Any claimed proper submodule is lifted by rational
reconstruction and re-verified by an exact spin over the rationals.

The radical is computed exactly as the intersection of the kernels of
all intertwiners onto the simple composition factors; the quotient is
then semisimple by construction, and minimality holds because every
simple quotient of the module occurs among its composition factors.
"""

from __future__ import annotations

import numpy as np

from ..kernel.intmat import qmat_to_int
from ..kernel.matrix import QMat, Subspace, svec
from ..kernel.modkernels import rref_mod
from ..kernel.norton import irreducible_mod
from ..kernel.scalars import prime_stream, rational_reconstruct
from .module import Module, ModuleError, hom_space


def _int_ops(mod: Module):
    """Action matrices with denominators cleared (per generator), as int64
    numpy arrays, plus the set of primes that must be avoided."""
    ops = []
    bad = set()
    for m in mod.action:
        a, d = qmat_to_int(m)
        ops.append(np.asarray(a, dtype=object))
        bad.add(int(d))
    return ops, bad

def _ops_mod(ops, p):
    return np.stack([np.asarray(a % p, dtype=np.int64) for a in ops])


def spin(mod: Module, vectors) -> Subspace:
    """Exact closure of the span of `vectors` under the action."""
    sub = Subspace(mod.dim)
    queue = [svec(v) if isinstance(v, dict) else {i: c for i, c in
             enumerate(v) if c} for v in vectors]
    while queue:
        v = queue.pop()
        if not sub.add(v):
            continue
        for m in mod.action:
            if m.nnz():
                queue.append(m.apply(v))
    return sub


def _lift_witness(mod: Module, w_rows: np.ndarray, p: int):
    """Rational-reconstruct an echelonized mod-p witness and spin it."""
    a = np.asarray(w_rows, dtype=np.int64) % p
    piv = rref_mod(a, p)
    cand = []
    for row in a[:len(piv)]:
        v = {}
        for j, x in enumerate(row):
            if x:
                q = rational_reconstruct(int(x), p)
                if q is None:
                    return None
                v[j] = q
        cand.append(v)
    sub = spin(mod, cand)
    if 0 < sub.dim < mod.dim:
        return sub
    return None


def find_proper_submodule(mod: Module, seed: int = 0, max_primes: int = 8):
    """A proper nonzero invariant subspace (exact), or None when the module
    is certified simple.  Raises if the search is inconclusive."""
    if mod.dim == 0:
        raise ModuleError("zero module")
    if mod.dim == 1:
        return None
    ops, bad = _int_ops(mod)
    primes = prime_stream(seed)
    used = 0
    inconclusive = 0
    while used < max_primes:
        p = next(primes)
        if any(b % p == 0 for b in bad):
            continue
        used += 1
        verdict, w = irreducible_mod(_ops_mod(ops, p), p, seed=seed + used)
        if verdict is True:
            return None
        if verdict is False:
            sub = _lift_witness(mod, w, p)
            if sub is not None:
                return sub
            continue  # lift failed; try another prime
        inconclusive += 1
    # deterministic exact fallback: spin every basis vector
    for i in range(mod.dim):
        sub = spin(mod, [{i: 1}])
        if sub.dim < mod.dim:
            return sub
    if inconclusive == used:
        # every tried prime came back undecided yet every spin is full;
        # a proper submodule would have to avoid all coordinate vectors,
        # which a cyclic search cannot rule out
        raise ModuleError("simplicity test inconclusive for %s" % mod.name)
    return None


def meataxe_is_simple(mod: Module, seed: int = 0) -> bool:
    return find_proper_submodule(mod, seed=seed) is None


def certificate(mod: Module) -> dict:
    """Identity data of a simple module: dimensions, central character,
    extremal weight."""
    ch = mod.central_character()
    if isinstance(ch, tuple):
        ch = {"generalized": {k: [str(v), d] for k, (v, d) in ch[1].items()}}
    else:
        ch = {k: str(v) for k, v in ch.items()}
    ws = mod.weights()
    top = None
    if ws:
        pairs = sorted((tuple(w), mod.parity[i]) for i, w in enumerate(ws))
        top = [list(pairs[-1][0]), pairs[-1][1]]
    ev, od = mod.superdim
    return {"dim": mod.dim, "superdim": [ev, od], "central_character": ch,
            "top_weight": top, "name": mod.name}


def composition_series(mod: Module, seed: int = 0):
    """Simple factors along an (unspecified) composition filtration,
    listed from a bottom layer upward."""
    if mod.dim == 0:
        return []
    sub = find_proper_submodule(mod, seed=seed)
    if sub is None:
        return [mod]
    w, _ = mod.submodule(sub.basis(), name="%s.sub" % mod.name)
    q, _ = mod.quotient(sub.basis(), name="%s.quo" % mod.name)
    return composition_series(w, seed) + composition_series(q, seed)


def is_isomorphic(m: Module, n: Module, seed: int = 0) -> bool:
    """True iff there is an even invertible intertwiner (verified exactly)."""
    if m.dim != n.dim or m.superdim != n.superdim:
        return False
    homs = hom_space(m, n, parity=0, seed=seed)
    if not homs:
        return False
    rng = np.random.default_rng(seed)
    for _ in range(6):
        t = QMat(n.dim, m.dim)
        for h in homs:
            t = t.add(h, int(rng.integers(1, 50)))
        from ..kernel.certified import rank_auto
        if rank_auto(t, seed=seed) == m.dim:
            return True
    return False


def _distinct_simples(factors, seed=0):
    reps = []
    for f in factors:
        if not any(is_isomorphic(f, r, seed) for r in reps):
            reps.append(f)
    return reps


def radical(mod: Module, simples=None, seed: int = 0):
    """Exact radical as a Subspace: intersection of the kernels of all
    intertwiners (both parities) onto the simple composition factors."""
    if simples is None:
        simples = _distinct_simples(composition_series(mod, seed), seed)
    rows = []
    for s in simples:
        for par in (0, 1):
            for t in hom_space(mod, s, parity=par, seed=seed):
                rows.extend(dict(r) for r in t.rows)
    from ..kernel.certified import rank_kernel_auto
    _, ker, _ = rank_kernel_auto(QMat.from_rows(rows, mod.dim), seed=seed)
    return Subspace(mod.dim, ker)


class FiltrationReport:
    """Ordered semisimple layers of a filtration, top layer first."""

    def __init__(self, mod: Module, layers, layer_modules):
        self.module_name = mod.name
        self.total_dim = mod.dim
        self.layers = layers              # list of lists of certificates
        self.layer_modules = layer_modules

    @property
    def length(self):
        return sum(len(l) for l in self.layers)

    def check(self):
        if sum(sum(c["dim"] for c in l) for l in self.layers) \
                != self.total_dim:
            raise ModuleError("filtration layers do not fill the module")
        return True

    def to_dict(self):
        return {"module": self.module_name, "total_dim": self.total_dim,
                "layers": self.layers}


def radical_series(mod: Module, seed: int = 0) -> FiltrationReport:
    """Layers M/rad M, rad M/rad^2 M, ... (top first), each decomposed
    into simple certificates."""
    simples = _distinct_simples(composition_series(mod, seed), seed)
    layers, mods = [], []
    cur = mod
    while cur.dim:
        rad = radical(cur, simples=simples, seed=seed)
        if rad.dim == cur.dim:
            raise ModuleError("radical failed to shrink")
        head, _ = cur.quotient(rad.basis(), name="%s.layer" % mod.name)
        layers.append([certificate(f)
                       for f in composition_series(head, seed)])
        mods.append(head)
        if rad.dim == 0:
            break
        cur, _ = cur.submodule(rad.basis(), name="%s.rad" % mod.name)
    rep = FiltrationReport(mod, layers, mods)
    rep.check()
    return rep


def socle(mod: Module, seed: int = 0):
    """Largest semisimple submodule, as a Subspace: sum of images of all
    intertwiners from the simple composition factors."""
    simples = _distinct_simples(composition_series(mod, seed), seed)
    sub = Subspace(mod.dim)
    for s in simples:
        for par in (0, 1):
            for t in hom_space(s, mod, parity=par, seed=seed):
                for j in range(s.dim):
                    sub.add(t.col(j))
    return sub
