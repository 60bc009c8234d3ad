"""Exterior powers of the standard osp module and the Casimir operator."""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from gmpy2 import mpq

from ..kernel.matrix import QMat, echelon
from .module import Module, ModuleError, trivial_module


def standard_module(alg, validate=True) -> Module:
    """The defining (m|2n)-dimensional module of osp."""
    act = []
    for m in alg.rep_matrices:
        q = QMat(m.nrows, m.ncols)
        for i, row in enumerate(m.rows):
            for j, v in row.items():
                q.set(i, j, v)
        act.append(q)
    return Module(alg, list(alg.space_parity), act, name="V",
                  flavor="lie", validate=validate)


def _perm_coeff(perm, parities):
    """Coefficient of e_{perm} when super-antisymmetrizing a sorted
    tuple: product of -(-1)^{p q} over the inversions."""
    coeff = mpq(1)
    lst = list(perm)
    n = len(lst)
    for a in range(n):
        for b in range(n - 1 - a):
            if lst[b] > lst[b + 1]:
                pq = parities[lst[b]] * parities[lst[b + 1]]
                coeff *= mpq(-1) * (mpq(-1) if pq % 2 else mpq(1))
                lst[b], lst[b + 1] = lst[b + 1], lst[b]
    return coeff


def lambda_power_module(alg, a: int, validate=True) -> Module:
    """Super exterior power of the standard module, realized inside the
    a-fold tensor power.  Repeats are allowed only at odd indices."""
    if a < 0:
        raise ModuleError("negative exterior power")
    if a == 0:
        t = trivial_module(alg)
        t.name = "Lambda^0(V)"
        return t
    v = standard_module(alg, validate=validate)
    if a == 1:
        v.name = "Lambda^1(V)"
        return v
    t = v
    for _ in range(a - 1):
        t = v.tensor(t)
    d = v.dim
    par = v.parity
    gens = []
    for multi in combinations_with_replacement(range(d), a):
        if any(multi[i] == multi[i + 1] and par[multi[i]] == 0
               for i in range(a - 1)):
            continue
        vec = {}
        seen = set()
        for perm in permutations(multi):
            if perm in seen:
                continue
            seen.add(perm)
            pos = 0
            for x in perm:
                pos = pos * d + x
            c = _perm_coeff(perm, par)
            vec[pos] = vec.get(pos, mpq(0)) + c
        vec = {k: c for k, c in vec.items() if c}
        if vec:
            gens.append(vec)
    sub, _ = t.submodule(gens, name="Lambda^%d(V)" % a)
    return sub


def supertrace_gram(alg) -> QMat:
    """Gram matrix of the supertrace form of the defining representation."""
    n = alg.dim
    sp = alg.space_parity
    g = QMat(n, n)
    mats = alg.rep_matrices
    for i in range(n):
        for j in range(n):
            prod = mats[i].matmul(mats[j])
            tr = mpq(0)
            for k in range(len(sp)):
                v = prod[k, k]
                tr += -v if sp[k] else v
            if tr:
                # normalize to the root-system form in which the even
                # orthogonal weights are orthonormal
                g.set(i, j, -tr / 2)
    return g


def _inverse(g: QMat) -> QMat:
    n = g.nrows
    rows = []
    for i, row in enumerate(g.rows):
        r = dict(row)
        r[n + i] = mpq(1)
        rows.append(r)
    erows, pivots = echelon(rows, 2 * n, reduce=True)
    if pivots != list(range(n)):
        raise ModuleError("supertrace form is degenerate")
    inv = QMat(n, n)
    for i, r in enumerate(erows):
        for j, v in r.items():
            if j >= n:
                inv.set(i, j - n, v)
    return inv


def casimir_matrix(mod: Module) -> QMat:
    """Quadratic Casimir sum(i,j) (G^-1)_{ji} rho(x_i) rho(x_j) built from
    the supertrace form of the defining representation."""
    alg = mod.alg
    ginv = _inverse(supertrace_gram(alg))
    out = QMat(mod.dim, mod.dim)
    for i in range(alg.dim):
        for j, c in ginv.rows[i].items():
            out = out.add(mod.action[i].matmul(mod.action[j]), c)
    return out


def casimir_scalar(mod: Module):
    """The scalar by which the Casimir acts, verified entrywise; raises
    if the action is not scalar."""
    m = casimir_matrix(mod)
    lam = m[0, 0]
    sc = QMat.identity(mod.dim).scale(lam)
    if not m.add(sc, -1).is_zero():
        raise ModuleError("Casimir does not act as a scalar on %s"
                          % mod.name)
    return lam
