"""Lie superalgebra cohomology.

This module starts with degree-2 cohomology with trivial coefficients, which
classifies central extensions: even cocycles give even central elements, odd
cocycles odd ones.  Cochains live on super-exterior cells (i, j) with i < j,
plus diagonal cells (i, i) for odd i (the divided square); the cocycle
condition is the graded cyclic identity
(-1)^{|x||z|} c([x,y],z) + (-1)^{|x||y|} c([y,z],x) + (-1)^{|y||z|} c([z,x],y) = 0,
whose vanishing on coboundaries is exactly super-Jacobi.
"""

from __future__ import annotations

from gmpy2 import mpq

from .algebras.base import Superalgebra
from .kernel.matrix import QMat, Subspace, rank_kernel_image
from .kernel.certified import rank_auto


def two_cells(alg: Superalgebra, cell_parity: int):
    """Cells of the given total parity."""
    cells = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if i == j and alg.parity[i] == 0:
                continue
            if (alg.parity[i] + alg.parity[j]) % 2 == cell_parity % 2:
                cells.append((i, j))
    return cells


def _cell_coeff(alg, cell_index, m, k):
    """(index, sign) of c(x_m, x_k) in cell coordinates, or None."""
    if m == k and alg.parity[m] == 0:
        return None
    if m <= k:
        t = cell_index.get((m, k))
        return None if t is None else (t, 1)
    t = cell_index.get((k, m))
    if t is None:
        return None
    s = 1 if (alg.parity[m] * alg.parity[k]) % 2 else -1
    return (t, s)


def cocycle_constraints(alg: Superalgebra, cell_parity: int):
    """(constraint matrix rows over the cells, cells)."""
    cells = two_cells(alg, cell_parity)
    cell_index = {c: t for t, c in enumerate(cells)}
    par = alg.parity
    rows = []
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                tot = (par[i] + par[j] + par[k]) % 2
                if tot != cell_parity % 2:
                    continue
                row = {}
                for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                    s = -1 if (par[x] * par[z]) % 2 else 1
                    for m, a in alg.mult_basis(x, y).items():
                        hit = _cell_coeff(alg, cell_index, m, z)
                        if hit is not None:
                            t, sg = hit
                            row[t] = row.get(t, mpq(0)) + s * sg * a
                row = {t: v for t, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows, cells


def coboundary_image(alg: Superalgebra, cells, cell_parity: int):
    """Rows (in cell coordinates) spanning the coboundaries."""
    out = []
    for m in range(alg.dim):
        if alg.parity[m] % 2 != cell_parity % 2:
            continue
        row = {}
        for t, (i, j) in enumerate(cells):
            c = alg.mult_basis(i, j).get(m)
            if c:
                row[t] = c
        if row:
            out.append(row)
    return out


def h2_trivial(alg: Superalgebra, parity: int = 0, representatives: bool = False):
    """dim H^2(g; trivial) in the given parity; optionally also a list of
    representative cocycles as dicts {(i, j): coeff} on cells."""
    rows, cells = cocycle_constraints(alg, parity)
    nc = len(cells)
    _, kern, _ = rank_kernel_image(QMat.from_rows(rows, nc))
    im_rows = coboundary_image(alg, cells, parity)
    image = Subspace(nc, im_rows)
    dim = len(kern) - image.dim
    if not representatives:
        return dim, None
    reps = []
    grow = Subspace(nc, im_rows)
    for v in kern:
        if grow.add(v):
            reps.append({cells[t]: c for t, c in v.items()})
    assert len(reps) == dim
    return dim, reps


# ------------------------------------------------------------------
# Relative Chevalley-Eilenberg cohomology.
#
# A k-cochain is a super-antisymmetric map on (g/h)^k with values in a
# module X, equivariant under a reductive even subalgebra h spanned by
# basis elements.  Cells are non-decreasing tuples of complement
# positions, strict at even positions (even arguments alternate, odd
# arguments are symmetric).

from .kernel.certified import rank_kernel_auto
from .repcat.module import Module, hom_module


class SuperSpace:
    """A parity-graded coordinate space; `cells` optionally records the
    monomial basis it was built from."""

    def __init__(self, parity, cells=None):
        self.parity = list(parity)
        self.cells = cells

    @property
    def dim(self):
        return len(self.parity)

    @property
    def superdim(self):
        odd = sum(self.parity)
        return (len(self.parity) - odd, odd)


def exterior_cells(parity, k):
    """Non-decreasing index tuples, even indices without repetition."""
    cells = [()]
    for _ in range(k):
        nxt = []
        for c in cells:
            start = c[-1] if c else 0
            for i in range(start, len(parity)):
                if c and c[-1] == i and parity[i] % 2 == 0:
                    continue
                nxt.append(c + (i,))
        cells = nxt
    return cells


def super_exterior_power(u: SuperSpace, k: int) -> SuperSpace:
    cells = exterior_cells(u.parity, k)
    par = [sum(u.parity[i] for i in c) % 2 for c in cells]
    return SuperSpace(par, cells)


def _normalize_cell(tup, parity):
    """Sort a tuple into cell order, accumulating the super sign of the
    transpositions; returns (cell, sign) or None when it collapses."""
    lst = list(tup)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j] < lst[j - 1]:
            p, q = parity[lst[j]], parity[lst[j - 1]]
            sign = sign if (p * q) % 2 else -sign
            lst[j], lst[j - 1] = lst[j - 1], lst[j]
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b and parity[a] % 2 == 0:
            return None
    return tuple(lst), sign


def default_relative_subalgebra(alg):
    """Basis indices of the canonical reductive even subalgebra used for
    relative cohomology: the semisimple part of the degree-0 component
    (whole even part for the orthosymplectic family)."""
    labels = alg.basis
    if all(l[0] in "AHBCz" for l in labels):
        return [i for i, l in enumerate(labels) if l[0] in "AH"]
    if "standard" in alg.gradings:
        return [i for i, d in enumerate(alg.gradings["standard"]) if d == 0]
    if "h1" in labels:
        keep = ("h1", "h2", "E12", "E21", "E34", "E43")
        return [i for i, l in enumerate(labels) if l in keep]
    return [i for i in range(alg.dim) if alg.parity[i] % 2 == 0]


class CochainComplex:
    """C^k(g, h; X) for k = 0..kmax with the super Chevalley-Eilenberg
    differential; spaces are pruned by weight (simultaneous ad-diagonal
    elements of h) and cut out by the remaining h-equivariance."""

    def __init__(self, alg, h_idx, x: Module, kmax, parity=0):
        self.alg, self.x, self.parity = alg, x, parity % 2
        self.h_idx = sorted(set(h_idx))
        hset = set(self.h_idx)
        for i in self.h_idx:
            if alg.parity[i] % 2:
                raise ValueError("relative subalgebra must be even")
        self.comp = [i for i in range(alg.dim) if i not in hset]
        self.cpar = [alg.parity[i] for i in self.comp]
        nc = len(self.comp)
        cpos = {b: t for t, b in enumerate(self.comp)}

        # brackets among complement elements, projected along h
        self.br = {}
        for a in range(nc):
            for b in range(a, nc):
                v = alg.mult_basis(self.comp[a], self.comp[b])
                pv = {cpos[m]: c for m, c in v.items() if m in cpos}
                if pv:
                    self.br[(a, b)] = pv
                    s = 1 if (self.cpar[a] * self.cpar[b]) % 2 else -1
                    self.br[(b, a)] = {m: s * c for m, c in pv.items()}

        # h acting on the complement (projected along h)
        self.had = {}
        for i in self.h_idx:
            m = {}
            for a in range(nc):
                v = alg.mult_basis(i, self.comp[a])
                pv = {cpos[t]: c for t, c in v.items() if t in cpos}
                if pv:
                    m[a] = pv
            self.had[i] = m

        # graders: h elements acting diagonally on complement and on X
        self.graders = []
        for i in self.h_idx:
            ok = all(set(v) == {a} for a, v in self.had[i].items())
            if ok and all(set(x.action[i].col(j)) <= {j}
                          for j in range(x.dim)):
                self.graders.append(i)
        self.cwt = []
        for a in range(nc):
            self.cwt.append(tuple(self.had[i].get(a, {}).get(a, mpq(0))
                                  for i in self.graders))
        self.xwt = []
        for j in range(x.dim):
            self.xwt.append(tuple(x.action[i].col(j).get(j, mpq(0))
                                  for i in self.graders))

        self.kmax = kmax
        self.pairs = []       # per degree: list of (cell, x index)
        self.pidx = []        # per degree: {(cell, x): position}
        self.eq = []          # per degree: equivariant basis vectors
        for k in range(kmax + 1):
            self._build_degree(k)
        self.dmat = [self._build_d(k) for k in range(kmax)]

    # -------------------------------------------------- space building
    def _build_degree(self, k):
        x = self.x
        pairs = []
        for cell in exterior_cells(self.cpar, k):
            wt = tuple(sum(self.cwt[a][t] for a in cell)
                       for t in range(len(self.graders)))
            cp = sum(self.cpar[a] for a in cell) % 2
            want = (cp + self.parity) % 2
            for j in range(x.dim):
                if x.parity[j] % 2 == want and self.xwt[j] == wt:
                    pairs.append((cell, j))
        pidx = {p: t for t, p in enumerate(pairs)}
        self.pairs.append(pairs)
        self.pidx.append(pidx)

        # equivariance defect rows: for a row cell K and a in h,
        # rho_X(a) phi(K) - sum_s phi(K with K_s -> [a, K_s]) = 0
        rows = {}
        grset = set(self.graders)
        bycell = {}
        for t, (cell, j) in enumerate(pairs):
            bycell.setdefault(cell, []).append((j, t))
        for t, (cell, j) in enumerate(pairs):
            for i in self.h_idx:
                if i in grset:
                    continue
                for jp, c in x.action[i].col(j).items():
                    rows.setdefault((i, cell, jp), {})[t] = \
                        rows.get((i, cell, jp), {}).get(t, mpq(0)) + c
        for kcell in exterior_cells(self.cpar, k):
            for i in self.h_idx:
                if i in grset:
                    continue
                for s, a in enumerate(kcell):
                    for m, c in self.had[i].get(a, {}).items():
                        norm = _normalize_cell(
                            kcell[:s] + (m,) + kcell[s + 1:], self.cpar)
                        if norm is None:
                            continue
                        scell, sg = norm
                        for j, t in bycell.get(scell, ()):
                            key = (i, kcell, j)
                            rows.setdefault(key, {})[t] = \
                                rows.get(key, {}).get(t, mpq(0)) - sg * c
        rows = [{t: c for t, c in r.items() if c} for r in rows.values()]
        rows = [r for r in rows if r]
        if rows:
            _, kern, _ = rank_kernel_auto(QMat.from_rows(rows, len(pairs)))
        else:
            kern = [{t: mpq(1)} for t in range(len(pairs))]
        self.eq.append(kern)

    # -------------------------------------------------- differential
    def _build_d(self, k):
        """Sparse columns: source pair position -> {target pair position:
        coefficient} for d_k : C^k -> C^{k+1}."""
        x = self.x
        cols = [dict() for _ in self.pairs[k]]
        pidx = self.pidx[k]
        tcells = sorted({cell for cell, _ in self.pairs[k + 1]})
        pc = self.parity
        for cell in tcells:
            pars = [self.cpar[a] for a in cell]
            pref = [0]
            for p in pars:
                pref.append((pref[-1] + p) % 2)
            for i in range(k + 1):
                sub = cell[:i] + cell[i + 1:]
                sgn = 1 if (i + pars[i] * (pc + pref[i])) % 2 == 0 else -1
                rho = x.action[self.comp[cell[i]]]
                for j in range(x.dim):
                    src = pidx.get((sub, j))
                    if src is None:
                        continue
                    for jp, c in rho.col(j).items():
                        tgt = self.pidx[k + 1].get((cell, jp))
                        if tgt is None:
                            continue
                        cols[src][tgt] = cols[src].get(tgt, mpq(0)) + sgn * c
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    bv = self.br.get((cell[i], cell[j]))
                    if not bv:
                        continue
                    mid = (pref[j] - pref[i + 1]) % 2
                    sgn = 1 if (j + pars[j] * mid) % 2 == 0 else -1
                    rest = cell[:j] + cell[j + 1:]
                    for mpos, c in bv.items():
                        norm = _normalize_cell(
                            rest[:i] + (mpos,) + rest[i + 1:], self.cpar)
                        if norm is None:
                            continue
                        scell, ssg = norm
                        for jj in range(x.dim):
                            src = pidx.get((scell, jj))
                            if src is None:
                                continue
                            tgt = self.pidx[k + 1].get((cell, jj))
                            if tgt is None:
                                continue
                            cols[src][tgt] = cols[src].get(tgt, mpq(0)) \
                                + sgn * ssg * c
        return cols

    def _apply_d(self, k, vec):
        out = {}
        for s, c in vec.items():
            for t, v in self.dmat[k][s].items():
                out[t] = out.get(t, mpq(0)) + c * v
        return {t: v for t, v in out.items() if v}

    # -------------------------------------------------- invariants
    def dim_c(self, k):
        return len(self.eq[k])

    def _rank_d(self, k):
        rows = [self._apply_d(k, v) for v in self.eq[k]]
        rows = [r for r in rows if r]
        if not rows:
            return 0
        return rank_auto(QMat.from_rows(rows, len(self.pairs[k + 1])))

    def cohomology(self, k):
        if k >= self.kmax:
            raise ValueError("complex too short for H^%d" % k)
        below = self._rank_d(k - 1) if k > 0 else 0
        return self.dim_c(k) - self._rank_d(k) - below

    def check_d2(self):
        for k in range(self.kmax - 1):
            for v in self.eq[k]:
                if self._apply_d(k + 1, self._apply_d(k, v)):
                    return False
        return True


def relative_cochain_complex(alg, h_idx, x: Module, kmax,
                             parity=0) -> CochainComplex:
    return CochainComplex(alg, h_idx, x, kmax, parity=parity)


def ext1(m: Module, n: Module, relative_to=None, parity=0) -> int:
    """dim Ext^1(M, N) = dim H^1(g, h; Hom(M, N))."""
    alg = m.alg
    h_idx = (default_relative_subalgebra(alg)
             if relative_to is None else relative_to)
    cx = CochainComplex(alg, h_idx, hom_module(m, n), 2, parity=parity)
    return cx.cohomology(1)


def _central_scalar(mod: Module, z: dict):
    """The unique eigenvalue of a central element's action (trace/dim)."""
    m = mod.act_vec(z)
    tr = sum(m.rows[i].get(i, mpq(0)) for i in range(mod.dim))
    return tr / mod.dim


def ext1_central_bound(m: Module, n: Module, power: int = 1,
                       relative_to=None) -> int:
    """Ext^1 inside the subcategory where every central element z acts on
    the extension with (z - chi(z))^power = 0."""
    alg = m.alg
    centre = alg.center()
    h_idx = (default_relative_subalgebra(alg)
             if relative_to is None else relative_to)
    x = hom_module(m, n)
    cx = CochainComplex(alg, h_idx, x, 2)
    hset = set(h_idx)
    cpos = {b: t for t, b in enumerate(cx.comp)}

    extra = []
    for z in centre:
        lam_m = _central_scalar(m, z)
        lam_n = _central_scalar(n, z)
        if lam_m != lam_n:
            raise ValueError("central characters differ")
        if any(k in hset for k in z):
            raise ValueError("central element inside the relative subalgebra")
        a_n = n.act_vec(z)
        a_m = m.act_vec(z)
        for i in range(n.dim):
            a_n.add_to(i, i, -lam_n)
        for i in range(m.dim):
            a_m.add_to(i, i, -lam_m)
        pow_n = [QMat.identity(n.dim)]
        pow_m = [QMat.identity(m.dim)]
        for _ in range(power - 1):
            pow_n.append(pow_n[-1].matmul(a_n))
            pow_m.append(pow_m[-1].matmul(a_m))
        # phi(z) in Hom coordinates; constraint:
        # sum_{a+b=power-1} A_N^a phi(z) A_M^b = 0 entrywise
        zcells = [(cpos[k], c) for k, c in z.items()]
        crows = {}
        for t, (cell, j) in enumerate(cx.pairs[1]):
            if len(cell) != 1:
                continue
            zc = dict(zcells).get(cell[0])
            if not zc:
                continue
            r, s = divmod(j, m.dim)
            for a in range(power):
                b = power - 1 - a
                for rp, cn in pow_n[a].col(r).items():
                    for sp, cm in pow_m[b].rows[s].items():
                        key = (id(z), rp, sp)
                        crows.setdefault(key, {})[t] = \
                            crows.get(key, {}).get(t, mpq(0)) + zc * cn * cm
        extra.extend({t: c for t, c in row.items() if c}
                     for row in crows.values())
    extra = [r for r in extra if r]

    # cocycles satisfying the constraints, modulo all coboundaries (the
    # coboundary of an h-map automatically satisfies them)
    trows = {}
    for e, v in enumerate(cx.eq[1]):
        for t, c in cx._apply_d(1, v).items():
            trows.setdefault(("d", t), {})[e] = c
        for rix, r in enumerate(extra):
            val = sum(c * v.get(t, mpq(0)) for t, c in r.items())
            if val:
                trows.setdefault(("z", rix), {})[e] = val
    mat = QMat.from_rows(list(trows.values()), len(cx.eq[1]))
    _, kern, _ = rank_kernel_auto(mat)
    # kern: combinations of eq[1] basis that are cocycles + satisfy bounds
    return len(kern) - cx._rank_d(0)


def subalgebra_on(alg, idx):
    """The subalgebra spanned by the given basis indices (must be closed)."""
    from .algebras.base import Superalgebra
    idx = list(idx)
    pos = {b: t for t, b in enumerate(idx)}
    table = {}
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            v = alg.mult_basis(i, j)
            if not v:
                continue
            if any(k not in pos for k in v):
                raise ValueError("indices do not span a subalgebra")
            table[(a, b)] = {pos[k]: c for k, c in v.items()}
    sub = Superalgebra(alg.kind, [alg.basis[i] for i in idx],
                       [alg.parity[i] for i in idx], table,
                       name="%s|sub" % alg.name)
    sub.cartan = [pos[i] for i in alg.cartan if i in pos]
    for gname, grad in alg.gradings.items():
        sub.gradings[gname] = [grad[i] for i in idx]
    return sub


def restrict_module(mod: Module, sub, idx) -> Module:
    return Module(sub, list(mod.parity), [mod.action[i] for i in idx],
                  name="%s|res" % mod.name, flavor=mod.flavor,
                  validate=False)


def ext1_shapiro(m0: Module, p_idx, n: Module, relative_to=None) -> int:
    """Ext^1(Ind_p(M0), N) computed on the parabolic side: the relative
    H^1 of p with coefficients in Hom(M0, Res N)."""
    alg = n.alg
    p_idx = sorted(p_idx)
    sub = subalgebra_on(alg, p_idx)
    n_res = restrict_module(n, sub, p_idx)
    h_idx = (default_relative_subalgebra(alg)
             if relative_to is None else relative_to)
    pos = {b: t for t, b in enumerate(p_idx)}
    h_sub = [pos[i] for i in h_idx if i in pos]
    if len(h_sub) != len(h_idx):
        raise ValueError("relative subalgebra must sit inside the parabolic")
    cx = CochainComplex(sub, h_sub, hom_module(m0, n_res), 2)
    return cx.cohomology(1)
