"""Finite-dimensional superalgebras via exact structure constants.

A :class:`Superalgebra` stores a homogeneous basis with parities and the full
multiplication table over mpq.  Identity validators (super-Jacobi for Lie
kind, the degree-4 super-Jordan identity for Jordan kind) run exhaustively
over basis tuples; the hot path clears denominators and runs an int64 jit
kernel after an a-priori overflow bound check, falling back to exact Python
integers otherwise.  Both paths are exact.
"""

from __future__ import annotations

import os

import numpy as np
from gmpy2 import mpq

from ..kernel.matrix import QMat, Subspace, svec, svec_add, svec_scale
from ..kernel.scalars import clear_denominators, rat

_USE_NUMBA = os.environ.get("SUPERREP_NO_NUMBA", "") not in ("1", "true", "yes")
if _USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        _USE_NUMBA = False

INT64_MAX = (1 << 63) - 1


class IdentityError(AssertionError):
    """An algebra identity failed; carries a witness tuple."""


class Superalgebra:
    """kind is 'lie', 'jordan' or 'assoc'."""

    def __init__(self, kind: str, basis: list[str], parity: list[int], table: dict,
                 name: str = ""):
        assert kind in ("lie", "jordan", "assoc")
        assert len(basis) == len(parity)
        self.kind = kind
        self.name = name or kind
        self.basis = list(basis)
        self.parity = [int(p) & 1 for p in parity]
        self.dim = len(basis)
        # table[(i, j)] = sparse product vector {k: mpq}
        self.table = {ij: svec(v) for ij, v in table.items() if v}
        self.table = {ij: v for ij, v in self.table.items() if v}
        self.named: dict[str, dict] = {}      # distinguished elements
        self.weights: list[tuple] | None = None   # Cartan weights per basis elt
        self.cartan: list[int] = []           # basis indices spanning the Cartan
        self.h_indices: list[int] = []        # designated relative subalgebra
        self.h_generators: list[int] = []     # indices generating h mod Cartan
        self.gradings: dict[str, list] = {}   # name -> degree per basis index
        self._tensor = None

    # -- basic structure ---------------------------------------------------

    @property
    def superdim(self) -> tuple[int, int]:
        odd = sum(self.parity)
        return (self.dim - odd, odd)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def element(self, label_or_vec) -> dict:
        if isinstance(label_or_vec, dict):
            return svec(label_or_vec)
        if label_or_vec in self.named:
            return dict(self.named[label_or_vec])
        return {self.index(label_or_vec): mpq(1)}

    def parity_of(self, vec: dict) -> int:
        """Parity of a homogeneous element; raises if mixed."""
        ps = {self.parity[i] for i in vec}
        if len(ps) > 1:
            raise ValueError("inhomogeneous element")
        return ps.pop() if ps else 0

    def mult_basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def mult(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = self.table.get((i, j))
                if prod:
                    out = svec_add(out, prod, a * b)
        return out

    def left_mult_matrix(self, u: dict) -> QMat:
        """Matrix of x -> u*x (ad u for Lie kind, L_u for Jordan kind)."""
        m = QMat(self.dim, self.dim)
        for j in range(self.dim):
            col = self.mult(u, {j: mpq(1)})
            for k, v in col.items():
                m.rows[k][j] = v
        return m

    def structure_tensor(self) -> np.ndarray:
        """Dense mpq-free integer pair (C, D): product(i,j) = C[i,j,:] / D."""
        if self._tensor is None:
            vals = []
            for v in self.table.values():
                vals.extend(v.values())
            ints, d = clear_denominators(vals)
            big = any(abs(x) > INT64_MAX for x in ints)
            c = np.zeros((self.dim, self.dim, self.dim),
                         dtype=object if big else np.int64)
            k = 0
            for (i, j), v in self.table.items():
                for t in v:
                    c[i, j, t] = ints[k]
                    k += 1
            self._tensor = (c, d)
        return self._tensor

    # -- validators --------------------------------------------------------

    def check_parity_consistency(self):
        for (i, j), v in self.table.items():
            for k in v:
                if (self.parity[i] + self.parity[j] - self.parity[k]) % 2:
                    raise IdentityError(("parity", self.basis[i], self.basis[j],
                                         self.basis[k]))

    def check_symmetry(self):
        """Supercommutativity (jordan) / superanticommutativity (lie)."""
        sign = -1 if self.kind == "lie" else 1
        for i in range(self.dim):
            for j in range(self.dim):
                s = sign * (-1) ** (self.parity[i] * self.parity[j])
                lhs = self.table.get((i, j), {})
                rhs = svec_scale(self.table.get((j, i), {}), s)
                if lhs != rhs:
                    raise IdentityError(("symmetry", self.basis[i], self.basis[j]))

    def check_super_jacobi(self):
        """Graded Jacobi identity on every basis triple (lie kind)."""
        assert self.kind == "lie"
        self.check_parity_consistency()
        self.check_symmetry()
        c, _ = self.structure_tensor()
        par = np.array(self.parity, dtype=np.int64)
        bound = 3 * self.dim * (_max_abs(c) ** 2)
        if c.dtype == np.int64 and bound <= INT64_MAX:
            w = _jacobi_fast(self.dim, par, *_csr(c))
        else:
            w = self._jacobi_slow()
        if w[0] >= 0:
            raise IdentityError(("jacobi",) + tuple(self.basis[int(t)] for t in w))

    def check_super_jordan(self):
        """Supercommutativity plus the degree-4 super-Jordan identity."""
        assert self.kind == "jordan"
        self.check_parity_consistency()
        self.check_symmetry()
        c, _ = self.structure_tensor()
        par = np.array(self.parity, dtype=np.int64)
        e = _max_abs(c)
        bound = 6 * (self.dim ** 2) * (e ** 3)
        if c.dtype == np.int64 and bound <= INT64_MAX:
            w = _jordan_fast(self.dim, par, *_csr(c))
        else:
            w = self._jordan_slow()
        if w[0] >= 0:
            raise IdentityError(("jordan",) + tuple(self.basis[int(t)] for t in w))

    def _jacobi_slow(self):
        """Exact mpq fallback for extreme structure constants."""
        for a in range(self.dim):
            ea = {a: mpq(1)}
            sa = self.parity[a]
            for b in range(self.dim):
                eb = {b: mpq(1)}
                s = -1 if (sa * self.parity[b]) % 2 else 1
                ab = self.mult_basis(a, b)
                for e in range(self.dim):
                    ee = {e: mpq(1)}
                    lhs = self.mult(ab, ee)
                    lhs = svec_add(lhs, self.mult(ea, self.mult_basis(b, e)), -1)
                    lhs = svec_add(lhs, self.mult(eb, self.mult_basis(a, e)), s)
                    if lhs:
                        return (a, b, e)
        return (-1,)

    def _jordan_slow(self):
        par = self.parity
        for a in range(self.dim):
            for b in range(self.dim):
                ab = self.mult_basis(a, b)
                for e in range(self.dim):
                    for d in range(self.dim):
                        pa, pb, pe, pd = par[a], par[b], par[e], par[d]
                        s1 = (-1) ** (pb * pe + pb * pd + pe * pd)
                        s2 = (-1) ** (pa * pb + pa * pe + pa * pd + pe * pd)
                        t = self.mult(self.mult(ab, {e: mpq(1)}), {d: mpq(1)})
                        t = svec_add(t, self.mult(
                            self.mult(self.mult_basis(a, d), {e: mpq(1)}),
                            {b: mpq(1)}), s1)
                        t = svec_add(t, self.mult(
                            self.mult(self.mult_basis(b, d), {e: mpq(1)}),
                            {a: mpq(1)}), s2)
                        t = svec_add(t, self.mult(ab, self.mult_basis(e, d)), -1)
                        t = svec_add(t, self.mult(self.mult_basis(a, e),
                                                  self.mult_basis(b, d)),
                                     -((-1) ** (pb * pe)))
                        t = svec_add(t, self.mult(self.mult_basis(a, d),
                                                  self.mult_basis(b, e)),
                                     -((-1) ** (pd * (pb + pe))))
                        if t:
                            return (a, b, e, d)
        return (-1,)

    def validate(self):
        if self.kind == "lie":
            self.check_super_jacobi()
        elif self.kind == "jordan":
            self.check_super_jordan()
        else:
            self.check_parity_consistency()
        return self

    # -- gradings and structure queries ------------------------------------

    def grading_eigenvalues(self, h_vec: dict) -> list:
        """Eigenvalue of ad(h)/L(h) on each basis vector; requires the basis
        to be an eigenbasis (raises otherwise)."""
        out = []
        for j in range(self.dim):
            img = self.mult(h_vec, {j: mpq(1)})
            lam = img.get(j, mpq(0))
            if svec_add(img, {j: lam}, -1):
                raise ValueError("basis vector %s is not an eigenvector"
                                 % self.basis[j])
            out.append(lam)
        return out

    def center(self) -> list[dict]:
        """Basis of the (super)center."""
        from ..kernel.matrix import rank_kernel_image
        big = QMat(0, self.dim)
        for i in range(self.dim):
            ad = self.left_mult_matrix({i: mpq(1)})
            big.rows.extend(ad.rows)
        return rank_kernel_image(big)[1]

    def derived_subspace(self) -> Subspace:
        s = Subspace(self.dim)
        for prod in self.table.values():
            s.add(prod)
        return s

    def restrict_weights(self):
        """Compute Cartan weights of every basis vector from self.cartan."""
        ws = []
        for j in range(self.dim):
            w = []
            for h in self.cartan:
                img = self.mult({h: mpq(1)}, {j: mpq(1)})
                lam = img.get(j, mpq(0))
                if svec_add(img, {j: lam}, -1):
                    raise ValueError("basis not a weight basis at %s" % self.basis[j])
                w.append(lam)
            ws.append(tuple(w))
        self.weights = ws
        return ws

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "schema": "superrep.algebra/1",
            "name": self.name,
            "kind": self.kind,
            "basis": self.basis,
            "parity": self.parity,
            "table": [[i, j, [[k, str(v)] for k, v in sorted(prod.items())]]
                      for (i, j), prod in sorted(self.table.items())],
            "named": {n: [[k, str(v)] for k, v in sorted(vec.items())]
                      for n, vec in sorted(self.named.items())},
            "gradings": {g: [str(x) for x in d] for g, d in self.gradings.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Superalgebra":
        table = {(i, j): {k: rat(v) for k, v in prod}
                 for i, j, prod in d["table"]}
        alg = cls(d["kind"], d["basis"], d["parity"], table, name=d.get("name", ""))
        for n, vec in d.get("named", {}).items():
            alg.named[n] = {k: rat(v) for k, v in vec}
        for g, deg in d.get("gradings", {}).items():
            alg.gradings[g] = [rat(x) for x in deg]
        return alg


def _max_abs(c) -> int:
    return max((abs(int(x)) for x in c.flat), default=0) if c.dtype == object \
        else int(np.abs(c).max(initial=0))


# -- identity check kernels (numba-compatible plain loops over CSR data) ----

def _csr(c: np.ndarray):
    """CSR layout of the structure tensor: row (i*dim+j) lists nonzero k."""
    dim = c.shape[0]
    ptr = np.zeros(dim * dim + 1, dtype=np.int64)
    cols, vals = [], []
    for i in range(dim):
        for j in range(dim):
            nz = np.nonzero(c[i, j])[0]
            ptr[i * dim + j + 1] = ptr[i * dim + j] + len(nz)
            cols.extend(int(t) for t in nz)
            vals.extend(int(c[i, j, t]) for t in nz)
    return (ptr, np.array(cols, dtype=np.int64), np.array(vals, dtype=np.int64))


def _jacobi_impl(dim, par, ptr, col, val):
    w = np.zeros(dim, dtype=np.int64)
    for a in range(dim):
        for b in range(dim):
            sab = -1 if (par[a] * par[b]) % 2 == 1 else 1
            for e in range(dim):
                # [[a,b],e] - [a,[b,e]] + (-1)^{ab} [b,[a,e]]
                r = a * dim + b
                for t in range(ptr[r], ptr[r + 1]):
                    k = col[t]; cv = val[t]
                    r2 = k * dim + e
                    for u in range(ptr[r2], ptr[r2 + 1]):
                        w[col[u]] += cv * val[u]
                r = b * dim + e
                for t in range(ptr[r], ptr[r + 1]):
                    k = col[t]; cv = val[t]
                    r2 = a * dim + k
                    for u in range(ptr[r2], ptr[r2 + 1]):
                        w[col[u]] -= cv * val[u]
                r = a * dim + e
                for t in range(ptr[r], ptr[r + 1]):
                    k = col[t]; cv = val[t]
                    r2 = b * dim + k
                    for u in range(ptr[r2], ptr[r2 + 1]):
                        w[col[u]] += sab * cv * val[u]
                bad = False
                for m in range(dim):
                    if w[m] != 0:
                        bad = True
                    w[m] = 0
                if bad:
                    return (a, b, e)
    return (-1, -1, -1)


def _jordan_impl(dim, par, ptr, col, val):
    w = np.zeros(dim, dtype=np.int64)
    for a in range(dim):
        for b in range(dim):
            for e in range(dim):
                pa = par[a]; pb = par[b]; pe = par[e]
                for d in range(dim):
                    pd = par[d]
                    s1 = -1 if (pb * pe + pb * pd + pe * pd) % 2 == 1 else 1
                    s2 = -1 if (pa * pb + pa * pe + pa * pd + pe * pd) % 2 == 1 else 1
                    r2s = -1 if (pb * pe) % 2 == 1 else 1
                    r3s = -1 if (pd * (pb + pe)) % 2 == 1 else 1
                    # +((ab)e)d
                    r = a * dim + b
                    for t in range(ptr[r], ptr[r + 1]):
                        k = col[t]; cv = val[t]
                        r2 = k * dim + e
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = l * dim + d
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] += cu * val[v]
                        # -(ab)(ed)
                        r2 = e * dim + d
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = k * dim + l
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] -= cu * val[v]
                    # +s1 ((ad)e)b  and  -r3s (ad)(be)
                    r = a * dim + d
                    for t in range(ptr[r], ptr[r + 1]):
                        k = col[t]; cv = val[t]
                        r2 = k * dim + e
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = l * dim + b
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] += s1 * cu * val[v]
                        r2 = b * dim + e
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = k * dim + l
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] -= r3s * cu * val[v]
                    # +s2 ((bd)e)a
                    r = b * dim + d
                    for t in range(ptr[r], ptr[r + 1]):
                        k = col[t]; cv = val[t]
                        r2 = k * dim + e
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = l * dim + a
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] += s2 * cu * val[v]
                    # -r2s (ae)(bd)
                    r = a * dim + e
                    for t in range(ptr[r], ptr[r + 1]):
                        k = col[t]; cv = val[t]
                        r2 = b * dim + d
                        for u in range(ptr[r2], ptr[r2 + 1]):
                            l = col[u]; cu = cv * val[u]
                            r3 = k * dim + l
                            for v in range(ptr[r3], ptr[r3 + 1]):
                                w[col[v]] -= r2s * cu * val[v]
                    bad = False
                    for m in range(dim):
                        if w[m] != 0:
                            bad = True
                        w[m] = 0
                    if bad:
                        return (a, b, e, d)
    return (-1, -1, -1, -1)


if _USE_NUMBA:
    _jacobi_fast = njit(cache=True)(_jacobi_impl)
    _jordan_fast = njit(cache=True)(_jordan_impl)
else:
    _jacobi_fast = _jacobi_impl
    _jordan_fast = _jordan_impl


def quotient_by_basis_indices(alg: "Superalgebra", drop,
                              name: str = None) -> "Superalgebra":
    """Quotient by the span of the given basis indices (which must be an
    ideal whose complement is spanned by the remaining basis vectors)."""
    drop = set(drop)
    keep = [i for i in range(alg.dim) if i not in drop]
    ren = {i: t for t, i in enumerate(keep)}
    table = {}
    for (i, j), v in alg.table.items():
        if i in ren and j in ren:
            w = {ren[k]: c for k, c in v.items() if k in ren}
            if w:
                table[(ren[i], ren[j])] = w
    out = Superalgebra(alg.kind, [alg.basis[i] for i in keep],
                       [alg.parity[i] for i in keep], table,
                       name=name or ("%s/ideal" % alg.name))
    out.validate()
    return out
