"""Finite-dimensional modules over Lie and Jordan superalgebras.

A Module stores one exact rational matrix per algebra basis element, acting on
column vectors.  Validation is exhaustive over basis pairs: Lie modules check
the bracket identity, Jordan modules check the Jordan identity of the null
split extension.  Integer-cleared numpy products carry the hot part of the
pair loop.
"""

from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from ..algebras.base import Superalgebra
from ..kernel.intmat import max_abs, qmat_to_int
from ..kernel.matrix import (QMat, Subspace, rank_kernel_image, svec_add,
                             svec_scale)
from ..kernel.certified import rank_kernel_auto


class ModuleError(Exception):
    pass


class Module:
    def __init__(self, alg: Superalgebra, parity, action, name="",
                 flavor="lie", validate=True):
        self.alg = alg
        self.parity = list(parity)
        self.dim = len(self.parity)
        if isinstance(action, dict):
            action = [action.get(i, QMat(self.dim, self.dim))
                      for i in range(alg.dim)]
        self.action = list(action)
        self.name = name or "module"
        self.flavor = flavor
        self.named = {}
        self._int = None
        if validate:
            self.validate()

    @property
    def superdim(self):
        odd = sum(self.parity)
        return (self.dim - odd, odd)

    # ----------------------------------------------------------- validation

    def _int_action(self):
        if self._int is None:
            self._int = []
            # int64 is exact as long as every dot product stays below
            # 2^63; fall back to python ints otherwise
            for m in self.action:
                a, d = qmat_to_int(m)
                arr = np.asarray(a, dtype=object)
                mx = max((abs(int(v)) for v in arr.flat), default=0)
                if mx and mx * mx * self.dim < (1 << 62):
                    arr = arr.astype(np.int64)
                self._int.append((arr, d))
        return self._int

    def act(self, i: int) -> QMat:
        return self.action[i]

    def act_vec(self, x: dict) -> QMat:
        out = QMat(self.dim, self.dim)
        for i, c in x.items():
            out = out.add(self.action[i], c)
        return out

    def apply(self, x: dict, v: dict) -> dict:
        out = {}
        for i, c in x.items():
            out = svec_add(out, self.action[i].apply(v), c)
        return out

    def check_parity(self):
        for i in range(self.alg.dim):
            px = self.alg.parity[i]
            for r, row in enumerate(self.action[i].rows):
                for c in row:
                    if (self.parity[r] + self.parity[c]) % 2 != px % 2:
                        raise ModuleError(
                            "action of %s violates parity at (%d, %d)"
                            % (self.alg.basis[i], r, c))

    def validate(self):
        self.check_parity()
        if self.flavor == "lie":
            self._validate_lie()
        else:
            self._validate_jordan()

    def _validate_lie(self):
        ints = self._int_action()
        n = self.alg.dim
        for i in range(n):
            ai, di = ints[i]
            for j in range(n):
                aj, dj = ints[j]
                s = -1 if (self.alg.parity[i] * self.alg.parity[j]) % 2 else 1
                lhs = ai @ aj - s * (aj @ ai)      # denominator di*dj
                br = self.alg.mult_basis(i, j)
                rhs = np.zeros_like(lhs)
                dr = di * dj
                for k, c in br.items():
                    ak, dk = ints[k]
                    rhs = rhs + ak * (mpq(c) * dr / dk)
                if not np.array_equal(lhs, rhs):
                    raise ModuleError("bracket fails on (%s, %s)"
                                      % (self.alg.basis[i], self.alg.basis[j]))

    def _validate_jordan(self):
        ext = null_split_extension(self.alg, self)
        ext.validate()

    # ----------------------------------------------------------- structure

    def weight_of(self, idx: int):
        """Weight tuple of a basis vector, if the Cartan acts diagonally."""
        cart = getattr(self.alg, "cartan", None)
        if not cart:
            return None
        out = []
        for h in cart:
            m = self.action[h]
            for r, row in enumerate(m.rows):
                for c in row:
                    if r != c:
                        return None
            out.append(m[idx, idx])
        return tuple(out)

    def weights(self):
        out = []
        for i in range(self.dim):
            w = self.weight_of(i)
            if w is None:
                return None
            out.append(w)
        return out

    def weight_spaces(self):
        ws = self.weights()
        if ws is None:
            raise ModuleError("Cartan does not act diagonally on this basis")
        parts = {}
        for i, w in enumerate(ws):
            parts.setdefault(w, []).append(i)
        return parts

    def parity_purity(self) -> bool:
        return all(len({self.parity[i] for i in part}) == 1
                   for part in self.weight_spaces().values())

    def central_character(self):
        """{label: value} if every declared central element acts as a scalar,
        else ("generalized", {label: (value, nilpotency degree)})."""
        center = self.alg.center()
        out = {}
        generalized = False
        gout = {}
        for t, z in enumerate(center):
            m = self.act_vec(z)
            lam = m[0, 0]
            shift = m.add(QMat.identity(self.dim).scale(lam), -1)
            deg = 0
            probe = QMat.identity(self.dim)
            while not probe.is_zero() and deg <= self.dim:
                probe = probe.matmul(shift)
                deg += 1
            if deg > self.dim:
                raise ModuleError("central element acts non-unipotently")
            key = "z%d" % t
            out[key] = lam
            gout[key] = (lam, deg)
            if deg > 1:
                generalized = True
        if generalized:
            return ("generalized", gout)
        return out

    def short_grading_class(self, h: dict = None):
        h = h if h is not None else self.alg.named.get("h")
        m = self.act_vec(h)
        for r, row in enumerate(m.rows):
            for c in row:
                if r != c:
                    return "neither"
        eig = {m[i, i] for i in range(self.dim)}
        if eig <= {mpq(1, 2), mpq(-1, 2)}:
            return "mod_half"
        if eig <= {mpq(0), mpq(1), mpq(-1)}:
            return "mod1"
        return "neither"

    # ---------------------------------------------------------- new modules

    def dual(self) -> "Module":
        act = []
        for i in range(self.alg.dim):
            px = self.alg.parity[i]
            m = QMat(self.dim, self.dim)
            src = self.action[i]
            for j, row in enumerate(src.rows):
                s = 1 if (px * self.parity[j]) % 2 else -1
                for k, v in row.items():
                    m.set(k, j, s * v)
            act.append(m)
        return Module(self.alg, self.parity, act, name="(%s)*" % self.name,
                      flavor=self.flavor)

    def op(self) -> "Module":
        return Module(self.alg, [(p + 1) % 2 for p in self.parity],
                      [m.copy() for m in self.action],
                      name="(%s)^op" % self.name, flavor=self.flavor)

    def direct_sum(self, other: "Module") -> "Module":
        assert other.alg is self.alg or other.alg.name == self.alg.name
        d = self.dim
        act = []
        for i in range(self.alg.dim):
            m = QMat(d + other.dim, d + other.dim)
            for j, row in enumerate(self.action[i].rows):
                for k, v in row.items():
                    m.set(j, k, v)
            for j, row in enumerate(other.action[i].rows):
                for k, v in row.items():
                    m.set(d + j, d + k, v)
            act.append(m)
        return Module(self.alg, self.parity + other.parity, act,
                      name="%s+%s" % (self.name, other.name),
                      flavor=self.flavor)

    def tensor(self, other: "Module") -> "Module":
        dm, dn = self.dim, other.dim
        parity = [(self.parity[i] + other.parity[j]) % 2
                  for i in range(dm) for j in range(dn)]
        act = []
        for x in range(self.alg.dim):
            px = self.alg.parity[x]
            m = QMat(dm * dn, dm * dn)
            a = self.action[x]
            b = other.action[x]
            for i in range(dm):
                for j in range(dn):
                    col = i * dn + j
                    for k, v in a.col(i).items():
                        m.add_to(k * dn + j, col, v)
                    s = -1 if (px * self.parity[i]) % 2 else 1
                    for k, v in b.col(j).items():
                        m.add_to(i * dn + k, col, s * v)
            act.append(m)
        return Module(self.alg, parity, act,
                      name="%s(x)%s" % (self.name, other.name),
                      flavor=self.flavor)

    def submodule(self, vectors, name=""):
        """(module on the spanned subspace, inclusion matrix); the span must
        be invariant."""
        sub = Subspace(self.dim, vectors)
        basis = sub.basis()
        parity = []
        for v in basis:
            ps = {self.parity[i] for i in v}
            if len(ps) > 1:
                raise ModuleError("submodule basis vector not homogeneous")
            parity.append(ps.pop())
        act = []
        for x in range(self.alg.dim):
            m = QMat(len(basis), len(basis))
            for t, v in enumerate(basis):
                img = self.action[x].apply(v)
                coords = sub.coords(img)
                if coords is None:
                    raise ModuleError("span is not invariant")
                for k, c in enumerate(coords):
                    if c:
                        m.set(k, t, c)
            act.append(m)
        inc = QMat(self.dim, len(basis))
        for t, v in enumerate(basis):
            for i, c in v.items():
                inc.set(i, t, c)
        mod = Module(self.alg, parity, act,
                     name=name or "%s.sub" % self.name, flavor=self.flavor,
                     validate=False)
        return mod, inc

    def quotient(self, vectors, name=""):
        """(quotient module by the span, projection matrix).  The quotient
        basis is the set of non-pivot coordinates."""
        sub = Subspace(self.dim, vectors)
        piv = set(sub.pivots)
        keep = [i for i in range(self.dim) if i not in piv]
        pos = {i: t for t, i in enumerate(keep)}

        def project(v):
            r = sub.reduce(v)
            return {pos[i]: c for i, c in r.items()}

        act = []
        for x in range(self.alg.dim):
            m = QMat(len(keep), len(keep))
            for t, i in enumerate(keep):
                img = project(self.action[x].apply({i: mpq(1)}))
                for k, c in img.items():
                    m.set(k, t, c)
            act.append(m)
        proj = QMat(len(keep), self.dim)
        for i in range(self.dim):
            for k, c in project({i: mpq(1)}).items():
                proj.set(k, i, c)
        mod = Module(self.alg, [self.parity[i] for i in keep], act,
                     name=name or "%s/sub" % self.name, flavor=self.flavor,
                     validate=False)
        return mod, proj

    def twist_by_automorphism(self, phi: QMat) -> "Module":
        """Precompose the action with an algebra automorphism."""
        act = []
        for i in range(self.alg.dim):
            act.append(self.act_vec(phi.col(i)))
        return Module(self.alg, self.parity, act,
                      name="%s.twist" % self.name, flavor=self.flavor)

    def twist_by_grading(self, s, grading_name: str) -> "Module":
        """Twist by the automorphism x -> s^deg(x) x of a declared grading."""
        s = mpq(s)
        if s == 0:
            raise ModuleError("grading twist needs s != 0")
        deg = self.alg.gradings[grading_name]
        phi = QMat(self.alg.dim, self.alg.dim)
        for i, d in enumerate(deg):
            phi.set(i, i, s ** d if d >= 0 else mpq(1) / s ** (-d))
        return self.twist_by_automorphism(phi)


def sym2(mod: Module) -> Module:
    return _super_square(mod, 1)


def ext2(mod: Module) -> Module:
    return _super_square(mod, -1)


def _super_square(mod: Module, sign: int) -> Module:
    t = mod.tensor(mod)
    d = mod.dim
    gens = []
    for i in range(d):
        for j in range(i, d):
            s = -1 if (mod.parity[i] * mod.parity[j]) % 2 else 1
            v = {i * d + j: mpq(1)}
            v = svec_add(v, {j * d + i: mpq(sign * s)})
            if v:
                gens.append(v)
    sub, _ = t.submodule(gens, name=("S2(%s)" if sign == 1 else "L2(%s)")
                         % mod.name)
    sub.validate()
    return sub


def null_split_extension(alg: Superalgebra, mod: Module) -> Superalgebra:
    """Jordan superalgebra J + M with M.M = 0 and a.v given by the action."""
    n, d = alg.dim, mod.dim
    labels = list(alg.basis) + ["m%d" % i for i in range(d)]
    parity = list(alg.parity) + list(mod.parity)
    table = {}
    for (i, j), v in alg.table.items():
        table[(i, j)] = dict(v)
    for i in range(n):
        m = mod.action[i]
        for j in range(d):
            col = m.col(j)
            if col:
                vec = {n + k: c for k, c in col.items()}
                table[(i, n + j)] = vec
                s = -1 if (alg.parity[i] * mod.parity[j]) % 2 else 1
                table[(n + j, i)] = {k: s * c for k, c in vec.items()}
    return Superalgebra("jordan", labels, parity, table,
                        name="%s+%s" % (alg.name, mod.name))


def trivial_module(alg: Superalgebra, parity: int = 0,
                   values: dict = None) -> Module:
    """One-dimensional module; `values` assigns scalars to (central) basis
    indices, all other basis elements act by zero."""
    act = []
    for i in range(alg.dim):
        m = QMat(1, 1)
        if values and i in values and values[i]:
            m.set(0, 0, mpq(values[i]))
        act.append(m)
    return Module(alg, [parity], act, name="C", flavor="lie")


def hom_module(m: Module, n: Module) -> Module:
    """Hom(M, N) as a module: (x.phi) = rho_N(x) phi - (-1)^{|x||phi|}
    phi rho_M(x).  Basis: matrix units E_{rs} (row r in N, column s in M),
    flattened as r * dim M + s."""
    dm, dn = m.dim, n.dim
    parity = [(n.parity[r] + m.parity[s]) % 2
              for r in range(dn) for s in range(dm)]
    action = []
    for i in range(m.alg.dim):
        px = m.alg.parity[i]
        a = QMat(dm * dn, dm * dn)
        rho_n, rho_m = n.action[i], m.action[i]
        for r in range(dn):
            for rp, c in rho_n.col(r).items():
                for s in range(dm):
                    a.add_to(rp * dm + s, r * dm + s, c)
        for s, row in enumerate(rho_m.rows):
            for sp, c in row.items():
                for r in range(dn):
                    sg = -1 if (px * parity[r * dm + s]) % 2 else 1
                    a.add_to(r * dm + sp, r * dm + s, -sg * c)
        action.append(a)
    return Module(m.alg, parity, action, name="Hom(%s,%s)" % (m.name, n.name),
                  flavor=m.flavor, validate=False)


def hom_space(m: Module, n: Module, parity: int = 0, seed: int = 0):
    """Basis of intertwiners T with T rho_M(x) = (-1)^{p |x|} rho_N(x) T,
    returned as QMats of shape (dim N, dim M)."""
    wm = m.weights()
    wn = n.weights()
    cells = []
    for a in range(n.dim):
        for b in range(m.dim):
            if (n.parity[a] + m.parity[b]) % 2 != parity % 2:
                continue
            if wm is not None and wn is not None and wn[a] != wm[b]:
                continue
            cells.append((a, b))
    loc = {c: t for t, c in enumerate(cells)}
    rows = []
    for x in range(m.alg.dim):
        s = -1 if (parity * m.alg.parity[x]) % 2 else 1
        am = m.action[x]
        an = n.action[x]
        # (T am)_{ab} - s (an T)_{ab} = 0
        for a in range(n.dim):
            for b in range(m.dim):
                row = {}
                for k, v in am.col(b).items():
                    t = loc.get((a, k))
                    if t is not None:
                        row[t] = row.get(t, mpq(0)) + v
                for k, v in an.rows[a].items():
                    t = loc.get((k, b))
                    if t is not None:
                        row[t] = row.get(t, mpq(0)) - s * v
                row = {t: v for t, v in row.items() if v}
                if row:
                    rows.append(row)
    if not cells:
        return []
    _, kern, _ = rank_kernel_auto(QMat.from_rows(rows, len(cells)), seed=seed)
    out = []
    for v in kern:
        t = QMat(n.dim, m.dim)
        for c, val in v.items():
            a, b = cells[c]
            t.set(a, b, val)
        out.append(t)
    return out
