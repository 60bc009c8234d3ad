"""Functors between Jordan bimodule categories and short-graded Lie
module categories, plus the Peirce splitting.

A `TKKData` record ties a Lie superalgebra with designated short sl(2)
triple (e, h, f) to its degree-one Jordan superalgebra J via an explicit
embedding of the J basis into the +1 eigenspace of ad h.  The embedding
is verified on construction: the unit maps to e and the Jordan product
matches x o y = [[x, f], y] throughout.
"""

from __future__ import annotations

from gmpy2 import mpq

from .algebras.matrixalg import hat_p3, jp, matrix_superalgebra
from .algebras.psl22 import hat_psl22
from .kernel.matrix import QMat, SpanSolver, Subspace, svec_add, svec_scale
from .repcat.module import Module, ModuleError, null_split_extension


class TKKData:
    def __init__(self, lie_alg, jordan_alg, embed, e, h, f):
        self.lie = lie_alg
        self.jordan = jordan_alg
        self.embed = [dict(v) for v in embed]    # J basis -> lie element
        self.e, self.h, self.f = dict(e), dict(h), dict(f)
        self._check()

    def _check(self):
        g, j = self.lie, self.jordan
        unit = j.named["unit"]
        image_unit = {}
        for i, c in unit.items():
            image_unit = svec_add(image_unit, self.embed[i], c)
        if image_unit != self.e:
            raise ModuleError("embedding does not send the unit to e")
        for a in range(j.dim):
            xa = self.embed[a]
            inner = g.mult(xa, self.f)          # [x, f] in g[0]
            for b in range(j.dim):
                lhs = g.mult(inner, self.embed[b])
                prod = j.mult_basis(a, b)
                rhs = {}
                for k, c in prod.items():
                    rhs = svec_add(rhs, self.embed[k], c)
                if {k: v for k, v in lhs.items() if v} != \
                        {k: v for k, v in rhs.items() if v}:
                    raise ModuleError(
                        "embedding breaks the product at (%s, %s)"
                        % (j.basis[a], j.basis[b]))

    def degree_of(self, i: int):
        """ad h eigenvalue of a lie basis element (basis must be an
        eigenbasis)."""
        out = {}
        for k, c in self.h.items():
            for m, v in self.lie.mult_basis(k, i).items():
                out[m] = out.get(m, mpq(0)) + c * v
        out = {k: v for k, v in out.items() if v}
        if not out:
            return mpq(0)
        if set(out) != {i}:
            raise ModuleError("basis element %d is not an ad h eigenvector"
                              % i)
        return out[i]


def p3_tkk_data() -> TKKData:
    """JP(2) inside the one-dimensional central extension of P(3)."""
    g = hat_p3()
    j = jp(2)
    # degree +1 labels: the upper-right A block, the B entries supported
    # on rows {1,2} and the C entry supported on rows {3,4}
    amap = {"A11": "A13", "A12": "A14", "A21": "A23", "A22": "A24",
            "B11": "B11", "B12": "B12", "B22": "B22", "C12": "C34"}
    embed = []
    for lab in j.basis:
        # the skew block picks up a sign relative to the symmetric one
        c = mpq(-1) if lab[0] == "C" else mpq(1)
        embed.append({g.index(amap[lab]): c})
    return TKKData(g, j, embed, g.named["e"], g.named["h"], g.named["f"])


def psl22_tkk_data() -> TKKData:
    """M^+(1|1) inside the 17-dimensional central extension of psl(2|2),
    sitting in degree +1 of ad (h1+h2)/2."""
    g = hat_psl22()
    j = matrix_superalgebra(1, 1, "jordan")
    jmap = {}
    for lab, tgt in (("E11", "E12"), ("E22", "E34"),
                     ("E12", "E14"), ("E21", "E32")):
        jmap[lab] = tgt
    embed = []
    for lab in j.basis:
        embed.append({g.index(jmap[lab]): mpq(1)})
    e = {g.index("E12"): mpq(1), g.index("E34"): mpq(1)}
    f = {g.index("E21"): mpq(1, 2), g.index("E43"): mpq(1, 2)}
    h = {g.index("h1"): mpq(1, 2), g.index("h2"): mpq(1, 2)}
    return TKKData(g, j, embed, e, h, f)


# --------------------------------------------------------------- Peirce

def peirce_split(mod: Module):
    """(M0, M_half, M1) by the eigenvalue of the unit's action."""
    if mod.flavor != "jordan":
        raise ModuleError("Peirce splitting needs a Jordan bimodule")
    unit = mod.alg.named["unit"]
    em = mod.act_vec(unit)
    parts = []
    total = 0
    for lam in (mpq(0), mpq(1, 2), mpq(1)):
        from .kernel.certified import rank_kernel_auto
        shift = em.add(QMat.identity(mod.dim).scale(lam), -1)
        _, ker, _ = rank_kernel_auto(shift)
        if ker:
            sub, _ = mod.submodule(ker, name="%s[e=%s]" % (mod.name, lam))
        else:
            sub = Module(mod.alg, [], [QMat(0, 0)] * mod.alg.dim,
                         name="%s[e=%s]" % (mod.name, lam),
                         flavor="jordan", validate=False)
        parts.append(sub)
        total += sub.dim
    if total != mod.dim:
        raise ModuleError("unit action has spectrum outside {0, 1/2, 1}")
    return tuple(parts)


# ------------------------------------------------------- grading slices

def _eigenbasis(mod: Module, h: dict, lam):
    from .kernel.certified import rank_kernel_auto
    m = mod.act_vec(h).add(QMat.identity(mod.dim).scale(lam), -1)
    _, ker, _ = rank_kernel_auto(m)
    return ker


def _restrict(mod: Module, op: QMat, basis_vecs):
    """Matrix of op on the span of basis_vecs, in that basis."""
    sub = Subspace(mod.dim, basis_vecs)
    k = len(basis_vecs)
    out = QMat(k, k)
    cols = {}
    for t, v in enumerate(basis_vecs):
        img = {}
        for i, c in v.items():
            img = svec_add(img, op.col(i), c)
        coords = sub.coords(img)
        if coords is None:
            raise ModuleError("operator leaves the grading slice")
        for r, c in enumerate(coords):
            if c:
                out.set(r, t, c)
        cols[t] = coords
    return out


def jor_half(v: Module, data: TKKData, validate=True) -> Module:
    """V[1/2] with x o v = rho(embed x) rho(f) v."""
    half = _eigenbasis(v, data.h, mpq(1, 2))
    if 2 * len(half) != v.dim:
        raise ModuleError("h does not act with eigenvalues +-1/2 evenly")
    rho_f = v.act_vec(data.f)
    sub = Subspace(v.dim, half)
    act = []
    for x in range(data.jordan.dim):
        op = v.act_vec(data.embed[x]).matmul(rho_f)
        act.append(_restrict(v, op, sub.basis()))
    par = []
    for w in sub.basis():
        ps = {v.parity[i] for i in w}
        if len(ps) != 1:
            raise ModuleError("mixed parity inside V[1/2]")
        par.append(ps.pop())
    return Module(data.jordan, par, act, name="Jor(%s)" % v.name,
                  flavor="jordan", validate=validate)


def jor_unital(n: Module, data: TKKData, validate=True) -> Module:
    """N[1] with x(m) = [x, f] m."""
    top = _eigenbasis(n, data.h, mpq(1))
    if not top:
        alg = data.jordan
        return Module(alg, [], [QMat(0, 0)] * alg.dim,
                      name="Jor(%s)" % n.name, flavor="jordan",
                      validate=False)
    sub = Subspace(n.dim, top)
    act = []
    for x in range(data.jordan.dim):
        elem = data.lie.mult(data.embed[x], data.f)
        act.append(_restrict(n, n.act_vec(elem), sub.basis()))
    par = []
    for w in sub.basis():
        ps = {n.parity[i] for i in w}
        if len(ps) != 1:
            raise ModuleError("mixed parity inside N[1]")
        par.append(ps.pop())
    return Module(data.jordan, par, act, name="Jor(%s)" % n.name,
                  flavor="jordan", validate=validate)


# ----------------------------------------------------------- lie_half

def _minus_embed(data: TKKData, y: int) -> dict:
    """The degree -1 copy of a J basis element: (1/2)[f, [f, y+]]."""
    g = data.lie
    return svec_scale(g.mult(data.f, g.mult(data.f, data.embed[y])),
                      mpq(1, 2))


def lie_half(m: Module, data: TKKData, validate=True) -> Module:
    """M (+) M with X(m1, m2) = (0, X o m1) for X in g[1] and
    Z_Y(m1, m2) = (-Y o m2, 0) for Z_Y = (1/2)[f,[f,Y]]; copy 2 sits in
    degree +1/2.  The action of the rest of the algebra is generated by
    brackets and certified by full module validation."""
    if m.flavor != "jordan":
        raise ModuleError("lie_half needs a Jordan bimodule")
    g, j = data.lie, data.jordan
    d = m.dim
    dim = 2 * d
    parity = list(m.parity) + list(m.parity)

    def up_op(x):
        out = QMat(dim, dim)
        src = m.action[x]
        for i, row in enumerate(src.rows):
            for k, c in row.items():
                out.set(d + i, k, c)
        return out

    def down_op(y):
        out = QMat(dim, dim)
        src = m.action[y]
        for i, row in enumerate(src.rows):
            for k, c in row.items():
                out.set(i, d + k, -c)
        return out

    gens = []
    for x in range(j.dim):
        px = j.parity[x]
        gens.append((dict(data.embed[x]), up_op(x), px))
        gens.append((_minus_embed(data, x), down_op(x), px))
    span = Subspace(g.dim)
    elems = []
    for vec, op, p in gens:
        if span.add(dict(vec)):
            elems.append((vec, op, p))
    frontier = list(elems)
    while span.dim < g.dim and frontier:
        new = []
        for vec_a, op_a, pa in frontier:
            for vec_b, op_b, pb in list(elems):
                br = g.mult(vec_a, vec_b)
                if not br or not span.add(dict(br)):
                    continue
                s = -1 if (pa * pb) % 2 else 1
                op = op_a.matmul(op_b).add(op_b.matmul(op_a), -s)
                item = (br, op, (pa + pb) % 2)
                elems.append(item)
                new.append(item)
        frontier = new
    if span.dim < g.dim:
        raise ModuleError("degree +-1 parts do not generate the algebra")
    solver = SpanSolver([vec for vec, _, _ in elems], g.dim)
    action = []
    for i in range(g.dim):
        coords = solver.solve({i: mpq(1)})
        op = QMat(dim, dim)
        for k, c in coords.items():
            op = op.add(elems[k][1], c)
        action.append(op)
    return Module(g, parity, action, name="Lie(%s)" % m.name,
                  flavor="lie", validate=validate)


# --------------------------------------------------------- lie_unital

def g0_action_on_bimodule(m: Module, data: TKKData):
    """Action of every degree-0 basis element of the Lie algebra on a
    unital Jordan bimodule.  The operator of [x+, y-] is its adjoint
    action inside the short Lie algebra of the null split extension
    J (+) M, restricted to the M block of the degree 1 part; this also
    picks up the central charge of the bimodule."""
    from .tkk import lie_of_jordan
    g, j = data.lie, data.jordan
    ext = null_split_extension(j, m)
    ext.named["unit"] = dict(j.named["unit"])
    big = lie_of_jordan(ext, validate=False)
    jd = j.dim
    fb = big.named["f"]

    def minus_big(b):
        br = big.mult(fb, big.mult(fb, {b: mpq(1)}))
        return svec_scale(br, mpq(1, 2))

    pairs = []       # (lie element, operator on M)
    span = Subspace(g.dim)
    for a in range(j.dim):
        xa = data.embed[a]
        for b in range(j.dim):
            yb = _minus_embed(data, b)
            vec = g.mult(xa, yb)
            if not vec or not span.add(dict(vec)):
                continue
            w = big.mult({a: mpq(1)}, minus_big(b))
            op = QMat(m.dim, m.dim)
            for i in range(m.dim):
                img = big.mult(w, {jd + i: mpq(1)})
                for k, c in img.items():
                    if not c:
                        continue
                    if k < jd or k >= ext.dim:
                        raise ModuleError("degree-0 action leaves M")
                    op.set(k - jd, i, c)
            pairs.append((vec, op))
    solver = SpanSolver([vec for vec, _ in pairs], g.dim)
    out = {}
    for i in range(g.dim):
        if data.degree_of(i) != 0:
            continue
        coords = solver.solve({i: mpq(1)})
        if coords is None:
            raise ModuleError(
                "degree-0 element outside [g(1), g(-1)]")
        op = QMat(m.dim, m.dim)
        for k, c in coords.items():
            op = op.add(pairs[k][1], c)
        out[i] = op
    return out


def lie_unital(m: Module, data: TKKData, extra_len: int = 3,
               validate=True) -> Module:
    """Maximal quotient of U(g) (x)_{U(p)} M lying in the short-graded
    category, p = g[0] (+) g[1] with g[1] M = 0.

    Realized inside the span of PBW monomials in g[-1] of length <= 2
    over M, modulo the trace of the submodule generated by longer
    monomials (computed with a length buffer `extra_len` and certified
    by full module validation of the result).
    """
    from .repcat.induction import _Ctx, _act
    if m.dim == 0:
        return Module(data.lie, [], [QMat(0, 0)] * data.lie.dim,
                      name="Lie(%s)" % m.name, flavor="lie",
                      validate=False)
    g = data.lie
    degs = [data.degree_of(i) for i in range(g.dim)]
    neg = [i for i in range(g.dim) if degs[i] == -1]
    p_idx = [i for i in range(g.dim) if degs[i] >= 0]
    act0 = g0_action_on_bimodule(m, data)
    p_action = {}
    for i in p_idx:
        p_action[i] = act0.get(i, QMat(m.dim, m.dim))
    lmax = 2 + extra_len
    ctx = _Ctx(g, neg, p_action, list(m.parity), max_len=lmax)

    # enumerate monomials: non-decreasing, strict at odd complement
    # elements, length <= lmax
    monos = [()]
    by_len = {0: [()]}
    for ln in range(1, lmax + 1):
        cur = []
        for s in by_len[ln - 1]:
            stop = len(neg) - 1 if not s else ctx.qpos[s[0]]
            for k in range(stop + 1):
                q = neg[k]
                if s and ctx.qpos[s[0]] == k and g.parity[q]:
                    continue
                cur.append((q,) + s)
        by_len[ln] = cur
        monos.extend(cur)
    pos = {}
    order = []
    # longer monomials first so that elimination pushes pivots there
    for s in sorted(monos, key=lambda t: -len(t)):
        for jj in range(m.dim):
            pos[(s, jj)] = len(order)
            order.append((s, jj))
    nfull = len(order)
    short = [key for key in order if len(key[0]) <= 2]
    cut = nfull - len(short)       # columns >= cut are short monomials

    def vec_of(terms):
        out = {}
        for (s, jj), c in terms.items():
            out[pos[(s, jj)]] = out.get(pos[(s, jj)], mpq(0)) + c
        return {k: v for k, v in out.items() if v}

    # close the span of long monomials under the action
    w = Subspace(nfull)
    queue = []
    for s in monos:
        if len(s) >= 3:
            for jj in range(m.dim):
                queue.append({pos[(s, jj)]: mpq(1)})
    while queue:
        v = queue.pop()
        if not w.add(v):
            continue
        for x in range(g.dim):
            img = {}
            for idx, c in v.items():
                s, jj = order[idx]
                _merge_into(img, _act(ctx, x, s, jj), c)
            iv = vec_of(img)
            if iv:
                queue.append(iv)
    # rows of w with support purely in the short region form the trace
    trace = [row for row in w.basis() if min(row) >= cut]
    rel = Subspace(len(short))
    for row in trace:
        rel.add({k - cut: c for k, c in row.items()})
    piv = set(rel.pivots)
    keep = [k for k in range(len(short)) if k not in piv]
    kpos = {k: t for t, k in enumerate(keep)}

    def reduce_short(vecfull):
        # drop long part (it is inside w by construction of the action
        # only when explicitly required; here long terms are killed by
        # the quotient), then reduce modulo the relation subspace
        sh = {k - cut: c for k, c in vecfull.items() if k >= cut}
        sh = rel.reduce(sh)
        return sh

    dim_q = len(keep)
    parity = []
    for k in keep:
        s, jj = short[k]
        parity.append((sum(g.parity[q] for q in s) + m.parity[jj]) % 2)
    action = []
    for x in range(g.dim):
        mat = QMat(dim_q, dim_q)
        for k in keep:
            s, jj = short[k]
            img = _act(ctx, x, s, jj)
            iv = reduce_short(vec_of(img))
            for r, c in iv.items():
                if r not in kpos:
                    raise ModuleError("quotient basis is not closed")
                mat.add_to(kpos[r], kpos[k], c)
        action.append(mat)
    out = Module(g, parity, action, name="Lie(%s)" % m.name,
                 flavor="lie", validate=validate)
    return out


def _merge_into(out, terms, scale):
    for key, c in terms.items():
        v = out.get(key, mpq(0)) + scale * c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
