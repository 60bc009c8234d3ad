"""Three-graded Lie superalgebras from Jordan superalgebras and back.

`lie_of_jordan` realizes the three-graded Lie superalgebra g(-1) + g(0) + g(1)
attached to a Jordan superalgebra J: the outer pieces are two copies of J, and
g(0) is spanned by pairs (V_{x,y}, V_{y,x}) of triple-product operators acting
on the two copies.  All structure constants are produced concretely and the
result is validated (super-Jacobi) before being returned.

`jor_of_lie` inverts the construction: given a Lie superalgebra with a short
sl(2) (e, h, f with [e,f]=h, [h,e]=e, [h,f]=-f), the +1 eigenspace of ad h
carries the Jordan product x . y = [[x, f], y].
"""

from __future__ import annotations

from gmpy2 import mpq

from .algebras.base import Superalgebra
from .kernel.matrix import QMat, SpanSolver, Subspace, svec_add


def triple_product_operator(alg: Superalgebra, x: dict, y: dict) -> QMat:
    """V_{x,y} z = (x.y).z + x.(y.z) - (-1)^{|x||y|} y.(x.z) for homogeneous
    x, y given as sparse vectors."""
    px = _parity_of(alg, x)
    py = _parity_of(alg, y)
    sgn = -1 if (px * py) % 2 else 1
    xy = alg.mult(x, y)
    m = QMat(alg.dim, alg.dim)
    for j in range(alg.dim):
        z = {j: mpq(1)}
        out = alg.mult(xy, z)
        out = svec_add(out, alg.mult(x, alg.mult(y, z)))
        out = svec_add(out, alg.mult(y, alg.mult(x, z)), -sgn)
        for i, c in out.items():
            m.set(i, j, c)
    return m


def _parity_of(alg, v):
    ps = {alg.parity[i] for i in v}
    if len(ps) > 1:
        raise ValueError("element is not homogeneous")
    return ps.pop() if ps else 0


def _pair_flat(a: QMat, b: QMat) -> dict:
    n = a.nrows
    out = {}
    for i, r in enumerate(a.rows):
        for j, v in r.items():
            out[i * n + j] = v
    for i, r in enumerate(b.rows):
        for j, v in r.items():
            out[n * n + i * n + j] = v
    return out


def lie_of_jordan(alg: Superalgebra, validate: bool = True) -> Superalgebra:
    if alg.kind != "jordan":
        raise ValueError("expected a Jordan superalgebra")
    n = alg.dim

    # span of pairs (V_{x,y}, -(-1)^{|x||y|} V_{y,x}) over basis pairs
    gens = []             # (flat vector, parity)
    span = Subspace(2 * n * n)
    for i in range(n):
        for j in range(n):
            s = 1 if (alg.parity[i] * alg.parity[j]) % 2 else -1
            a = triple_product_operator(alg, {i: mpq(1)}, {j: mpq(1)})
            b = triple_product_operator(alg, {j: mpq(1)}, {i: mpq(1)}).scale(s)
            flat = _pair_flat(a, b)
            if flat and span.add(flat):
                gens.append((flat, (alg.parity[i] + alg.parity[j]) % 2))
    span0 = SpanSolver([g for g, _ in gens], 2 * n * n)

    def unflat(v):
        a = QMat(n, n)
        b = QMat(n, n)
        for t, c in v.items():
            if t < n * n:
                a.set(t // n, t % n, c)
            else:
                t -= n * n
                b.set(t // n, t % n, c)
        return a, b

    g0 = [unflat(v) for v, _ in gens]
    g0par = [p for _, p in gens]
    m0 = len(g0)

    # global basis: g(1) = x+, g(-1) = x-, then g(0)
    labels = (["p:%s" % l for l in alg.basis] + ["m:%s" % l for l in alg.basis]
              + ["V%d" % t for t in range(m0)])
    parity = list(alg.parity) + list(alg.parity) + g0par
    dim = 2 * n + m0
    P, M, V0 = 0, n, 2 * n

    def coords_of_pair(a: QMat, b: QMat):
        c = span0.solve(_pair_flat(a, b))
        if c is None:
            raise ValueError("operator pair escapes g(0): not closed")
        return c

    table = {}

    def put(i, j, vec):
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            table[(i, j)] = dict(vec)
        # super-antisymmetry partner
        s = -1 if (parity[i] * parity[j]) % 2 else 1
        back = {k: -s * v for k, v in vec.items() if v}
        if back:
            table[(j, i)] = back

    # [x+, y-] = pair(V_{x,y}, -(-1)^{|x||y|} V_{y,x})
    for i in range(n):
        for j in range(n):
            s = 1 if (alg.parity[i] * alg.parity[j]) % 2 else -1
            a = triple_product_operator(alg, {i: mpq(1)}, {j: mpq(1)})
            b = triple_product_operator(alg, {j: mpq(1)}, {i: mpq(1)}).scale(s)
            coords = coords_of_pair(a, b)
            put(P + i, M + j, {V0 + t: c for t, c in coords.items()})
    # [V, x+] = (A x)+ ; [V, x-] = (B x)-  (the pair sign carries the minus)
    for t, (a, b) in enumerate(g0):
        for i in range(n):
            img = a.col(i)
            put(V0 + t, P + i, {P + k: c for k, c in img.items()})
            img = b.col(i)
            put(V0 + t, M + i, {M + k: c for k, c in img.items()})
    # [V, V'] componentwise super-commutator
    for t in range(m0):
        for u in range(t, m0):
            s = -1 if (g0par[t] * g0par[u]) % 2 else 1
            a = g0[t][0].matmul(g0[u][0]).add(g0[u][0].matmul(g0[t][0]), -s)
            b = g0[t][1].matmul(g0[u][1]).add(g0[u][1].matmul(g0[t][1]), -s)
            coords = coords_of_pair(a, b)
            put(V0 + t, V0 + u, {V0 + c: v for c, v in coords.items()})

    out = Superalgebra("lie", labels, parity,
                       {k: v for k, v in table.items() if v},
                       name="TKK(%s)" % alg.name)
    out.gradings["short"] = [1] * n + [-1] * n + [0] * m0
    if "unit" in alg.named:
        e = alg.named["unit"]
        out.named["e"] = {P + k: c for k, c in e.items()}
        out.named["f"] = {M + k: c for k, c in e.items()}
        out.named["h"] = out.mult(out.named["e"], out.named["f"])
    if validate:
        out.validate()
    return out


def short_grading_from_h(alg: Superalgebra, h: dict):
    """Partition of basis indices by ad(h) eigenvalue; requires eigenbasis."""
    eig = alg.grading_eigenvalues(h)
    parts = {}
    for i, lam in enumerate(eig):
        parts.setdefault(lam, []).append(i)
    return parts


def jor_of_lie(alg: Superalgebra, e: dict = None, h: dict = None,
               f: dict = None, validate: bool = True) -> Superalgebra:
    """Jordan superalgebra on the +1 eigenspace of ad h, x . y = [[x, f], y]."""
    e = e if e is not None else alg.named["e"]
    h = h if h is not None else alg.named["h"]
    f = f if f is not None else alg.named["f"]
    if alg.mult(e, f) != h:
        raise ValueError("[e,f] != h")
    if alg.mult(h, e) != e:
        raise ValueError("[h,e] != e: not a short sl(2) normalization")
    parts = short_grading_from_h(alg, h)
    ones = parts.get(mpq(1), [])
    sub = Subspace(alg.dim, [{i: mpq(1)} for i in ones])
    labels = [alg.basis[i] for i in ones]
    parity = [alg.parity[i] for i in ones]
    table = {}
    for a, i in enumerate(ones):
        xf = alg.mult({i: mpq(1)}, f)
        for b, j in enumerate(ones):
            prod = alg.mult(xf, {j: mpq(1)})
            coords = sub.coords(prod)
            if coords is None:
                raise ValueError("product leaves the +1 eigenspace")
            vec = {k: c for k, c in enumerate(coords) if c}
            if vec:
                table[(a, b)] = vec
    out = Superalgebra("jordan", labels, parity, table,
                       name="Jor(%s)" % alg.name)
    unit = sub.coords(e)
    if unit is not None:
        out.named["unit"] = {k: c for k, c in enumerate(unit) if c}
    if validate:
        out.validate()
    return out


def universal_central_extension(alg: Superalgebra,
                                validate: bool = True) -> Superalgebra:
    """Central extension of a (perfect) Lie superalgebra by representatives of
    its degree-2 cohomology with trivial coefficients, in both parities."""
    from .cohom import h2_trivial
    reps = []
    for p in (0, 1):
        _, rp = h2_trivial(alg, parity=p, representatives=True)
        reps.extend((c, p) for c in rp)
    n = alg.dim
    labels = list(alg.basis) + ["z%d" % t for t in range(len(reps))]
    parity = list(alg.parity) + [p for _, p in reps]
    table = {}
    for (i, j), v in alg.table.items():
        table[(i, j)] = dict(v)
    for t, (c, _) in enumerate(reps):
        for (i, j), val in c.items():
            table.setdefault((i, j), {})[n + t] = \
                table.get((i, j), {}).get(n + t, mpq(0)) + val
            if i != j:
                s = 1 if (alg.parity[i] * alg.parity[j]) % 2 else -1
                table.setdefault((j, i), {})[n + t] = \
                    table.get((j, i), {}).get(n + t, mpq(0)) + s * val
    out = Superalgebra("lie", labels, parity,
                       {k: {a: b for a, b in v.items() if b}
                        for k, v in table.items()},
                       name="uce(%s)" % alg.name)
    if validate:
        out.validate()
    return out
