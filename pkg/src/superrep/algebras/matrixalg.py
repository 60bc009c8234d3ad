"""Matrix superalgebras: gl(m|n), M+_{m,n}, JP(n), P(2n-1) and hat-P(3).

Matrices over the (m|n)-graded space are small QMats; subalgebras given by a
spanning set of homogeneous matrices are converted to structure constants by
exact coordinate solving.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..kernel.matrix import QMat, SpanSolver, svec_add
from .base import Superalgebra


def _flat(mat: QMat) -> dict:
    n = mat.ncols
    return {i * n + j: v for i, r in enumerate(mat.rows) for j, v in r.items()}


def _mat(entries: dict, size: int) -> QMat:
    m = QMat(size, size)
    for (i, j), v in entries.items():
        m.set(i, j, v)
    return m


def super_product(kind: str, x: QMat, y: QMat, px: int, py: int) -> QMat:
    xy = x.matmul(y)
    if kind == "assoc":
        return xy
    yx = y.matmul(x)
    sign = -1 if (px * py) % 2 else 1
    if kind == "lie":
        return xy.add(yx, -sign)
    return xy.add(yx, sign).scale(mpq(1, 2))  # jordan


def subalgebra_from_matrices(kind: str, mats: list[QMat], parities: list[int],
                             labels: list[str], name: str) -> Superalgebra:
    """Structure constants of the span of ``mats`` under the chosen product.

    Raises if the span is not closed.
    """
    size = mats[0].ncols
    solver = SpanSolver([_flat(m) for m in mats], size * size)
    table = {}
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            prod = super_product(kind, x, y, parities[i], parities[j])
            coords = solver.solve(_flat(prod))
            if coords is None:
                raise ValueError("%s: product %s*%s leaves the span"
                                 % (name, labels[i], labels[j]))
            if coords:
                table[(i, j)] = coords
    return Superalgebra(kind, labels, parities, table, name=name)


def matrix_superalgebra(m: int, n: int, kind: str = "assoc") -> Superalgebra:
    """Full matrix superalgebra M_{m,n} (assoc), M+_{m,n} (jordan), gl(m|n) (lie)."""
    d = m + n
    par = lambda i: 0 if i < m else 1
    basis = [(i, j) for i in range(d) for j in range(d)]
    labels = ["E%d%d" % (i + 1, j + 1) for i, j in basis]
    parity = [(par(i) + par(j)) % 2 for i, j in basis]
    idx = {b: t for t, b in enumerate(basis)}
    table = {}
    for t1, (i, j) in enumerate(basis):
        for t2, (k, l) in enumerate(basis):
            vec: dict = {}
            if j == k:
                vec[idx[(i, l)]] = mpq(1)          # E_ij E_kl = d_jk E_il
            if kind != "assoc" and l == i:
                # +- E_kl E_ij = d_li E_kj with the Koszul sign
                sign = -1 if (parity[t1] * parity[t2]) % 2 else 1
                coef = mpq(-sign) if kind == "lie" else mpq(sign)
                vec[idx[(k, j)]] = vec.get(idx[(k, j)], 0) + coef
            if kind == "jordan":
                vec = {a: v / 2 for a, v in vec.items()}
            vec = {a: v for a, v in vec.items() if v != 0}
            if vec:
                table[(t1, t2)] = vec
    names = {"assoc": "M(%d|%d)", "jordan": "M+(%d|%d)", "lie": "gl(%d|%d)"}
    alg = Superalgebra(kind, labels, parity, table, name=names[kind] % (m, n))
    if kind == "jordan":
        alg.named["unit"] = {idx[(i, i)]: mpq(1) for i in range(d)}
    return alg


# -- JP(n) and P(2n-1) ------------------------------------------------------

def _jp_basis(n: int, jordan: bool):
    """Spanning matrices for JP(n) (jordan=True) / P(2n-1) (jordan=False)
    inside gl(n|n): blocks [[A, B], [C, s A^T]] with B sym, C skew,
    s = +1 (jordan), -1 (lie, with tr A = 0)."""
    s = 1 if jordan else -1
    size = 2 * n
    mats, labels, parity = [], [], []
    if jordan:
        a_pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        a_pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for i, j in a_pairs:
        mats.append(_mat({(i, j): 1, (n + j, n + i): s}, size))
        labels.append("A%d%d" % (i + 1, j + 1))
        parity.append(0)
    if not jordan:
        for i in range(n - 1):
            mats.append(_mat({(i, i): 1, (i + 1, i + 1): -1,
                              (n + i, n + i): -1, (n + i + 1, n + i + 1): 1}, size))
            labels.append("H%d" % (i + 1))
            parity.append(0)
    for i in range(n):
        for j in range(i, n):
            ent = {(i, n + j): 1}
            if i != j:
                ent[(j, n + i)] = 1
            mats.append(_mat(ent, size))
            labels.append("B%d%d" % (i + 1, j + 1))
            parity.append(1)
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(_mat({(n + j, i): 1, (n + i, j): -1}, size))
            labels.append("C%d%d" % (i + 1, j + 1))
            parity.append(1)
    return mats, labels, parity


def jp(n: int) -> Superalgebra:
    """Jordan superalgebra JP(n) inside M+(n|n)."""
    mats, labels, parity = _jp_basis(n, jordan=True)
    alg = subalgebra_from_matrices("jordan", mats, parity, labels, "JP(%d)" % n)
    alg.named["unit"] = _named_unit(alg, labels, n)
    return alg


def _named_unit(alg, labels, n):
    vec = {}
    for i in range(n):
        vec[labels.index("A%d%d" % (i + 1, i + 1))] = mpq(1)
    return vec


def p_lie(n: int) -> Superalgebra:
    """Simple Lie superalgebra P(n-1)... call with the gl-block size n
    (p_lie(4) is P(3) inside gl(4|4))."""
    mats, labels, parity = _jp_basis(n, jordan=False)
    alg = subalgebra_from_matrices("lie", mats, parity, labels,
                                   "P(%d)" % (n - 1))
    _mark_p_structure(alg, n)
    return alg


def _mark_p_structure(alg: Superalgebra, n: int):
    # consistent grading: A 0, B +1, C -1
    deg = []
    for lab in alg.basis:
        deg.append({"A": 0, "H": 0, "B": 1, "C": -1}[lab[0]])
    alg.gradings["consistent"] = deg
    alg.h_indices = [i for i, d in enumerate(deg) if d == 0]
    alg.cartan = [i for i, lab in enumerate(alg.basis) if lab.startswith("H")]
    alg.h_generators = [i for i, lab in enumerate(alg.basis)
                        if lab[0] == "A" and
                        abs(int(lab[1]) - int(lab[2])) == 1]
    alg.restrict_weights()
    # short sl(2): e = sum E_{i,i+k}-blocks, f scaled so [e,f]=h, [h,e]=e
    if n % 2 == 0:
        k = n // 2
        e_ent, f_ent = {}, {}
        for i in range(k):
            e_ent[(i, k + i)] = 1
            e_ent[(n + k + i, n + i)] = -1
            f_ent[(k + i, i)] = mpq(1, 2)
            f_ent[(n + i, n + k + i)] = mpq(-1, 2)
        from ..kernel.matrix import SpanSolver
        mats, labels, parity = _jp_basis(n, jordan=False)
        solver = SpanSolver([_flat(m) for m in mats], 4 * n * n)
        e = solver.solve(_flat(_mat(e_ent, 2 * n)))
        f = solver.solve(_flat(_mat(f_ent, 2 * n)))
        assert e is not None and f is not None
        alg.named["e"] = e
        alg.named["f"] = f
        alg.named["h"] = alg.mult(e, f)


def hat_p3() -> Superalgebra:
    """Universal central extension of P(3): P(3) plus a central z.

    The cocycle pairs two C-block elements x, y through the scalar mu(x, y)
    with x* y + y* x = mu(x,y) Id (the * of a skew 4x4 matrix swaps it with
    its complementary-index dual); all other products are those of P(3).
    """
    base = p_lie(4)
    dim = base.dim
    basis = base.basis + ["z"]
    parity = base.parity + [0]
    table = {k: dict(v) for k, v in base.table.items()}
    cidx = [i for i, lab in enumerate(base.basis) if lab[0] == "C"]
    for i in cidx:
        for j in cidx:
            mu = _pfaff_pairing(base.basis[i], base.basis[j])
            if mu != 0:
                prev = table.get((i, j), {})
                prev[dim] = prev.get(dim, 0) + mu
                table[(i, j)] = prev
    alg = Superalgebra("lie", basis, parity, table, name="hat-P(3)")
    alg.named.update({k: dict(v) for k, v in base.named.items()})
    alg.gradings["consistent"] = base.gradings["consistent"] + [-2]
    alg.h_indices = list(base.h_indices)
    alg.cartan = list(base.cartan)
    alg.h_generators = list(base.h_generators)
    alg.restrict_weights()
    return alg


def skew_c_matrix(lab: str) -> QMat:
    """The 4x4 skew block of a C-generator: C_ij = e_ji - e_ij."""
    i, j = int(lab[1]) - 1, int(lab[2]) - 1
    return _mat({(j, i): 1, (i, j): -1}, 4)


def hodge_dual(c: QMat) -> QMat:
    """(c*)_{ab} = sgn(a,b,c,d) c_{cd} over complementary index pairs of 4."""
    out = QMat(4, 4)
    for a in range(4):
        for b in range(4):
            if a == b:
                continue
            cd = [t for t in range(4) if t not in (a, b)]
            perm = [a, b] + cd
            sign = 1
            for s in range(4):
                for t in range(s + 1, 4):
                    if perm[s] > perm[t]:
                        sign = -sign
            out.set(a, b, sign * c[cd[0], cd[1]])
    return out


def _pfaff_pairing(lab_x: str, lab_y: str):
    """mu with x* y + y* x = mu Id for skew 4x4 generators; raises if the
    combination is not scalar (it always is for skew matrices)."""
    x, y = skew_c_matrix(lab_x), skew_c_matrix(lab_y)
    m = hodge_dual(x).matmul(y).add(hodge_dual(y).matmul(x))
    mu = m[0, 0]
    if m != QMat.identity(4).scale(mu):
        raise ValueError("pairing is not scalar for %s,%s" % (lab_x, lab_y))
    return mu
