"""The 17-dimensional universal central extension of psl(2|2).

Basis: even h1, h2, E12, E21, E34, E43, z0, z1, zm1; odd E13, E14, E23, E24,
E31, E32, E41, E42 (elementary-matrix names inside gl(2|2); z0 is the image of
the central diagonal of sl(2|2), z1/zm1 pair the two off-diagonal odd blocks
through the determinant polarization cocycle).

The outer sl(2) acts by derivations Ed, Hd, Fd built from the * involution
[a b; c d]* = [d -b; -c a] on the odd blocks; integral points of the
corresponding SL(2) act by automorphisms (sl2_twist).
"""

from __future__ import annotations

from gmpy2 import mpq

from ..kernel.matrix import QMat, rank_kernel_image, svec, svec_add, svec_scale
from .base import Superalgebra

EVEN = ["h1", "h2", "E12", "E21", "E34", "E43", "z0", "z1", "zm1"]
ODD = ["E13", "E14", "E23", "E24", "E31", "E32", "E41", "E42"]
BASIS = EVEN + ODD
_B_BLOCK = ["E13", "E14", "E23", "E24"]
_C_BLOCK = ["E31", "E32", "E41", "E42"]


def _gl_mult(x: tuple, y: tuple):
    return {(x[0], y[1]): mpq(1)} if x[1] == y[0] else {}


def _diag_to_basis(diag: dict):
    """a1 E11 + ... + a4 E44 -> combination of h1, h2, z0 (must be consistent)."""
    a = [diag.get(i, mpq(0)) for i in range(1, 5)]
    if a[0] + a[1] != a[2] + a[3]:
        raise ValueError("diagonal not in the span of h1, h2, z0")
    out = {}
    if a[0] - a[1]:
        out["h1"] = (a[0] - a[1]) / 2
    if a[2] - a[3]:
        out["h2"] = (a[2] - a[3]) / 2
    if a[0] + a[1]:
        # z0 is the class of the identity matrix, diag(1,1,1,1)
        out["z0"] = (a[0] + a[1]) / 2
    return out


def _det_polarization(x: tuple, y: tuple) -> int:
    """det(B+B') - det B - det B' for the 2x2 blocks of two same-block odd
    elementary matrices; this is the central cocycle pairing."""
    bi, bj = x
    ci, cj = y
    if (bi, bj) == (ci, cj):
        return 0
    if bi != ci and bj != cj:
        # e_{bi,bj} and e_{ci,cj} sit in complementary positions
        return 1 if (bi - ci) * (bj - cj) > 0 else -1
    return 0


def hat_psl22() -> Superalgebra:
    parity = [0] * len(EVEN) + [1] * len(ODD)
    idx = {lab: i for i, lab in enumerate(BASIS)}
    elem = {lab: (int(lab[1]), int(lab[2])) for lab in BASIS if lab[0] == "E"}
    elem["h1"] = None

    def as_diag(lab):
        if lab == "h1":
            return {1: mpq(1), 2: mpq(-1)}
        if lab == "h2":
            return {3: mpq(1), 4: mpq(-1)}
        return None

    table = {}
    for i, x in enumerate(BASIS):
        for j, y in enumerate(BASIS):
            if x.startswith("z") or y.startswith("z"):
                continue
            # multiply in gl(2|2)
            prod: dict = {}
            xs = ([(k, mpq(1) if k == 1 else mpq(-1))
                   for k in ([1, 2] if x == "h1" else [3, 4])]
                  if x in ("h1", "h2") else None)
            # represent each generator as dict {(r,c): coeff}
            xm = ({(1, 1): mpq(1), (2, 2): mpq(-1)} if x == "h1" else
                  {(3, 3): mpq(1), (4, 4): mpq(-1)} if x == "h2" else
                  {(int(x[1]), int(x[2])): mpq(1)})
            ym = ({(1, 1): mpq(1), (2, 2): mpq(-1)} if y == "h1" else
                  {(3, 3): mpq(1), (4, 4): mpq(-1)} if y == "h2" else
                  {(int(y[1]), int(y[2])): mpq(1)})
            sign = -1 if (parity[i] * parity[j]) % 2 else 1
            acc: dict = {}
            for (a, b), cx in xm.items():
                for (c, d), cy in ym.items():
                    if b == c:
                        acc[(a, d)] = acc.get((a, d), 0) + cx * cy
                    if d == a:
                        acc[(c, b)] = acc.get((c, b), 0) - sign * cx * cy
            diag = {}
            vec = {}
            for (a, b), v in acc.items():
                if v == 0:
                    continue
                if a == b:
                    diag[a] = diag.get(a, 0) + v
                else:
                    vec[idx["E%d%d" % (a, b)]] = v
            for lab, v in _diag_to_basis(diag).items():
                vec[idx[lab]] = vec.get(idx[lab], 0) + v
            # central cocycle on pairs from the same odd off-diagonal block
            if x in _B_BLOCK and y in _B_BLOCK:
                c = _det_polarization((int(x[1]), int(x[2])),
                                      (int(y[1]), int(y[2])))
                if c:
                    vec[idx["z1"]] = vec.get(idx["z1"], 0) + c
            if x in _C_BLOCK and y in _C_BLOCK:
                c = _det_polarization((int(x[1]), int(x[2])),
                                      (int(y[1]), int(y[2])))
                if c:
                    vec[idx["zm1"]] = vec.get(idx["zm1"], 0) + c
            vec = {k: mpq(v) for k, v in vec.items() if v != 0}
            if vec:
                table[(i, j)] = vec
    alg = Superalgebra("lie", BASIS, parity, table, name="hat-psl(2|2)")
    alg.h_indices = [idx[l] for l in ("h1", "h2", "E12", "E21", "E34", "E43")]
    alg.cartan = [idx["h1"], idx["h2"]]
    alg.h_generators = [idx[l] for l in ("E12", "E21", "E34", "E43")]
    alg.restrict_weights()
    # five-term grading by the outer Cartan Hd
    hdeg = []
    for lab in BASIS:
        if lab == "z1":
            hdeg.append(2)
        elif lab == "zm1":
            hdeg.append(-2)
        elif lab in _B_BLOCK:
            hdeg.append(1)
        elif lab in _C_BLOCK:
            hdeg.append(-1)
        else:
            hdeg.append(0)
    alg.gradings["outer"] = hdeg
    return alg


_STAR = {  # x* of the 2x2 block e_rc: (coeff, e_r'c')
    (1, 1): (1, (2, 2)), (2, 2): (1, (1, 1)),
    (1, 2): (-1, (1, 2)), (2, 1): (-1, (2, 1)),
}


def _block_of(lab):
    """(block, 2x2 position) for an odd generator; block 'B' rows 1-2 cols 3-4."""
    r, c = int(lab[1]), int(lab[2])
    if r <= 2:
        return "B", (r, c - 2)
    return "C", (r - 2, c)


def _lab_of(block, pos):
    r, c = pos
    return "E%d%d" % ((r, c + 2) if block == "B" else (r + 2, c))


def outer_derivations(alg: Superalgebra):
    """(Ed, Hd, Fd) as QMats on the algebra basis.

    Ed maps the C block to the B block through *, Fd the B block to the C
    block; Hd is the outer grading.  Values on the center are solved from the
    derivation property and the result is validated on every basis pair.
    """
    idx = {lab: i for i, lab in enumerate(BASIS)}
    n = alg.dim

    def base_map(kind):
        m = QMat(n, n)
        for lab in BASIS:
            i = idx[lab]
            if kind == "H":
                d = alg.gradings["outer"][i]
                if d and not lab.startswith("z"):
                    m.set(i, i, d)
            elif lab[0] == "E" and lab not in ("E12", "E21", "E34", "E43"):
                blk, pos = _block_of(lab)
                if kind == "E" and blk == "C":
                    coef, pos2 = _STAR[pos]
                    m.set(idx[_lab_of("B", pos2)], i, coef)
                if kind == "F" and blk == "B":
                    coef, pos2 = _STAR[pos]
                    m.set(idx[_lab_of("C", pos2)], i, coef)
        return m

    out = []
    zcols = [idx["z0"], idx["z1"], idx["zm1"]]
    for kind in ("E", "H", "F"):
        m = base_map(kind)
        # unknown center images: D(z_c) = sum_r u_{c,r} basis_r; derivation
        # property D[x,y] = [Dx,y] + [x,Dy] is linear in the unknowns.
        rows = []
        rhs = []
        for i in range(n):
            for j in range(n):
                br = alg.mult_basis(i, j)
                want = svec_add(alg.mult(m.col(i), {j: mpq(1)}),
                                alg.mult({i: mpq(1)}, m.col(j)))
                have = {}
                lin = {}
                for k, c in br.items():
                    if k in zcols:
                        for r in range(n):
                            lin[(k, r)] = lin.get((k, r), 0) + c
                    else:
                        have = svec_add(have, m.col(k), c)
                diff = svec_add(want, have, -1)
                # sum_{(k,r)} lin * u_{k,r} e_r == diff
                for r in range(n):
                    row = {}
                    for (k, rr), c in lin.items():
                        if rr == r:
                            row[zcols.index(k)] = c
                    d = diff.get(r, mpq(0))
                    if row or d != 0:
                        rows.append((row, r, d))
        # solve small least-constraint system for u_{c,r} (3 unknown vectors)
        unk = {}
        sys_rows = []
        sys_rhs = []
        for row, r, d in rows:
            sys_rows.append({c * n + r for c in row})
            # build dense solve instead: 3n unknowns
        mat = QMat(len(rows), 3 * n)
        vecb = {}
        for t, (row, r, d) in enumerate(rows):
            for c, coef in row.items():
                mat.rows[t][c * n + r] = mat.rows[t].get(c * n + r, 0) + coef
            if d != 0:
                vecb[t] = d
        sol = _solve(mat, vecb)
        if sol is None:
            raise ValueError("no derivation extension for %s" % kind)
        for c in range(3):
            for r in range(n):
                v = sol.get(c * n + r, mpq(0))
                if v != 0:
                    m.set(r, zcols[c], v)
        out.append(m)
    Ed, Hd, Fd = out
    _check_derivation(alg, Ed)
    _check_derivation(alg, Hd)
    _check_derivation(alg, Fd)
    comm = Ed.matmul(Fd).add(Fd.matmul(Ed), -1)
    assert comm == Hd, "sl2 relation [E,F]=H fails"
    assert Hd.matmul(Ed).add(Ed.matmul(Hd), -1) == Ed.scale(2)
    assert Hd.matmul(Fd).add(Fd.matmul(Hd), -1) == Fd.scale(-2)
    return Ed, Hd, Fd


def _solve(mat: QMat, rhs: dict):
    """One solution of mat x = rhs, or None."""
    aug = QMat(mat.nrows, mat.ncols + 1)
    for i in range(mat.nrows):
        aug.rows[i] = dict(mat.rows[i])
        if rhs.get(i):
            aug.rows[i][mat.ncols] = -rhs[i]
    _, kern, _ = rank_kernel_image(aug)
    for v in kern:
        c = v.get(mat.ncols)
        if c:
            sol = {k: x / c for k, x in v.items() if k != mat.ncols}
            return sol
    return {} if not rhs else None


def _check_derivation(alg: Superalgebra, d: QMat):
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = {}
            for k, c in alg.mult_basis(i, j).items():
                lhs = svec_add(lhs, d.col(k), c)
            rhs = svec_add(alg.mult(d.col(i), {j: mpq(1)}),
                           alg.mult({i: mpq(1)}, d.col(j)))
            if lhs != rhs:
                raise AssertionError("derivation fails at %s,%s"
                                     % (alg.basis[i], alg.basis[j]))


def _exp_nilpotent(m: QMat, c) -> QMat:
    """exp(c m) for m nilpotent of index <= 4."""
    out = QMat.identity(m.nrows)
    term = QMat.identity(m.nrows)
    fact = 1
    for k in range(1, 5):
        term = term.matmul(m).scale(c)
        fact *= k
        if term.is_zero():
            break
        out = out.add(term, mpq(1, fact))
    return out


def sl2_twist(alg: Superalgebra, phi, ders=None) -> QMat:
    """Automorphism of the algebra from phi = (u, v, w, z) in SL(2, QQ).

    Built by Gauss decomposition through exp of the outer derivations and the
    outer-grading scaling; the automorphism property is re-checked on every
    basis pair.
    """
    u, v, w, z = [mpq(x) for x in phi]
    assert u * z - v * w == 1, "phi must have determinant 1"
    Ed, Hd, Fd = ders if ders is not None else outer_derivations(alg)

    def torus(s) -> QMat:
        m = QMat(alg.dim, alg.dim)
        for i, d in enumerate(alg.gradings["outer"]):
            m.set(i, i, s ** d if d >= 0 else mpq(1) / (s ** (-d)))
        return m

    def from_matrix(u, v, w, z) -> QMat:
        if u != 0:
            # [[u,v],[w,z]] = L(w/u) D(u) U(v/u)
            return _exp_nilpotent(Fd, w / u).matmul(
                torus(u)).matmul(_exp_nilpotent(Ed, v / u))
        # u == 0: S = U(1) L(-1) U(1) maps to [[0,1],[-1,0]]; phi = S phi2
        # with phi2 = S^{-1} phi = [[-w, -z], [u, v]] = [[-w,-z],[0,v]]
        s_auto = _exp_nilpotent(Ed, 1).matmul(
            _exp_nilpotent(Fd, -1)).matmul(_exp_nilpotent(Ed, 1))
        return s_auto.matmul(from_matrix(-w, -z, u, v))

    m = from_matrix(u, v, w, z)
    _check_automorphism(alg, m)
    return m


def _check_automorphism(alg: Superalgebra, m: QMat):
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = {}
            for k, c in alg.mult_basis(i, j).items():
                lhs = svec_add(lhs, m.col(k), c)
            rhs = alg.mult(m.col(i), m.col(j))
            if lhs != rhs:
                raise AssertionError("automorphism fails at %s,%s"
                                     % (alg.basis[i], alg.basis[j]))


def psl22() -> Superalgebra:
    """The simple quotient of hat_psl22 by its three-dimensional center."""
    from .base import quotient_by_basis_indices
    hat = hat_psl22()
    drop = [i for i, lab in enumerate(BASIS) if lab.startswith("z")]
    out = quotient_by_basis_indices(hat, drop, name="psl(2|2)")
    out.cartan = [out.index("h1"), out.index("h2")]
    out.h_indices = [out.index(l)
                     for l in ("h1", "h2", "E12", "E21", "E34", "E43")]
    out.h_generators = [out.index(l) for l in ("E12", "E21", "E34", "E43")]
    out.restrict_weights()
    return out
