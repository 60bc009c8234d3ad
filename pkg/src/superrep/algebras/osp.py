"""Orthosymplectic Lie superalgebras and bilinear-form Jordan superalgebras.

Both are built from a split supersymmetric bilinear form on an (m|2n)
superspace: antidiagonal ones on the even part, the standard symplectic form
on the odd part.  Splitness keeps every construction rational: the Cartan
subalgebra consists of honest diagonal matrices.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..kernel.matrix import QMat, rank_kernel_image
from .base import Superalgebra
from .matrixalg import subalgebra_from_matrices


def form_matrix(m: int, n: int) -> QMat:
    """Gram matrix of the split supersymmetric form on QQ^(m|2n)."""
    d = m + 2 * n
    b = QMat(d, d)
    for i in range(m):
        b.set(i, m - 1 - i, 1)
    for i in range(n):
        b.set(m + i, m + n + i, 1)
        b.set(m + n + i, m + i, -1)
    return b


def _space_parity(m: int, n: int):
    return [0] * m + [1] * (2 * n)


def osp(m: int, n: int) -> Superalgebra:
    """osp(m|2n) preserving the split form, with diagonal Cartan."""
    d = m + 2 * n
    par = _space_parity(m, n)
    b = form_matrix(m, n)
    mats, parities = [], []
    for p in (0, 1):
        # entries (k, i) of a parity-p matrix: par[k] + par[i] == p
        pos = [(k, i) for k in range(d) for i in range(d)
               if (par[k] + par[i]) % 2 == p]
        loc = {kc: t for t, kc in enumerate(pos)}
        # b(X e_i, e_j) + (-1)^(p par_i) b(e_i, X e_j) = 0
        rows = []
        for i in range(d):
            for j in range(d):
                row = {}
                for k in range(d):
                    if (k, i) in loc and b[k, j]:
                        row[loc[(k, i)]] = row.get(loc[(k, i)], 0) + b[k, j]
                    if (k, j) in loc and b[i, k]:
                        s = -1 if (p * par[i]) % 2 else 1
                        row[loc[(k, j)]] = row.get(loc[(k, j)], 0) + s * b[i, k]
                if row:
                    rows.append(row)
        _, kern, _ = rank_kernel_image(QMat.from_rows(rows, len(pos)))
        for v in kern:
            mat = QMat(d, d)
            for t, c in v.items():
                mat.set(*pos[t], c)
            mats.append(mat)
            parities.append(p)
    labels = ["x%d" % t for t in range(len(mats))]
    alg = subalgebra_from_matrices("lie", mats, parities, labels,
                                   name="osp(%d|%d)" % (m, 2 * n))
    alg.space_parity = par
    alg.rep_matrices = mats
    # Cartan: members whose matrix is diagonal
    diag = [t for t, mt in enumerate(mats)
            if all(j == i for i, r in enumerate(mt.rows) for j in r)]
    alg.cartan = diag
    alg.h_indices = [t for t in range(len(mats)) if parities[t] == 0]
    alg.h_generators = [t for t in alg.h_indices if t not in diag]
    alg.restrict_weights()
    return alg


def bilinear_form_jordan(m: int, n: int) -> Superalgebra:
    """Unital Jordan superalgebra QQ 1 + V, v . w = f(v, w) 1 for the split
    supersymmetric form f on V = QQ^(m|2n)."""
    d = m + 2 * n
    par = [0] + _space_parity(m, n)
    b = form_matrix(m, n)
    labels = ["e"] + ["v%d" % i for i in range(d)]
    table = {}
    for i in range(d + 1):
        table[(0, i)] = {i: mpq(1)}
        if i:
            table[(i, 0)] = {i: mpq(1)}
    for i in range(d):
        for j in range(d):
            v = b[i, j]
            if v:
                table[(i + 1, j + 1)] = {0: mpq(v)}
    alg = Superalgebra("jordan", labels, par, table,
                       name="J(%d|%d)" % (m, 2 * n))
    alg.named["unit"] = {0: mpq(1)}
    alg.validate()
    return alg
