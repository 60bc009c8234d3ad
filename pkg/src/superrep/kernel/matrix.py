"""Sparse exact linear algebra over the rationals.

Matrices are stored row-sparse (list of {col: mpq}).  Everything here is plain
mpq elimination, suitable for small/medium or very sparse systems; large dense
systems should go through :mod:`superrep.kernel.certified`, which is also exact
but uses a fast modular pipeline with exact certification.
"""

from __future__ import annotations

import bisect

from gmpy2 import mpq

from .scalars import rat


def svec(items=None) -> dict:
    """Sparse vector: {index: mpq}, zero entries dropped."""
    out = {}
    if items:
        for k, v in (items.items() if isinstance(items, dict) else items):
            v = rat(v)
            if v != 0:
                out[k] = v
    return out


def svec_add(u: dict, v: dict, c=1) -> dict:
    """u + c*v, sparse."""
    c = rat(c)
    if c == 0:
        return dict(u)
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y == 0:
            out.pop(k, None)
        else:
            out[k] = y
    return out


def svec_scale(u: dict, c) -> dict:
    c = rat(c)
    if c == 0:
        return {}
    return {k: c * v for k, v in u.items()}


def svec_dot(u: dict, v: dict):
    if len(u) > len(v):
        u, v = v, u
    s = mpq(0)
    for k, x in u.items():
        y = v.get(k)
        if y is not None:
            s += x * y
    return s


class QMat:
    """Row-sparse matrix over mpq."""

    __slots__ = ("rows", "ncols")

    def __init__(self, nrows: int, ncols: int):
        self.rows: list[dict] = [{} for _ in range(nrows)]
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    @classmethod
    def from_rows(cls, rows, ncols=None) -> "QMat":
        """Build from dense lists or sparse dicts."""
        rows = list(rows)
        if ncols is None:
            ncols = 0
            for r in rows:
                ncols = max(ncols, (max(r) + 1 if r else 0) if isinstance(r, dict) else len(r))
        m = cls(len(rows), ncols)
        for i, r in enumerate(rows):
            if isinstance(r, dict):
                m.rows[i] = svec(r)
            else:
                m.rows[i] = svec(enumerate(r))
        return m

    @classmethod
    def identity(cls, n: int) -> "QMat":
        m = cls(n, n)
        for i in range(n):
            m.rows[i] = {i: mpq(1)}
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, mpq(0))

    def set(self, i, j, v):
        v = rat(v)
        if v == 0:
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = v

    def add_to(self, i, j, v):
        self.set(i, j, self.rows[i].get(j, 0) + rat(v))

    def dense(self) -> list[list]:
        return [[r.get(j, mpq(0)) for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "QMat":
        t = QMat(self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def matmul(self, other: "QMat") -> "QMat":
        assert self.ncols == other.nrows
        out = QMat(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    y = acc.get(j, 0) + a * b
                    if y == 0:
                        acc.pop(j, None)
                    else:
                        acc[j] = y
        return out

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            s = svec_dot(r, vec)
            if s != 0:
                out[i] = s
        return out

    def col(self, j: int) -> dict:
        out = {}
        for i, r in enumerate(self.rows):
            v = r.get(j)
            if v:
                out[i] = v
        return out

    def add(self, other: "QMat", c=1) -> "QMat":
        out = QMat(self.nrows, self.ncols)
        for i in range(self.nrows):
            out.rows[i] = svec_add(self.rows[i], other.rows[i], c)
        return out

    def scale(self, c) -> "QMat":
        out = QMat(self.nrows, self.ncols)
        for i in range(self.nrows):
            out.rows[i] = svec_scale(self.rows[i], c)
        return out

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, QMat) and self.ncols == other.ncols
                and self.rows == other.rows)

    def copy(self) -> "QMat":
        m = QMat(0, self.ncols)
        m.rows = [dict(r) for r in self.rows]
        return m

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)


def echelon(rows: list[dict], ncols: int, reduce: bool = True):
    """In-place-free row echelon form.

    Returns (erows, pivots) where erows are the nonzero echelon rows scaled to
    pivot 1 and pivots[k] is the pivot column of erows[k] (increasing).  With
    ``reduce`` the form is fully reduced (RREF).
    """
    erows: list[dict] = []
    pivots: list[int] = []
    for row in rows:
        row = dict(row)
        # reduce against every existing pivot present in the row
        for k, j in enumerate(pivots):
            c = row.get(j)
            if c is not None:
                row = svec_add(row, erows[k], -c)
        if not row:
            continue
        j = min(row)
        row = svec_scale(row, 1 / row[j])
        k = bisect.bisect_left(pivots, j)
        pivots.insert(k, j)
        erows.insert(k, row)
        if reduce:
            for t in range(len(erows)):
                if t == k:
                    continue
                c = erows[t].get(j)
                if c is not None:
                    erows[t] = svec_add(erows[t], row, -c)
    return erows, pivots


def rank_kernel_image(mat: QMat):
    """Exact (rank, kernel_basis, image_pivot_columns) by mpq elimination.

    kernel_basis is a list of sparse vectors (dicts over column indices);
    image pivot columns index an exact basis of the column space among the
    original columns.
    """
    erows, pivots = echelon(mat.rows, mat.ncols, reduce=True)
    rank = len(pivots)
    pivset = set(pivots)
    free = [j for j in range(mat.ncols) if j not in pivset]
    kernel = []
    for f in free:
        v = {f: mpq(1)}
        for k, j in enumerate(pivots):
            c = erows[k].get(f)
            if c is not None:
                v[j] = -c
        kernel.append(v)
    return rank, kernel, pivots


class Subspace:
    """Subspace of QQ^n held in reduced row echelon form."""

    def __init__(self, n: int, vectors=()):
        self.n = n
        self.erows: list[dict] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.erows)

    def reduce(self, vec: dict) -> dict:
        """Residue of vec modulo the subspace."""
        row = svec(vec)
        for k, j in enumerate(self.pivots):
            c = row.get(j)
            if c is not None:
                row = svec_add(row, self.erows[k], -c)
        return row

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def coords(self, vec: dict):
        """Coordinates of vec in the echelon basis, or None if outside."""
        row = svec(vec)
        out = []
        for k, j in enumerate(self.pivots):
            c = row.get(j, mpq(0))
            out.append(c)
            if c != 0:
                row = svec_add(row, self.erows[k], -c)
        return None if row else out

    def add(self, vec: dict) -> bool:
        """Insert vec; returns True if the dimension grew."""
        row = self.reduce(vec)
        if not row:
            return False
        j = min(row)
        row = svec_scale(row, 1 / row[j])
        k = bisect.bisect_left(self.pivots, j)
        self.pivots.insert(k, j)
        self.erows.insert(k, row)
        for t in range(len(self.erows)):
            if t == k:
                continue
            c = self.erows[t].get(j)
            if c is not None:
                self.erows[t] = svec_add(self.erows[t], row, -c)
        return True

    def basis(self) -> list[dict]:
        return [dict(r) for r in self.erows]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.n == other.n
                and self.pivots == other.pivots and self.erows == other.erows)

    def sum(self, other: "Subspace") -> "Subspace":
        s = Subspace(self.n, self.basis())
        for v in other.erows:
            s.add(v)
        return s

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-free intersection via kernel of stacked coordinates."""
        # solve a·self + b·other = 0: kernel of [B_self^T | -B_other^T]
        cols = self.dim + other.dim
        m = QMat(self.n, cols)
        for k, r in enumerate(self.erows):
            for j, v in r.items():
                m.rows[j][k] = v
        for k, r in enumerate(other.erows):
            for j, v in r.items():
                m.rows[j][self.dim + k] = m.rows[j].get(self.dim + k, 0) - v
        _, kern, _ = rank_kernel_image(m)
        out = Subspace(self.n)
        for w in kern:
            vec = {}
            for k, c in w.items():
                if k < self.dim:
                    vec = svec_add(vec, self.erows[k], c)
            out.add(vec)
        return out


class SpanSolver:
    """Express vectors exactly in a fixed (independent) spanning set.

    Rows are echelonized with an augmented identity so that coordinates in the
    *original* generators are recovered, not in the echelon basis.
    """

    def __init__(self, generators: list[dict], n: int):
        self.n = n
        self.k = len(generators)
        rows = []
        for i, g in enumerate(generators):
            r = dict(svec(g))
            r[n + i] = mpq(1)
            rows.append(r)
        self.erows, self.pivots = echelon(rows, n + self.k, reduce=True)
        for j in self.pivots:
            if j >= n:
                raise ValueError("generators are linearly dependent")

    def solve(self, vec: dict):
        """Coordinates c with vec = sum c_i * generators[i], or None."""
        r = svec(vec)
        for k, j in enumerate(self.pivots):
            c = r.get(j)
            if c is not None:
                r = svec_add(r, self.erows[k], -c)
        if any(j < self.n for j in r):
            return None
        return {i - self.n: -v for i, v in r.items()}
