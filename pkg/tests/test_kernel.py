"""Linear algebra kernel tests.

Rank oracle for small matrices: naive minor expansion (exact, independent of
the elimination code under test).
"""

import itertools
import random
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from superrep.kernel import (QMat, Subspace, modular_rank, prime_stream,
                             rank_kernel_certified, rank_kernel_image,
                             rational_reconstruct, svec_add)


def det_minor(rows):
    """Exact determinant by expansion along the first row."""
    n = len(rows)
    if n == 0:
        return mpq(1)
    if n == 1:
        return rows[0][0]
    tot = mpq(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        tot += (-1) ** j * rows[0][j] * det_minor(sub)
    return tot


def rank_minor(rows, ncols):
    """Largest r with a nonzero r x r minor."""
    nrows = len(rows)
    for r in range(min(nrows, ncols), 0, -1):
        for rs in itertools.combinations(range(nrows), r):
            for cs in itertools.combinations(range(ncols), r):
                if det_minor([[rows[i][j] for j in cs] for i in rs]) != 0:
                    return r
    return 0


def random_qmat(rng, nrows, ncols, density=0.5):
    m = QMat(nrows, ncols)
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                m.rows[i][j] = mpq(rng.randint(-6, 6), rng.randint(1, 4))
                if m.rows[i][j] == 0:
                    del m.rows[i][j]
    return m


def test_rank_against_minor_oracle():
    rng = random.Random(0)
    for _ in range(40):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = random_qmat(rng, nr, nc)
        expect = rank_minor(m.dense(), nc)
        r, kern, piv = rank_kernel_image(m)
        assert r == expect
        assert len(kern) == nc - r
        assert len(piv) == r
        for v in kern:
            assert not m.apply(v)


def test_certified_matches_direct():
    rng = random.Random(1)
    for trial in range(15):
        nr, nc = rng.randint(1, 8), rng.randint(1, 8)
        m = random_qmat(rng, nr, nc, density=0.6)
        r1, k1, _ = rank_kernel_image(m)
        r2, k2, _ = rank_kernel_certified(m, seed=trial)
        assert r1 == r2
        assert len(k1) == len(k2)
        for v in k2:
            assert not m.apply(v)


def test_rank_one_structured():
    # rank-1 matrix with huge-ish rational entries
    u = [mpq(i + 1, 7) for i in range(6)]
    v = [mpq(3 - j, 5) for j in range(6)]
    m = QMat.from_rows([[a * b for b in v] for a in u])
    assert rank_kernel_image(m)[0] == 1
    assert rank_kernel_certified(m)[0] == 1


def test_modular_rank_certified_flag():
    m = QMat.from_rows([[1, 2], [2, 4], [0, 1]])
    r, p, cert = modular_rank(m)
    assert r == 2 and cert


def test_rational_reconstruction_roundtrip():
    p = next(prime_stream(0))
    for num, den in [(3, 7), (-22, 5), (1, 1), (0, 1), (911, 4)]:
        r = (num * pow(den, -1, p)) % p
        assert rational_reconstruct(r, p) == mpq(num, den)


def test_subspace_ops():
    s = Subspace(4, [{0: 1, 1: 1}, {2: 1}])
    t = Subspace(4, [{0: 1, 1: 1}, {3: 1}])
    assert s.dim == t.dim == 2
    assert s.intersection(t).dim == 1
    assert s.sum(t).dim == 3
    assert s.contains({0: 2, 1: 2, 2: -5})
    assert not s.contains({0: 1})
    c = s.coords({0: 3, 1: 3, 2: 1})
    acc = {}
    for x, b in zip(c, s.basis()):
        acc = svec_add(acc, b, x)
    assert acc == {0: mpq(3), 1: mpq(3), 2: mpq(1)}


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 6), st.integers(2, 6))
def test_rank_transpose_invariant(seed, nr, nc):
    rng = random.Random(seed)
    m = random_qmat(rng, nr, nc)
    assert rank_kernel_image(m)[0] == rank_kernel_image(m.transpose())[0]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_kernel_dimension_formula(seed):
    rng = random.Random(seed)
    m = random_qmat(rng, rng.randint(1, 7), rng.randint(1, 7))
    r, kern, piv = rank_kernel_image(m)
    assert r + len(kern) == m.ncols
