"""Identity suites and structural invariants for the algebra constructors."""

import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from superrep.algebras.base import Superalgebra
from superrep.algebras.grassmann import (grassmann, gmul, h_lie, kantor_double,
                                         mono_degree, partial_derivative,
                                         poisson_bracket, po_lie, spo_lie)
from superrep.algebras.matrixalg import (hat_p3, jp, matrix_superalgebra,
                                         p_lie)
from superrep.algebras.osp import bilinear_form_jordan, osp
from superrep.algebras.psl22 import hat_psl22, outer_derivations, sl2_twist
from superrep.algebras.simplicity import is_simple_algebra


# ---------------------------------------------------------------- identities

JORDAN_SAMPLES = [
    lambda: kantor_double(1),
    lambda: kantor_double(2),
    lambda: kantor_double(3),
    lambda: matrix_superalgebra(1, 1, "jordan"),
    lambda: matrix_superalgebra(2, 1, "jordan"),
    lambda: matrix_superalgebra(2, 2, "jordan"),
    lambda: jp(2),
    lambda: bilinear_form_jordan(3, 1),
    lambda: bilinear_form_jordan(4, 2),
]

LIE_SAMPLES = [
    lambda: po_lie(3),
    lambda: spo_lie(4),
    lambda: spo_lie(5),
    lambda: h_lie(4),
    lambda: p_lie(4),
    lambda: hat_p3(),
    lambda: hat_psl22(),
    lambda: osp(3, 1),
    lambda: osp(4, 1),
]


@pytest.mark.parametrize("mk", JORDAN_SAMPLES)
def test_jordan_identities(mk):
    alg = mk()
    assert alg.kind == "jordan"
    alg.validate()


@pytest.mark.parametrize("mk", LIE_SAMPLES)
def test_lie_identities(mk):
    alg = mk()
    assert alg.kind == "lie"
    alg.validate()


# ------------------------------------------------------------- superdimensions

def test_superdimensions():
    assert kantor_double(1).superdim == (2, 2)
    assert kantor_double(2).superdim == (4, 4)
    assert kantor_double(3).superdim == (8, 8)
    assert spo_lie(5).dim == 2 ** 5 - 1
    assert h_lie(5).dim == 2 ** 5 - 2
    assert h_lie(4).dim == 2 ** 4 - 2
    assert p_lie(4).superdim == (15, 16)
    assert hat_p3().superdim == (16, 16)
    assert hat_psl22().superdim == (9, 8)
    assert jp(2).superdim == (4, 4)
    assert jp(3).superdim == (9, 9)
    assert osp(3, 1).superdim == (6, 6)
    assert osp(3, 2).superdim == (13, 12)
    assert bilinear_form_jordan(3, 1).superdim == (4, 2)


def test_centers():
    assert len(hat_p3().center()) == 1
    assert len(hat_psl22().center()) == 3
    assert len(p_lie(4).center()) == 0
    assert len(spo_lie(5).center()) == 1   # the constants
    assert len(h_lie(5).center()) == 0


def test_simplicity():
    expected = {
        "osp": (osp(3, 1), True),
        "kan2": (kantor_double(2), True),
        "kan3": (kantor_double(3), True),
        "gr2": (grassmann(2), False),
        "hat_psl22": (hat_psl22(), False),
        "p3": (p_lie(4), True),
        "hat_p3": (hat_p3(), False),
        "m21": (matrix_superalgebra(2, 1, "jordan"), True),
        "h4": (h_lie(4), True),
    }
    for key, (alg, want) in expected.items():
        got, _ = is_simple_algebra(alg)
        assert got is want, key


# ------------------------------------------------- Poisson bracket properties

def _random_grassmann_element(rng, n):
    return {m: mpq(rng.randint(-4, 4)) for m in range(1 << n)
            if rng.random() < 0.5}


def _homog(v, par):
    """Split a Grassmann element into its even and odd parts."""
    ev = {m: c for m, c in v.items() if mono_degree(m) % 2 == 0}
    od = {m: c for m, c in v.items() if mono_degree(m) % 2 == 1}
    return ev, od


def test_poisson_leibniz_and_antisymmetry():
    n = 4
    rng = random.Random(5)
    for _ in range(25):
        parts = [_homog(_random_grassmann_element(rng, n), None)
                 for _ in range(3)]
        for pf in (0, 1):
            for pg in (0, 1):
                for ph in (0, 1):
                    f, g, h = parts[0][pf], parts[1][pg], parts[2][ph]
                    # even bracket: {f, gh} = {f,g} h + (-1)^{|f||g|} g {f,h}
                    lhs = poisson_bracket(f, gmul(g, h), n)
                    sgn = -1 if (pf * pg) % 2 else 1
                    rhs = gmul(poisson_bracket(f, g, n), h)
                    for m, c in gmul(g, poisson_bracket(f, h, n)).items():
                        rhs[m] = rhs.get(m, mpq(0)) + sgn * c
                    rhs = {m: c for m, c in rhs.items() if c}
                    assert lhs == rhs
                    # {f,g} = -(-1)^{|f||g|} {g,f}
                    sgn2 = -1 if (pf * pg) % 2 == 0 else 1
                    back = {m: sgn2 * c
                            for m, c in poisson_bracket(g, f, n).items()}
                    assert poisson_bracket(f, g, n) == back


def test_partial_derivative_oracle():
    # d/dx1 (x1 x2 x3) = x2 x3 ; d/dx2 (x1 x2) = -x1
    assert partial_derivative({0b111: mpq(1)}, 0) == {0b110: mpq(1)}
    assert partial_derivative({0b011: mpq(1)}, 1) == {0b001: mpq(-1)}


# --------------------------------------------------------------- short sl(2)

def test_p3_short_sl2():
    alg = p_lie(4)
    e, h, f = alg.named["e"], alg.named["h"], alg.named["f"]
    assert alg.mult(e, f) == h
    assert alg.mult(h, e) == e
    assert alg.mult(h, f) == {k: -c for k, c in f.items()}
    eig = alg.grading_eigenvalues(h)
    counts = {}
    for lam in eig:
        counts[lam] = counts.get(lam, 0) + 1
    assert sorted(counts.items()) == [(mpq(-1), 8), (mpq(0), 15), (mpq(1), 8)]


# ------------------------------------------------------------------- twists

def test_sl2_twist_functoriality():
    alg = hat_psl22()
    ders = outer_derivations(alg)
    rng = random.Random(11)

    def rand_sl2():
        while True:
            u, v, w = [mpq(rng.randint(-3, 3)) for _ in range(3)]
            if u != 0:
                return (u, v, w, (1 + v * w) / u)

    for _ in range(4):
        p1, p2 = rand_sl2(), rand_sl2()
        prod = (p1[0] * p2[0] + p1[1] * p2[2],
                p1[0] * p2[1] + p1[1] * p2[3],
                p1[2] * p2[0] + p1[3] * p2[2],
                p1[2] * p2[1] + p1[3] * p2[3])
        m1 = sl2_twist(alg, p1, ders=ders)
        m2 = sl2_twist(alg, p2, ders=ders)
        mp = sl2_twist(alg, prod, ders=ders)
        assert m1.matmul(m2) == mp


# ------------------------------------------------------- element-level checks

@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_kantor_double_element_identity(seed):
    alg = kantor_double(2)
    rng = random.Random(seed)

    def rand_homog():
        p = rng.randrange(2)
        idxs = [i for i in range(alg.dim) if alg.parity[i] == p]
        return ({i: mpq(rng.randint(-3, 3)) for i in idxs
                 if rng.random() < 0.6}, p)

    (a, pa), (b, pb) = rand_homog(), rand_homog()
    # supercommutativity on elements
    ab = alg.mult(a, b)
    ba = alg.mult(b, a)
    sgn = -1 if (pa * pb) % 2 else 1
    assert ab == {k: sgn * c for k, c in ba.items()}


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_spo_element_jacobi(seed):
    alg = spo_lie(4)
    rng = random.Random(seed)

    def rand_homog():
        p = rng.randrange(2)
        idxs = [i for i in range(alg.dim) if alg.parity[i] == p]
        return ({i: mpq(rng.randint(-3, 3)) for i in idxs
                 if rng.random() < 0.4}, p)

    (a, pa), (b, pb), (c, pc) = rand_homog(), rand_homog(), rand_homog()
    lhs = alg.mult(a, alg.mult(b, c))
    s1 = alg.mult(alg.mult(a, b), c)
    s2 = alg.mult(b, alg.mult(a, c))
    if (pa * pb) % 2:
        s2 = {k: -v for k, v in s2.items()}
    tot = dict(s1)
    for k, v in s2.items():
        tot[k] = tot.get(k, mpq(0)) + v
    tot = {k: v for k, v in tot.items() if v}
    assert lhs == tot


# ------------------------------------------------------------- serialization

def test_algebra_roundtrip():
    alg = hat_psl22()
    d = alg.to_dict()
    alg2 = Superalgebra.from_dict(d)
    assert alg2.basis == alg.basis
    assert alg2.table == alg.table
    assert alg2.parity == alg.parity
