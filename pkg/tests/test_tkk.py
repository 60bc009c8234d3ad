"""Jordan <-> three-graded Lie correspondence and central extensions."""

import pytest
from gmpy2 import mpq

from superrep.algebras.grassmann import h_lie, kantor_double, spo_lie
from superrep.algebras.matrixalg import jp, matrix_superalgebra, p_lie
from superrep.algebras.osp import bilinear_form_jordan, osp
from superrep.algebras.psl22 import hat_psl22, psl22
from superrep.cohom import h2_trivial
from superrep.tkk import (jor_of_lie, lie_of_jordan, short_grading_from_h,
                          universal_central_extension)

ROUND_TRIP = [
    lambda: matrix_superalgebra(1, 1, "jordan"),
    lambda: matrix_superalgebra(2, 1, "jordan"),
    lambda: jp(2),
    lambda: kantor_double(2),
    lambda: bilinear_form_jordan(3, 1),
]


@pytest.mark.parametrize("mk", ROUND_TRIP)
def test_round_trip(mk):
    J = mk()
    g = lie_of_jordan(J)          # validates super-Jacobi internally
    J2 = jor_of_lie(g)            # validates the Jordan identity internally
    assert J2.superdim == J.superdim
    for i in range(J.dim):
        for j in range(J.dim):
            assert J2.mult_basis(i, j) == J.mult_basis(i, j)


def test_known_lie_targets():
    # Lie(JP(2)) has the size of P(3)
    assert lie_of_jordan(jp(2)).superdim == p_lie(4).superdim == (15, 16)
    # Lie(Kan(n)) has the size of H(n+3)
    assert lie_of_jordan(kantor_double(2)).dim == h_lie(5).dim == 30
    assert lie_of_jordan(kantor_double(3)).dim == h_lie(6).dim == 62
    # Lie(M+(1,1)) has the size of psl(2|2)
    assert lie_of_jordan(matrix_superalgebra(1, 1, "jordan")).superdim \
        == psl22().superdim == (6, 8)
    # Lie of the bilinear-form algebra on QQ^(m-3|2n) is osp(m|2n)-sized
    assert lie_of_jordan(bilinear_form_jordan(3, 1)).superdim \
        == osp(6, 1).superdim == (18, 12)


def test_short_sl2():
    g = lie_of_jordan(jp(2))
    e, h, f = g.named["e"], g.named["h"], g.named["f"]
    assert g.mult(e, f) == h
    assert g.mult(h, e) == e
    assert g.mult(h, f) == {k: -c for k, c in f.items()}
    parts = short_grading_from_h(g, h)
    assert sorted(parts) == [mpq(-1), mpq(0), mpq(1)]
    assert len(parts[mpq(1)]) == len(parts[mpq(-1)]) == jp(2).dim


def test_h2_values():
    assert h2_trivial(p_lie(4), 0)[0] == 1      # P(3) is exceptional
    assert h2_trivial(p_lie(4), 1)[0] == 0
    assert h2_trivial(p_lie(5), 0)[0] == 0      # P(4) has none
    assert h2_trivial(p_lie(5), 1)[0] == 0
    assert h2_trivial(psl22(), 0)[0] == 3
    assert h2_trivial(psl22(), 1)[0] == 0
    assert h2_trivial(h_lie(5), 0)[0] == 1
    assert h2_trivial(h_lie(5), 1)[0] == 0


def test_uce_matches_explicit_extensions():
    u = universal_central_extension(psl22())
    assert u.superdim == hat_psl22().superdim == (9, 8)
    assert len(u.center()) == 3
    u = universal_central_extension(h_lie(5))
    assert u.superdim == spo_lie(5).superdim == (16, 15)
    assert len(u.center()) == 1
