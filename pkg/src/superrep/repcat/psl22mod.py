"""Kac-type modules over the 17-dimensional central extension of
psl(2|2), and the quadric geometry of its central characters.

The parabolic contains the whole even part plus the positive odd block
(E13, E14, E23, E24); its complement is the purely odd negative block,
so induction from a character has dimension 16.  The bracket of two
positive odd elements hits the central element z1, which forces the
character to vanish there; characters are therefore pairs (c, p) acting
through (z0, zm1), i.e. chi = (c, p, 0) in the (z0, zm1, z1) order.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..algebras.psl22 import hat_psl22
from ..kernel.matrix import QMat
from .induction import character_module, induced_module
from .module import Module, ModuleError

NEGATIVE_ODD = ("E31", "E32", "E41", "E42")


def parabolic_labels(alg):
    return [l for l in alg.basis if l not in NEGATIVE_ODD]


def kac_module(c, p, alg=None, validate=True) -> Module:
    """K_chi for chi = (c, p, 0) on (z0, zm1, z1); dimension 16."""
    alg = alg if alg is not None else hat_psl22()
    pl = parabolic_labels(alg)
    act, par = character_module(alg, pl, {"z0": mpq(c), "zm1": mpq(p)})
    return induced_module(alg, pl, act, par,
                          name="K(%s,%s,0)" % (c, p), validate=validate)


def compatible_lines(chi):
    """Solutions (t1 : t2) in P^1 of chi(t1^2 z1 + 2 t1 t2 z0 + t2^2 zm1)
    = 0 for a nonzero central character chi = (c, p, k) on (z0, zm1, z1).
    Returns a list of projective points as (t1, t2) pairs; 1 or 2 of them
    over the rationals when the discriminant is a square."""
    c, p, k = (mpq(x) for x in chi)
    if not (c or p or k):
        raise ModuleError("the zero character is rejected")
    # k t1^2 + 2c t1 t2 + p t2^2 = 0
    if k == 0:
        if c == 0:
            return [(1, 0)]         # p t2^2 = 0
        lines = [(mpq(1), mpq(0))]  # t2 = 0
        # 2c t1 + p t2 = 0
        lines.append((-p / (2 * c), mpq(1)))
        return sorted(set(lines))
    disc = 4 * c * c - 4 * k * p
    if disc == 0:
        return [(-c / k, mpq(1))]
    root = _sqrt_rational(disc)
    if root is None:
        return []                   # no rational line
    return sorted({((-2 * c + root) / (2 * k), mpq(1)),
                   ((-2 * c - root) / (2 * k), mpq(1))})


def _sqrt_rational(q):
    from gmpy2 import isqrt
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return mpq(rn, rd)
    return None


def o1_standard_module(alg=None, validate=True) -> Module:
    """The (2|2)-dimensional module on which the algebra acts through the
    gl(2|2) matrix realization (central labels act by zero except the
    degree-0 one fixed by the cocycle normalization)."""
    alg = alg if alg is not None else hat_psl22()
    act = []
    for lab in alg.basis:
        m = QMat(4, 4)
        if lab.startswith("E"):
            i, j = int(lab[1]) - 1, int(lab[2]) - 1
            m.set(i, j, 1)
        elif lab == "h1":
            m.set(0, 0, 1)
            m.set(1, 1, -1)
        elif lab == "h2":
            m.set(2, 2, 1)
            m.set(3, 3, -1)
        elif lab == "z0":
            m = QMat.identity(4)
        act.append(m)
    return Module(alg, [0, 0, 1, 1], act, name="std(2|2)",
                  flavor="lie", validate=validate)
