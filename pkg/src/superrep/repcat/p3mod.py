"""Module families over the central extension of P(3) and over JP(2).

V(t) is the (4|4)-dimensional family: the standard matrix action deformed by
t times the dual of the lower-left block placed in the upper-right slot, with
the central element acting by t.  W(t) is its (2|2)-dimensional Jordan
shadow over JP(2).
"""

from __future__ import annotations

from gmpy2 import mpq

from ..algebras.matrixalg import (_jp_basis, hat_p3, hodge_dual, jp,
                                  skew_c_matrix)
from ..kernel.matrix import QMat
from .module import Module


def v_module(t, alg=None) -> Module:
    """The (4|4)-dimensional family over hat-P(3); z acts by t."""
    t = mpq(t)
    alg = alg if alg is not None else hat_p3()
    mats, labels, _ = _jp_basis(4, jordan=False)
    by_label = dict(zip(labels, mats))
    act = []
    for i, lab in enumerate(alg.basis):
        if lab == "z":
            m = QMat.identity(8).scale(t)
        else:
            m = by_label[lab].copy()
            if lab[0] == "C" and t:
                star = hodge_dual(skew_c_matrix(lab))
                for r, row in enumerate(star.rows):
                    for c, v in row.items():
                        m.add_to(r, 4 + c, t * v)
        act.append(m)
    mod = Module(alg, [0] * 4 + [1] * 4, act, name="V(%s)" % t, flavor="lie")
    return mod


def w_module(t, alg=None) -> Module:
    """The (2|2)-dimensional special Jordan family over JP(2)."""
    t = mpq(t)
    alg = alg if alg is not None else jp(2)
    mats, labels, _ = _jp_basis(2, jordan=True)
    by_label = dict(zip(labels, mats))
    act = []
    for lab in alg.basis:
        m = by_label[lab].copy()
        if lab[0] in ("B", "C"):
            m = m.scale(mpq(-1))
        if lab[0] == "C" and t:
            # copy the skew C block into the B slot, scaled by t
            i, j = int(lab[1]) - 1, int(lab[2]) - 1
            m.add_to(i, 2 + j, -t)
            m.add_to(j, 2 + i, t)
        # half-multiplication: the unit acts by 1/2
        act.append(m.scale(mpq(1, 2)))
    return Module(alg, [0] * 2 + [1] * 2, act, name="W(%s)" % t,
                  flavor="jordan")


def _p3_parabolic(alg):
    return [l for l in alg.basis
            if l[0] in ("A", "H", "B") or l == "z"]


def k_module(t, alg=None, validate=True) -> Module:
    """Induced module of dimension 64 with central parameter ``t``."""
    from .induction import character_module, induced_module
    alg = alg if alg is not None else hat_p3()
    p = _p3_parabolic(alg)
    act, par = character_module(alg, p, {"z": mpq(t)})
    return induced_module(alg, p, act, par, name="K(%s)" % t,
                          validate=validate)


def k_thickened(t, m, alg=None, validate=True) -> Module:
    """Induced module where the centre acts by a size-``m`` Jordan block
    with eigenvalue ``t``."""
    from .induction import induced_module, jordan_block_module
    alg = alg if alg is not None else hat_p3()
    p = _p3_parabolic(alg)
    act, par = jordan_block_module(alg, p, "z", mpq(t), m)
    return induced_module(alg, p, act, par, name="K(%s)_(%d)" % (t, m),
                          validate=validate)


def _simple_big_factor(m, sign, t):
    """The 31-dimensional simple subquotient of a super square at t=0."""
    from .meataxe import find_proper_submodule
    sub = find_proper_submodule(m)
    if sub is None:
        raise ValueError("expected a reducible square")
    if sub.dim == 1:
        out, _ = m.quotient(sub.basis(), name="L%s(%s)" % (sign, t))
    else:
        out, _ = m.submodule(sub.basis(), name="L%s(%s)" % (sign, t))
    return out


def l_plus(t, alg=None) -> Module:
    """Simple highest factor of the symmetric square of V(t/2)."""
    from .module import sym2
    t = mpq(t)
    s = sym2(v_module(t / 2, alg))
    if t:
        s.name = "L+(%s)" % t
        return s
    return _simple_big_factor(s, "+", t)


def l_minus(t, alg=None) -> Module:
    """Simple highest factor of the exterior square of V(t/2)."""
    from .module import ext2
    t = mpq(t)
    s = ext2(v_module(t / 2, alg))
    if t:
        s.name = "L-(%s)" % t
        return s
    return _simple_big_factor(s, "-", t)
