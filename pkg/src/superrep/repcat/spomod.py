"""Induced modules over spo(0|n) in its Poisson-monomial basis.

The grading by (monomial degree - 2) has purely odd degree -1 part
spanned by the generators e1..en; the parabolic is everything of
non-negative degree together with the central constant.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..algebras.grassmann import spo_lie
from ..kernel.matrix import QMat
from .induction import (character_module, induced_module,
                        jordan_block_module)
from .module import Module, ModuleError


def _parabolic(alg):
    deg = alg.gradings["standard"]
    return [alg.basis[i] for i in range(alg.dim) if deg[i] != -1]


def i_module(t, alg=None, validate=True) -> Module:
    """Smallest induced module, dim 2^n; simple for t != 0."""
    alg = alg if alg is not None else spo_lie(5)
    p = _parabolic(alg)
    act, par = character_module(alg, p, {"1": mpq(t)})
    return induced_module(alg, p, act, par, name="I(%s)" % t,
                          validate=validate)


def i_thickened(t, m, alg=None, validate=True) -> Module:
    """Induction from the module where the centre acts by a size-m
    Jordan block with eigenvalue t."""
    alg = alg if alg is not None else spo_lie(5)
    p = _parabolic(alg)
    act, par = jordan_block_module(alg, p, "1", mpq(t), m)
    return induced_module(alg, p, act, par, name="I(%s)_(%d)" % (t, m),
                          validate=validate)


def s_module(t, alg=None) -> Module:
    """The simple module S(t): equals I(t) for t != 0; for t = 0 the
    middle factor of the length-3 filtration of I(0)."""
    t = mpq(t)
    if t:
        m = i_module(t, alg)
        m.name = "S(%s)" % t
        return m
    alg = alg if alg is not None else spo_lie(5)
    i0 = i_module(0, alg)
    # I(0) has socle C; the middle layer is the derived submodule of the
    # quotient (everything reachable from the action)
    from ..kernel.matrix import Subspace
    inv = _invariants(i0)
    q, _ = i0.quotient(inv.basis())
    der = Subspace(q.dim)
    for m in q.action:
        for j in range(q.dim):
            der.add(m.col(j))
    s, _ = q.submodule(der.basis(), name="S(0)")
    return s


def _invariants(mod: Module):
    from ..kernel.certified import rank_kernel_auto
    from ..kernel.matrix import Subspace
    rows = [dict(r) for m in mod.action for r in m.rows]
    _, ker, _ = rank_kernel_auto(QMat.from_rows(rows, mod.dim))
    return Subspace(mod.dim, ker)


def m_lambda_action(alg, weight: str, t):
    """p-module data for the simple g0 + centre module of highest weight
    0 or omega1 with central charge t; positive degrees act by zero."""
    t = mpq(t)
    p = _parabolic(alg)
    if weight == "0":
        return p, *character_module(alg, p, {"1": t})
    if weight != "omega1":
        raise ModuleError("only weights 0 and omega1 are supported")
    # vector representation of o(n) on span(e1..en) via the bracket
    deg = alg.gradings["standard"]
    vec = [i for i in range(alg.dim) if deg[i] == -1]
    pos = {b: a for a, b in enumerate(vec)}
    n = len(vec)
    act = {}
    for lab in p:
        i = alg.index(lab)
        m = QMat(n, n)
        if deg[i] == 0:
            for b in vec:
                for k, c in alg.mult_basis(i, b).items():
                    m.set(pos[k], pos[b], c)
        elif lab == "1":
            for a in range(n):
                m.set(a, a, t)
        act[i] = m
    return p, act, [0] * n


def induced_m_lambda(weight: str, t, alg=None, validate=True) -> Module:
    """Ind from the parabolic of the simple g0-module of the given
    highest weight with central charge t."""
    alg = alg if alg is not None else spo_lie(5)
    p, act, par = m_lambda_action(alg, weight, t)
    return induced_module(alg, p, act, par,
                          name="Ind(M_%s(%s))" % (t, weight),
                          validate=validate)


def short_h_element(alg=None) -> dict:
    """Grading element h = e1*e3 whose bracket action has spectrum in
    {-1, 0, 1}; used to classify short-graded modules."""
    alg = alg if alg is not None else spo_lie(5)
    return {alg.index("e1e3"): mpq(1)}
