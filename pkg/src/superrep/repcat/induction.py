"""Induced modules over a parabolic with purely odd complement.

Given a subalgebra ``p`` of a Lie superalgebra ``g`` whose complement is
spanned by odd basis elements ``q_1, ..., q_r``, the induced module
``U(g) (x)_{U(p)} M`` has basis ``xi_S (x) m`` where ``xi_S`` runs over
ordered products of distinct ``q_i`` and ``m`` over a basis of ``M``.
The action of ``g`` is computed by straightening words against the
commutation relations, with memoisation on basis vectors.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..kernel.matrix import QMat
from .module import Module, ModuleError


class _Ctx:
    def __init__(self, alg, q_indices, p_action, p_parity, max_len=None):
        self.alg = alg
        self.q = list(q_indices)
        self.qpos = {qi: k for k, qi in enumerate(self.q)}
        self.p_action = p_action
        self.p_parity = p_parity
        self.max_len = max_len
        self.memo = {}


def _merge(out, terms, scale=mpq(1)):
    for key, c in terms.items():
        v = out.get(key, mpq(0)) + scale * c
        if v:
            out[key] = v
        elif key in out:
            del out[key]


def _act_elem(ctx, elem, S, j, scale=mpq(1)):
    """Action of a general algebra element (sparse dict) on xi_S (x) e_j."""
    out = {}
    for k, c in elem.items():
        _merge(out, _act(ctx, k, S, j), scale * c)
    return out


def _leftmul_q(ctx, s, S, j):
    """Normal-order ``q_s * xi_S (x) e_j``.  Monomials are non-decreasing
    in the complement order, strictly at odd elements; terms exceeding
    ``ctx.max_len`` are dropped (supported only when the caller quotients
    by everything of that length)."""
    ps = ctx.alg.parity[s]
    if not S or ctx.qpos[s] < ctx.qpos[S[0]]:
        if ctx.max_len is not None and len(S) + 1 > ctx.max_len:
            return {}
        return {(tuple([s] + list(S)), j): mpq(1)}
    t, rest = S[0], tuple(S[1:])
    out = {}
    if s == t:
        if ps:
            # q_s^2 = (1/2)[q_s, q_s] inside the enveloping algebra
            br = ctx.alg.mult_basis(s, s)
            _merge(out, _act_elem(ctx, br, rest, j, mpq(1, 2)))
            return out
        if ctx.max_len is not None and len(S) + 1 > ctx.max_len:
            return {}
        return {(tuple([s] + list(S)), j): mpq(1)}
    # q_s q_t = (-1)^{|s||t|} q_t q_s + [q_s, q_t]
    sign = mpq(-1) if ps and ctx.alg.parity[t] else mpq(1)
    for (S2, j2), c in _leftmul_q(ctx, s, rest, j).items():
        _merge(out, _leftmul_q(ctx, t, S2, j2), sign * c)
    _merge(out, _act_elem(ctx, ctx.alg.mult_basis(s, t), rest, j))
    return out


def _act(ctx, x, S, j):
    key = (x, tuple(S), j)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    if x in ctx.qpos:
        out = _leftmul_q(ctx, x, tuple(S), j)
    elif not S:
        col = ctx.p_action[x].col(j)
        out = {((), i): c for i, c in col.items()}
    else:
        t, rest = S[0], tuple(S[1:])
        sign = mpq(-1) if ctx.alg.parity[x] and ctx.alg.parity[t] \
            else mpq(1)
        out = {}
        for (S2, j2), c in _act(ctx, x, rest, j).items():
            _merge(out, _leftmul_q(ctx, t, S2, j2), sign * c)
        _merge(out, _act_elem(ctx, ctx.alg.mult_basis(x, t), rest, j))
    ctx.memo[key] = out
    return out


def induced_module(alg, p_labels, p_action, p_parity, name,
                   validate=True) -> Module:
    """Build ``U(g) (x)_{U(p)} M``.

    ``p_labels``: basis labels spanning the subalgebra ``p``.
    ``p_action``: dict mapping each p basis index to a QMat acting on M
    (column convention).  ``p_parity``: parities of the M basis.
    """
    p_idx = [alg.index(l) if isinstance(l, str) else l for l in p_labels]
    pset = set(p_idx)
    q_idx = [i for i in range(alg.dim) if i not in pset]
    for qi in q_idx:
        if not alg.parity[qi]:
            raise ModuleError("complement of p must be purely odd")
    for i in p_idx:
        for j in p_idx:
            if any(k not in pset for k in alg.mult_basis(i, j)):
                raise ModuleError("p is not a subalgebra")
    act_map = {alg.index(l) if isinstance(l, str) else l: m
               for l, m in p_action.items()}
    if set(act_map) != pset:
        raise ModuleError("p_action must cover exactly the p basis")

    ctx = _Ctx(alg, q_idx, act_map, list(p_parity))
    r, md = len(q_idx), len(p_parity)

    # basis: (subset mask of q, M index); subsets listed in mask order
    subsets = []
    for mask in range(1 << r):
        subsets.append(tuple(q_idx[k] for k in range(r) if mask >> k & 1))
    pos = {(S, j): a * md + j for a, S in enumerate(subsets)
           for j in range(md)}
    dim = (1 << r) * md
    parity = [(len(S) + p_parity[j]) % 2 for S in subsets for j in range(md)]

    action = []
    for x in range(alg.dim):
        m = QMat(dim, dim)
        for S in subsets:
            for j in range(md):
                colv = _act(ctx, x, S, j)
                cj = pos[(S, j)]
                for (S2, j2), c in colv.items():
                    key = (tuple(sorted(S2, key=ctx.qpos.get)), j2)
                    if key[0] != S2:
                        raise ModuleError("straightening left an "
                                          "unordered word")
                    m.add_to(pos[key], cj, c)
        action.append(m)
    return Module(alg, parity, action, name=name, flavor="lie",
                  validate=validate)


def character_module(alg, p_labels, values, name="C_chi"):
    """One-dimensional p-module from a character (dict label -> scalar);
    unlisted p basis elements act by zero.  Returns (p_action, parity)."""
    p_action = {}
    for l in p_labels:
        i = alg.index(l) if isinstance(l, str) else l
        m = QMat(1, 1)
        v = values.get(l, values.get(i, 0))
        if v:
            if alg.parity[i]:
                raise ModuleError("character nonzero on odd element")
            m.set(0, 0, mpq(v))
        p_action[i] = m
    return p_action, [0]


def jordan_block_module(alg, p_labels, z_label, eigen, size, name="C_t_m"):
    """p-module C^size where ``z_label`` acts by eigen*I + nilpotent
    shift and every other p basis element acts by zero."""
    zi = alg.index(z_label) if isinstance(z_label, str) else z_label
    p_action = {}
    for l in p_labels:
        i = alg.index(l) if isinstance(l, str) else l
        m = QMat(size, size)
        if i == zi:
            for a in range(size):
                if eigen:
                    m.set(a, a, mpq(eigen))
                if a + 1 < size:
                    m.set(a, a + 1, 1)
        p_action[i] = m
    return p_action, [0] * size
