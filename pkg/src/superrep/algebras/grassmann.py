"""Grassmann algebra, Poisson bracket, Kantor double, Poisson Lie algebras.

Monomials in the exterior algebra on n odd generators are bitmasks; elements
are sparse dicts {mask: mpq}.  The Poisson bracket takes an optional symmetric
Gram matrix; the default is the identity pairing.  The Lie constructions
(po/spo/H) default to a split pairing so that the degree-2 part has a rational
diagonal Cartan subalgebra.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..kernel.matrix import svec_add
from ..kernel.scalars import rat
from .base import Superalgebra


def mono_label(mask: int, letter: str = "x") -> str:
    if mask == 0:
        return "1"
    return "".join("%s%d" % (letter, i + 1) for i in range(mask.bit_length())
                   if mask >> i & 1)


def mono_degree(mask: int) -> int:
    return bin(mask).count("1")


def mono_mul(a: int, b: int) -> tuple[int, int]:
    """(sign, mask) for the product of two monomials, sign 0 if they collide."""
    if a & b:
        return 0, 0
    # count inversions: pairs (i in a, j in b) with i > j
    inv = 0
    bb = b
    while bb:
        j = (bb & -bb).bit_length() - 1
        inv += bin(a >> (j + 1)).count("1")
        bb &= bb - 1
    return (-1 if inv & 1 else 1), a | b


def gmul(f: dict, g: dict) -> dict:
    out: dict = {}
    for a, x in f.items():
        for b, y in g.items():
            s, m = mono_mul(a, b)
            if s:
                v = out.get(m, 0) + s * x * y
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
    return out


def partial_derivative(f: dict, i: int) -> dict:
    """Left superderivation d/dx_{i+1} (i is 0-based)."""
    out = {}
    bit = 1 << i
    for m, x in f.items():
        if m & bit:
            sign = -1 if bin(m & (bit - 1)).count("1") & 1 else 1
            out[m ^ bit] = sign * x
    return out


def poisson_bracket(f: dict, g: dict, n: int, gram=None) -> dict:
    """{f,g} = (-1)^{|f|} sum_{a,b} G[a][b] d_a f d_b g (f homogeneous)."""
    degs = {mono_degree(m) & 1 for m in f}
    if len(degs) > 1:
        raise ValueError("f must be parity-homogeneous")
    sgn = -1 if degs and degs.pop() else 1
    out: dict = {}
    for a in range(n):
        da = partial_derivative(f, a)
        if not da:
            continue
        for b in range(n):
            c = rat(1 if a == b else 0) if gram is None else rat(gram[a][b])
            if c == 0:
                continue
            db = partial_derivative(g, b)
            if db:
                out = svec_add(out, gmul(da, db), sgn * c)
    return out


def split_gram(n: int) -> list[list]:
    """Split symmetric pairing: hyperbolic pairs (i, k+i), unit middle for odd n."""
    k = n // 2
    g = [[mpq(0)] * n for _ in range(n)]
    for i in range(k):
        g[i][k + i] = g[k + i][i] = mpq(1)
    if n % 2:
        g[n - 1][n - 1] = mpq(1)
    return g


def grassmann(n: int) -> Superalgebra:
    """The exterior algebra on n odd generators as an associative superalgebra."""
    basis = list(range(1 << n))
    table = {}
    for a in basis:
        for b in basis:
            s, m = mono_mul(a, b)
            if s:
                table[(a, b)] = {m: mpq(s)}
    alg = Superalgebra("assoc", [mono_label(m) for m in basis],
                       [mono_degree(m) & 1 for m in basis], table,
                       name="Lambda(%d)" % n)
    return alg


def kantor_double(n: int, gram=None) -> Superalgebra:
    """Kantor double of the Grassmann Poisson algebra: dim 2^{n+1}.

    Basis: all monomials f (labels as in :func:`grassmann`) followed by their
    barred copies f~ with flipped parity.  Products: f.g = fg, f.g~ = (fg)~,
    f~.g~ = {f,g}; the remaining case is forced by supercommutativity.
    """
    nmask = 1 << n
    labels = [mono_label(m) for m in range(nmask)] + \
             [mono_label(m) + "~" for m in range(nmask)]
    parity = [mono_degree(m) & 1 for m in range(nmask)] + \
             [(mono_degree(m) + 1) & 1 for m in range(nmask)]
    table: dict = {}

    def put(i, j, vec):
        if vec:
            table[(i, j)] = dict(vec)

    for a in range(nmask):
        for b in range(nmask):
            s, m = mono_mul(a, b)
            if s:
                put(a, b, {m: mpq(s)})                    # f.g
                put(a, b + nmask, {m + nmask: mpq(s)})    # f.g~ = (fg)~
                # g~.f = (-1)^{|g~||f|} f.g~
                sgf = -1 if ((mono_degree(b) + 1) * mono_degree(a)) & 1 else 1
                put(b + nmask, a, {m + nmask: mpq(sgf * s)})
            pb = poisson_bracket({a: mpq(1)}, {b: mpq(1)}, n, gram=gram)
            if pb:
                # f~.g~ = (-1)^{|g|}{f,g}; this sign is the unique one (up to
                # basis rescaling) passing the exhaustive identity checks
                sf = -1 if mono_degree(b) & 1 else 1
                put(a + nmask, b + nmask,
                    {m: sf * v for m, v in pb.items()})
    alg = Superalgebra("jordan", labels, parity, table, name="Kan(%d)" % n)
    alg.named["unit"] = {0: mpq(1)}
    return alg


def po_lie(n: int, gram="split") -> Superalgebra:
    """Poisson Lie superalgebra on Lambda(n): [f,g] = -{f,g}."""
    g = split_gram(n) if gram == "split" else gram
    basis = list(range(1 << n))
    table = {}
    for a in basis:
        for b in basis:
            pb = poisson_bracket({a: mpq(1)}, {b: mpq(1)}, n, gram=g)
            if pb:
                table[(a, b)] = {m: -v for m, v in pb.items()}
    alg = Superalgebra("lie", [mono_label(m, "e") for m in basis],
                       [mono_degree(m) & 1 for m in basis], table,
                       name="po(0|%d)" % n)
    return alg


def _poisson_subalgebra(n: int, masks: list[int], name: str, gram) -> Superalgebra:
    idx = {m: i for i, m in enumerate(masks)}
    table = {}
    for a in masks:
        for b in masks:
            pb = poisson_bracket({a: mpq(1)}, {b: mpq(1)}, n, gram=gram)
            vec = {}
            for m, v in pb.items():
                if m in idx:
                    vec[idx[m]] = -v
                elif v != 0:
                    raise ValueError("bracket leaves the span: %s, %s"
                                     % (mono_label(a, "e"), mono_label(b, "e")))
            if vec:
                table[(idx[a], idx[b])] = vec
    alg = Superalgebra("lie", [mono_label(m, "e") for m in masks],
                       [mono_degree(m) & 1 for m in masks], table, name=name)
    # standard grading: monomial degree minus 2
    alg.gradings["standard"] = [mono_degree(m) - 2 for m in masks]
    return alg


def spo_lie(n: int, gram="split") -> Superalgebra:
    """spo(0|n) = [po, po]: monomials of degree < n; dim 2^n - 1.

    The closure claim (top-degree coefficients never arise from brackets of
    lower monomials) is enforced: any violation raises.
    """
    g = split_gram(n) if gram == "split" else gram
    masks = [m for m in range(1 << n) if mono_degree(m) < n]
    alg = _poisson_subalgebra(n, masks, "spo(0|%d)" % n, g)
    _mark_poisson_structure(alg, n, masks)
    return alg


def h_lie(n: int, gram="split") -> Superalgebra:
    """H(n) = spo(0|n)/constants: monomials f with f(0)=0, deg f < n.

    Brackets are projected along the center (constant terms dropped).
    """
    g = split_gram(n) if gram == "split" else gram
    masks = [m for m in range(1 << n) if 0 < mono_degree(m) < n]
    idx = {m: i for i, m in enumerate(masks)}
    table = {}
    for a in masks:
        for b in masks:
            pb = poisson_bracket({a: mpq(1)}, {b: mpq(1)}, n, gram=g)
            vec = {}
            for m, v in pb.items():
                if m == 0:
                    continue  # quotient by the constants
                if m not in idx:
                    raise ValueError("bracket leaves the span")
                vec[idx[m]] = -v
            if vec:
                table[(idx[a], idx[b])] = vec
    alg = Superalgebra("lie", [mono_label(m, "e") for m in masks],
                       [mono_degree(m) & 1 for m in masks], table,
                       name="H(%d)" % n)
    alg.gradings["standard"] = [mono_degree(m) - 2 for m in masks]
    _mark_poisson_structure(alg, n, masks)
    return alg


def _mark_poisson_structure(alg: Superalgebra, n: int, masks: list[int]):
    """Designate h = degree-0 part (o(n)) with its diagonal Cartan (split form:
    Cartan spanned by the pair monomials e_i e_{k+i}), and record weights."""
    k = n // 2
    pair_masks = {(1 << i) | (1 << (k + i)) for i in range(k)}
    cart, gens = [], []
    h_idx = []
    for i, m in enumerate(masks):
        if mono_degree(m) != 2:
            continue
        h_idx.append(i)
        (cart if m in pair_masks else gens).append(i)
    alg.h_indices = h_idx
    alg.cartan = cart
    alg.h_generators = gens
    alg.restrict_weights()
