"""Exact scalar arithmetic: rationals, prime fields, rational reconstruction.

All computations in the package are exact.  The workhorse scalar is
``gmpy2.mpq``; prime fields enter only through the certified modular pipeline
(see :mod:`superrep.kernel.certified`), whose results are always re-verified
over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import gmpy2
from gmpy2 import mpq, mpz

QQ = mpq
ZERO = mpq(0)
ONE = mpq(1)


def rat(x) -> mpq:
    """Coerce ints, Fractions, strings like '3/2', and mpq to mpq."""
    if isinstance(x, type(ONE)):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def is_zero(x) -> bool:
    return x == 0


# Deterministic supply of ~31-bit primes for the modular pipeline.  Products of
# two residues stay below 2**62, safely inside int64 for the jit kernels.

_PRIME_CEILING = (1 << 31) - 1


def prime_stream(seed: int = 0):
    """Yield distinct ~31-bit primes, walking downward deterministically."""
    state = mpz(_PRIME_CEILING - (seed * 7919) % 100000)
    while state > (1 << 30):
        state = gmpy2.prev_prime(state)
        yield int(state)


def mod_p(x: mpq, p: int) -> int:
    """Image of a rational in F_p.  Raises ZeroDivisionError if p | denominator."""
    num = int(x.numerator) % p
    den = int(x.denominator) % p
    return (num * pow(den, -1, p)) % p


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine residues r1 mod m1 and r2 mod m2 (coprime moduli)."""
    inv = pow(m1 % m2, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def rational_reconstruct(r: int, m: int) -> mpq | None:
    """Find a/b = r (mod m) with |a|, b <= sqrt(m/2), or None.

    Standard half-extended-Euclid lattice reduction; the bound guarantees
    uniqueness when a preimage exists.
    """
    r %= m
    bound = gmpy2.isqrt(mpz(m) // 2)
    v0, v1 = (mpz(m), mpz(0)), (mpz(r), mpz(1))
    while v1[0] > bound:
        q = v0[0] // v1[0]
        v0, v1 = v1, (v0[0] - q * v1[0], v0[1] - q * v1[1])
    a, b = v1
    if b < 0:
        a, b = -a, -b
    if b == 0 or b > bound or gcd(int(a), int(b)) != 1:
        return None
    if gmpy2.gcd(b, mpz(m)) != 1:
        return None
    return mpq(a, b)


def clear_denominators(values) -> tuple[list[int], int]:
    """Return (integer list, d) with values[i] == ints[i] / d exactly."""
    values = [rat(v) for v in values]
    d = mpz(1)
    for v in values:
        d = gmpy2.lcm(d, v.denominator)
    return [int(v.numerator * (d // v.denominator)) for v in values], int(d)
