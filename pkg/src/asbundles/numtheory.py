"""Small integer helpers (trial division is plenty at the sizes used here)."""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt, lcm


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_support(n: int) -> frozenset[int]:
    return frozenset(factorize(n)) if n not in (0, 1, -1) else frozenset()


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def lcm_all(values) -> int:
    return reduce(lcm, values, 1)


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)
