"""Quaternion classes over Q via Hilbert symbols, and classes built from raw
local invariants."""

from __future__ import annotations

from fractions import Fraction

from .brauer import INF, GlobalBrauerClass, Place, TorsionFraction
from .errors import DuplicatePlace
from .numtheory import factorize, valuation


def _as_fraction(x) -> Fraction:
    f = Fraction(x)
    if f == 0:
        raise ValueError("symbol entries must be nonzero")
    return f


def _to_integer(x) -> int:
    # n/d and n*d differ by the square d^2, which the symbol ignores
    f = _as_fraction(x)
    return f.numerator * f.denominator


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def hilbert_symbol(a, b, v: Place | str | int) -> int:
    """The quadratic Hilbert symbol ``(a, b)_v`` for nonzero rationals a, b.

    Returns +1 when ``z^2 = a x^2 + b y^2`` has a nonzero solution over the
    completion of Q at ``v`` and -1 otherwise.
    """
    v = Place.parse(v)
    a, b = _to_integer(a), _to_integer(b)
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.prime
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = a // p**alpha, b // p**beta
    if p == 2:
        eps_u, eps_w = ((u - 1) // 2) % 2, ((w - 1) // 2) % 2
        om_u, om_w = ((u * u - 1) // 8) % 2, ((w * w - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** beta * _legendre(w, p) ** alpha


def relevant_places(a, b) -> list[Place]:
    """Places where ``(a, b)_v`` can be -1: 2, the real place, and primes
    dividing a numerator or denominator."""
    primes = {2}
    for x in (_as_fraction(a), _as_fraction(b)):
        for n in (x.numerator, x.denominator):
            if abs(n) > 1:
                primes.update(factorize(n))
    return [Place(q) for q in sorted(primes)] + [INF]


def quaternion_class(a, b) -> GlobalBrauerClass:
    """Class of the quaternion algebra ``(a, b)_Q``.

    Reciprocity is checked by the class constructor; a failure there means the
    symbol formulas are wrong and surfaces as ReciprocityViolation.
    """
    half = TorsionFraction(1, 2)
    return GlobalBrauerClass(
        tuple((v, half) for v in relevant_places(a, b) if hilbert_symbol(a, b, v) == -1)
    )


def class_from_invariants(entries) -> GlobalBrauerClass:
    """Build a global class from ``(place, invariant)`` pairs.

    Places may be given as ``Place``, int primes or ``"inf"``; invariants as
    ``TorsionFraction``, ``Fraction`` or ``"n/d"`` strings.
    """
    seen: set[Place] = set()
    pairs = []
    for place, inv in entries:
        place = Place.parse(place)
        if place in seen:
            raise DuplicatePlace(f"place {place} listed twice", place=str(place))
        seen.add(place)
        if not isinstance(inv, TorsionFraction):
            inv = TorsionFraction.from_fraction(Fraction(inv))
        pairs.append((place, inv))
    return GlobalBrauerClass(tuple(pairs))
