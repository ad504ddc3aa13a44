"""Brauer classes: elements of Q/Z, global classes over the rationals given by
their local invariants, and abstract classes given by (period, index sequence).

The abstract variant carries ``index_sequence[j] = ind(A^j)`` for
``0 <= j <= period``; everything downstream only ever reads period and index
data, so the abstract form covers fields where period and index differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Union

from .errors import (
    AbstractUnsupported,
    BadInfinitePlace,
    DuplicatePlace,
    InvalidIndexSequence,
    MixedVariant,
    ReciprocityViolation,
)
from .numtheory import is_prime, lcm_all, prime_support


@dataclass(frozen=True)
class TorsionFraction:
    """An element of Q/Z, always stored reduced with ``0 <= num < den``."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        f = Fraction(self.numerator, self.denominator)
        f -= f.numerator // f.denominator
        object.__setattr__(self, "numerator", f.numerator)
        object.__setattr__(self, "denominator", f.denominator)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "TorsionFraction":
        return cls(f.numerator, f.denominator)

    def __add__(self, other: "TorsionFraction") -> "TorsionFraction":
        return TorsionFraction.from_fraction(self.as_fraction() + other.as_fraction())

    def __neg__(self) -> "TorsionFraction":
        return TorsionFraction(-self.numerator, self.denominator)

    def __mul__(self, r: int) -> "TorsionFraction":
        return TorsionFraction(self.numerator * r, self.denominator)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.numerator != 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def order(self) -> int:
        return self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class Place:
    """A place of Q: a prime, or the real place when ``prime is None``."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def parse(cls, tag: "str | int | Place") -> "Place":
        if isinstance(tag, Place):
            return tag
        if isinstance(tag, str) and tag.strip().lower() in ("inf", "infinity", "oo", "r"):
            return cls(None)
        return cls(int(tag))

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    @property
    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.prime is None else (0, self.prime)

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INF = Place(None)


def _place_sorted(items):
    return tuple(sorted(items, key=lambda kv: kv[0].sort_key))


@dataclass(frozen=True)
class GlobalBrauerClass:
    """A class in Br(Q), given by its nonzero local invariants.

    The constructor prunes zero invariants, sorts places and enforces
    reciprocity and the constraint at the real place.
    """

    invariants: tuple[tuple[Place, TorsionFraction], ...] = ()

    def __post_init__(self):
        seen = set()
        kept = []
        for place, inv in self.invariants:
            place = Place.parse(place)
            if not isinstance(inv, TorsionFraction):
                inv = TorsionFraction.from_fraction(Fraction(inv))
            if place in seen:
                raise DuplicatePlace(f"place {place} listed twice", place=str(place))
            seen.add(place)
            if place.is_infinite and inv.denominator not in (1, 2):
                raise BadInfinitePlace(
                    f"invariant {inv} at the real place must be 0 or 1/2",
                    place="inf", invariant=str(inv),
                )
            if inv:
                kept.append((place, inv))
        total = sum((inv.as_fraction() for _, inv in kept), Fraction(0))
        if total.denominator != 1:
            raise ReciprocityViolation(
                f"local invariants sum to {TorsionFraction.from_fraction(total)}, not 0",
                total=str(TorsionFraction.from_fraction(total)),
            )
        object.__setattr__(self, "invariants", _place_sorted(kept))

    @classmethod
    def from_map(cls, mapping) -> "GlobalBrauerClass":
        return cls(tuple((Place.parse(k), v) for k, v in mapping.items()))

    @classmethod
    def trivial(cls) -> "GlobalBrauerClass":
        return cls(())

    def as_dict(self) -> dict[Place, TorsionFraction]:
        return dict(self.invariants)

    def invariant(self, place) -> TorsionFraction:
        return self.as_dict().get(Place.parse(place), TorsionFraction(0))

    @property
    def is_trivial(self) -> bool:
        return not self.invariants

    def __str__(self) -> str:
        body = ", ".join(f"{p}: {inv}" for p, inv in self.invariants)
        return "{" + body + "}"


@dataclass(frozen=True)
class Violation:
    constraint: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"constraint": self.constraint, "witness": dict(self.witness)}


@dataclass(frozen=True)
class ValidationReport:
    period: int
    index_sequence: tuple[int, ...]
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def constraints(self) -> set[str]:
        return {v.constraint for v in self.violations}

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "index_sequence": list(self.index_sequence),
            "valid": self.valid,
            "violations": [v.to_json() for v in self.violations],
        }


def validate_index_sequence(p: int, seq) -> ValidationReport:
    """Check a candidate ``(ind(A^0), ..., ind(A^p))`` for an algebra of period p.

    Constraint identifiers reported:

    ``length``, ``positive``
        shape of the input.
    ``boundary``
        ``d_0 = d_p = 1``.
    ``palindrome``
        ``d_j = d_{p-j}``.
    ``period_divides_index``, ``same_prime_factors``
        ``p/(p,j)`` is the period of ``A^j``; it divides ``d_j`` and has the
        same prime divisors.
    ``tensor_subadditivity``
        ``d_{(j+k) mod p}`` divides ``d_j * d_k``.
    ``binomial_bound``, ``gcd_bound``, ``coprime_power``
        with ``i = d_1``: ``d_r | (binomial(i, r), i)``, ``d_r | i/(i, r)``,
        and ``d_r = i`` when ``(r, i) = 1``.
    """
    seq = tuple(int(x) for x in seq)
    out: list[Violation] = []
    if p < 1:
        out.append(Violation("length", {"period": p, "length": len(seq)}))
        return ValidationReport(p, seq, tuple(out))
    if len(seq) != p + 1:
        out.append(Violation("length", {"period": p, "length": len(seq)}))
        return ValidationReport(p, seq, tuple(out))
    bad = [j for j, x in enumerate(seq) if x < 1]
    if bad:
        out.append(Violation("positive", {"j": bad[0], "d_j": seq[bad[0]]}))
        return ValidationReport(p, seq, tuple(out))

    if seq[0] != 1 or seq[p] != 1:
        out.append(Violation("boundary", {"d_0": seq[0], "d_p": seq[p]}))
    for j in range(p + 1):
        if seq[j] != seq[p - j]:
            out.append(Violation("palindrome", {"j": j, "d_j": seq[j], "d_p_minus_j": seq[p - j]}))
            break
    for j in range(p + 1):
        per = p // gcd(p, j)
        if seq[j] % per:
            out.append(Violation("period_divides_index", {"j": j, "period": per, "d_j": seq[j]}))
            break
    for j in range(p + 1):
        per = p // gcd(p, j)
        if prime_support(per) != prime_support(seq[j]):
            out.append(Violation("same_prime_factors", {"j": j, "period": per, "d_j": seq[j]}))
            break

    def done():
        return any(v.constraint == "tensor_subadditivity" for v in out)

    for j in range(p):
        for k in range(p):
            if (seq[j] * seq[k]) % seq[(j + k) % p]:
                out.append(Violation(
                    "tensor_subadditivity",
                    {"j": j, "k": k, "d_j": seq[j], "d_k": seq[k], "d_j_plus_k": seq[(j + k) % p]},
                ))
                break
        if done():
            break

    # r >= i makes the binomial bound vacuous and i/(i, r) is i-periodic in r
    i = seq[1]
    found: set[str] = set()
    for r in range(max(i, p) + 1):
        d_r = seq[r % p]
        bound = gcd(comb(i, r), i)
        if "binomial_bound" not in found and bound % d_r:
            out.append(Violation("binomial_bound", {"r": r, "i": i, "d_r": d_r, "bound": bound}))
            found.add("binomial_bound")
        quot = i // gcd(i, r)
        if "gcd_bound" not in found and quot % d_r:
            out.append(Violation("gcd_bound", {"r": r, "i": i, "d_r": d_r, "bound": quot}))
            found.add("gcd_bound")
        if "coprime_power" not in found and gcd(r, i) == 1 and d_r != i:
            out.append(Violation("coprime_power", {"r": r, "i": i, "d_r": d_r}))
            found.add("coprime_power")
    return ValidationReport(p, seq, tuple(out))


@dataclass(frozen=True)
class AbstractBrauerClass:
    """A Brauer class known only through its period and ``ind(A^j)``, 0 <= j <= p."""

    period: int
    index_sequence: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "index_sequence", tuple(int(x) for x in self.index_sequence))
        report = validate_index_sequence(self.period, self.index_sequence)
        if not report.valid:
            raise InvalidIndexSequence(
                f"index sequence {self.index_sequence} rejected for period {self.period}",
                violations=[v.to_json() for v in report.violations],
            )


BrauerClass = Union[GlobalBrauerClass, AbstractBrauerClass]


def _require_global(*classes) -> None:
    kinds = {isinstance(c, AbstractBrauerClass) for c in classes}
    if kinds == {True}:
        raise AbstractUnsupported("operation needs global classes")
    if len(kinds) > 1:
        raise MixedVariant("cannot mix global and abstract classes")


def tensor(c1: BrauerClass, c2: BrauerClass) -> GlobalBrauerClass:
    if isinstance(c1, AbstractBrauerClass) or isinstance(c2, AbstractBrauerClass):
        raise MixedVariant("tensor is only defined between global classes; use power() for abstract ones")
    total = c1.as_dict()
    for place, inv in c2.invariants:
        total[place] = total.get(place, TorsionFraction(0)) + inv
    return GlobalBrauerClass(tuple(total.items()))


def opposite(c: BrauerClass) -> BrauerClass:
    if isinstance(c, AbstractBrauerClass):
        return AbstractBrauerClass(c.period, c.index_sequence[::-1])
    return GlobalBrauerClass(tuple((p, -inv) for p, inv in c.invariants))


def power(c: BrauerClass, r: int) -> BrauerClass:
    if isinstance(c, AbstractBrauerClass):
        p = c.period
        q = p // gcd(p, r)
        return AbstractBrauerClass(q, tuple(c.index_sequence[(r * m) % p] for m in range(q + 1)))
    return GlobalBrauerClass(tuple((p, inv * r) for p, inv in c.invariants))


def period(c: BrauerClass) -> int:
    if isinstance(c, AbstractBrauerClass):
        return c.period
    return lcm_all(inv.denominator for _, inv in c.invariants)


def index(c: BrauerClass, r: int = 1) -> int:
    """``ind(c^r)``; over Q the index of a class is the lcm of its local orders."""
    if isinstance(c, AbstractBrauerClass):
        return c.index_sequence[r % c.period]
    return lcm_all((inv * r).denominator for _, inv in c.invariants)


def period_of_power(c: BrauerClass, r: int) -> int:
    p = period(c)
    return p // gcd(p, r)


def same_cyclic_subgroup(c1: BrauerClass, c2: BrauerClass) -> bool:
    _require_global(c1, c2)
    bound = lcm_all((period(c1), period(c2)))
    gen1 = any(power(c2, l) == c1 for l in range(bound))
    return gen1 and any(power(c1, m) == c2 for m in range(bound))
