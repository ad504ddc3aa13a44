"""AS-types of (generalized) Brauer-Severi varieties.

The AS-type of ``BS(d, A)`` is ``(d_0, ..., d_p)`` with ``p`` the period of
``A^d`` and ``d_j = ind(A^(j*d))``; for ``d = 1`` this is the ordinary
Brauer-Severi variety of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .brauer import AbstractBrauerClass, BrauerClass, index, period_of_power
from .errors import AbstractWithD


@dataclass(frozen=True)
class ASType:
    entries: tuple[int, ...]
    period: int

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) != self.period + 1:
            raise ValueError(f"AS-type of period {self.period} needs {self.period + 1} entries")
        if e[0] != 1 or e[-1] != 1:
            raise ValueError(f"AS-type {e} must start and end with 1")
        if e != e[::-1]:
            raise ValueError(f"AS-type {e} is not a palindrome")

    def __getitem__(self, j: int) -> int:
        """Rank ``d_j`` for any integer j (the sequence is p-periodic)."""
        return self.entries[j % self.period]

    def to_json(self) -> dict:
        return {"period": self.period, "as_type": list(self.entries)}

    @classmethod
    def from_json(cls, obj: dict) -> "ASType":
        return cls(tuple(obj["as_type"]), obj["period"])


def compute_as_type(c: BrauerClass, d: int = 1) -> ASType:
    if d < 1:
        raise ValueError("d must be positive")
    if isinstance(c, AbstractBrauerClass) and d > 1:
        raise AbstractWithD(
            "AS-type of BS(d, A) for d > 1 is not determined by abstract index data",
            d=d,
        )
    r = period_of_power(c, d)
    return ASType(tuple(index(c, j * d) for j in range(r + 1)), r)


def as_type_period_equals_index(p: int) -> ASType:
    """AS-type when period equals index: ``d_j = p / (p, j)``."""
    if p < 1:
        raise ValueError("period must be positive")
    return ASType(tuple(p // gcd(p, j) for j in range(p + 1)), p)


def same_as_type(c1: BrauerClass, c2: BrauerClass, d: int = 1) -> bool:
    return compute_as_type(c1, d) == compute_as_type(c2, d)
