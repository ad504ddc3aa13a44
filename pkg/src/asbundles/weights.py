"""Integer weights of GL(m): dimensions and the dual Pieri rule."""

from __future__ import annotations

from itertools import combinations

Weight = tuple[int, ...]


def as_weight(w) -> Weight:
    w = tuple(int(x) for x in w)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"weight {w} is not weakly decreasing")
    return w


def weyl_dim(w, m: int | None = None) -> int:
    """Dimension of the irreducible GL(m)-module of highest weight ``w``."""
    w = as_weight(w)
    if m is None:
        m = len(w)
    if len(w) != m:
        raise ValueError(f"weight {w} has length {len(w)}, expected {m}")
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension formula must divide exactly"
    return q


def pieri_fold(beta, i: int) -> list[Weight]:
    """Highest weights of ``Sigma^beta V (x) Lambda^i V``: add a vertical strip
    of size i to ``beta``. Each weight occurs once; sorted descending."""
    beta = as_weight(beta)
    if not 0 <= i <= len(beta):
        raise ValueError(f"exterior power {i} out of range for rank {len(beta)}")
    out = set()
    for rows in combinations(range(len(beta)), i):
        w = list(beta)
        for r in rows:
            w[r] += 1
        if all(w[k] >= w[k + 1] for k in range(len(w) - 1)):
            out.add(tuple(w))
    return sorted(out, reverse=True)


def dual_weight(w) -> Weight:
    """Highest weight of the dual module."""
    return tuple(-x for x in reversed(as_weight(w)))
