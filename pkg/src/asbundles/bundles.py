"""AS-bundles on a (generalized) Brauer-Severi variety in canonical form.

Every AS-bundle is a direct sum of atoms ``J^a (x) W_j`` with ``0 <= j < p``,
where ``J`` generates Pic(X) and pulls back to ``O(p)`` on the split model,
and ``W_j`` is the indecomposable bundle pulling back to ``O(j)^{d_j}``. A
``BundleExpr`` is the multiset of such atoms; the atom ``(a, j)`` pulls back
to the twist ``a*p + j`` with multiplicity ``d_j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .astype import ASType, compute_as_type
from .brauer import BrauerClass, GlobalBrauerClass, index, period_of_power
from .errors import DescentFailure, IntegralityBug, InvalidContext
from .weights import as_weight, weyl_dim


@dataclass(frozen=True)
class BsContext:
    """``BS(d, A)`` for an algebra of degree ``algebra_degree`` with class
    ``brauer_class``. ``d = 1`` is the ordinary Brauer-Severi variety of
    dimension ``algebra_degree - 1``."""

    brauer_class: BrauerClass
    algebra_degree: int
    d: int = 1

    def __post_init__(self):
        n = self.algebra_degree
        if n < 1 or not 1 <= self.d <= n:
            raise InvalidContext(f"need 1 <= d <= degree, got d={self.d}, degree={n}",
                                 d=self.d, algebra_degree=n)
        ind = index(self.brauer_class, 1)
        if n % ind:
            raise InvalidContext(f"index {ind} does not divide degree {n}",
                                 index=ind, algebra_degree=n)

    @classmethod
    def split(cls, algebra_degree: int, d: int = 1) -> "BsContext":
        """Projective space ``P^(n-1)`` (d = 1) or ``Grass(d, n)`` over k."""
        return cls(GlobalBrauerClass.trivial(), algebra_degree, d)

    @cached_property
    def as_type(self) -> ASType:
        return compute_as_type(self.brauer_class, self.d)

    @property
    def period(self) -> int:
        return period_of_power(self.brauer_class, self.d)

    @property
    def dimension(self) -> int:
        return self.d * (self.algebra_degree - self.d)

    def rank_of(self, j: int) -> int:
        return self.as_type[j]


@dataclass(frozen=True, order=True)
class AsAtom:
    """``J^a (x) W_j``. Ordered by ``(j, a)``."""

    j: int
    a: int

    @classmethod
    def of(cls, a: int, j: int) -> "AsAtom":
        return cls(j=j, a=a)


def _atom(x) -> AsAtom:
    if isinstance(x, AsAtom):
        return x
    a, j = x
    return AsAtom(j=j, a=a)


@dataclass(frozen=True)
class BundleExpr:
    """A canonical multiset of AS atoms on ``ctx``.

    Built from any iterable of ``(atom, mult)`` pairs, where an atom is an
    ``AsAtom`` or an ``(a, j)`` pair with ``0 <= j < p``. Duplicates merge.
    The empty expression is the zero bundle.
    """

    ctx: BsContext
    atoms: tuple[tuple[AsAtom, int], ...] = ()

    def __post_init__(self):
        p = self.ctx.period
        counts: Counter = Counter()
        for atom, mult in self.atoms:
            atom = _atom(atom)
            if not 0 <= atom.j < p:
                raise ValueError(f"residue {atom.j} outside 0..{p - 1}; use krull_schmidt_normalize")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} must be positive")
            counts[atom] += mult
        object.__setattr__(self, "atoms", tuple(sorted(counts.items())))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(atom.a, atom.j): m for atom, m in self.atoms}

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        _same_ctx(self, other)
        return BundleExpr(self.ctx, self.atoms + other.atoms)

    def __str__(self) -> str:
        parts = [f"{m}*J^{atom.a}W_{atom.j}" for atom, m in self.atoms]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SplitBundle:
    """``sum_t O(t)^{m_t}`` on the split model, twists in units of L."""

    twists: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        counts: Counter = Counter()
        for t, m in self.twists:
            if m < 1:
                raise ValueError(f"multiplicity {m} must be positive")
            counts[int(t)] += m
        object.__setattr__(self, "twists", tuple(sorted(counts.items())))

    @classmethod
    def from_dict(cls, d) -> "SplitBundle":
        return cls(tuple(d.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.twists)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.twists)


def _same_ctx(e: BundleExpr, f: BundleExpr) -> None:
    if e.ctx != f.ctx:
        raise ValueError("bundle expressions live on different varieties")


def rank(e: "BundleExpr | SplitBundle") -> int:
    if isinstance(e, SplitBundle):
        return e.rank
    return sum(m * e.ctx.rank_of(atom.j) for atom, m in e.atoms)


def dual(e: BundleExpr) -> BundleExpr:
    p = e.ctx.period
    out = []
    for atom, m in e.atoms:
        if atom.j == 0:
            out.append((AsAtom(j=0, a=-atom.a), m))
        else:
            out.append((AsAtom(j=p - atom.j, a=-atom.a - 1), m))
    return BundleExpr(e.ctx, tuple(out))


def tensor_bundles(e: BundleExpr, f: BundleExpr) -> BundleExpr:
    _same_ctx(e, f)
    ctx = e.ctx
    p = ctx.period
    out = []
    for x, mx in e.atoms:
        for y, my in f.atoms:
            s = x.j + y.j
            top = ctx.rank_of(x.j) * ctx.rank_of(y.j)
            q, r = divmod(top, ctx.rank_of(s))
            if r:
                raise IntegralityBug(
                    f"W_{x.j} (x) W_{y.j} has rank {top}, not a multiple of d_{s % p}",
                    j1=x.j, j2=y.j, rank=top, d=ctx.rank_of(s),
                )
            out.append((AsAtom(j=s % p, a=x.a + y.a + s // p), mx * my * q))
    return BundleExpr(ctx, tuple(out))


def pullback(e: BundleExpr) -> SplitBundle:
    p = e.ctx.period
    return SplitBundle(tuple((atom.a * p + atom.j, m * e.ctx.rank_of(atom.j)) for atom, m in e.atoms))


def descend(s: SplitBundle, ctx: BsContext) -> BundleExpr:
    """Inverse of ``pullback`` on ordinary Brauer-Severi varieties.

    Raises ``DescentFailure`` with the first twist (ascending) whose
    multiplicity is not a multiple of ``d_j``.
    """
    if ctx.d != 1:
        raise InvalidContext("descent is only available for d = 1", d=ctx.d)
    p = ctx.period
    out = []
    for t, m in s.twists:
        a, j = divmod(t, p)
        dj = ctx.rank_of(j)
        if m % dj:
            raise DescentFailure(t, m, dj)
        out.append((AsAtom(j=j, a=a), m // dj))
    return BundleExpr(ctx, tuple(out))


def krull_schmidt_normalize(raw, ctx: BsContext) -> BundleExpr:
    """Canonical form of a list of ``(atom, mult)`` with arbitrary residues.

    ``W_(j + a p) = J^a (x) W_j`` moves out-of-range residues into the twist.
    """
    p = ctx.period
    out = []
    for atom, m in raw:
        atom = _atom(atom)
        q, j = divmod(atom.j, p)
        out.append((AsAtom(j=j, a=atom.a + q), m))
    return BundleExpr(ctx, tuple(out))


def schur_descent_rank(ctx: BsContext, lam) -> int:
    """Rank of the bundle descended from ``Sigma^lam(S)^(n |lam|)`` on BS(d, A)."""
    lam = as_weight(lam)
    n, d = ctx.algebra_degree, ctx.d
    if len(lam) != d or any(not 0 <= x <= n - d for x in lam):
        raise ValueError(f"partition {lam} must have {d} parts in [0, {n - d}]")
    size = sum(lam)
    if size == 0:
        raise ValueError("partition must be nonempty")
    return n * size * weyl_dim(lam, d)
