"""Exact cohomology of homogeneous bundles on projective spaces and
Grassmannians, and the cohomological AS-criteria built on it.

Conventions on ``Grass(d, n)`` (d-planes in n-space) with tautological
sequence ``0 -> S -> O^n -> Q -> 0`` and ``L = det(S^dual)``: a Schur atom
``(alpha, beta, twist)`` is ``Sigma^alpha(S^dual) (x) Sigma^beta(Q^dual) (x)
L^twist`` with ``len(alpha) = d`` and ``len(beta) = n - d``. Projective space
``P^m`` is ``Grass(1, m + 1)``, where ``O(1) = L`` and
``Omega^p = (alpha=(-p,), beta=(1^p, 0^(m-p)))``.

On a non-split Brauer-Severi variety every quantity is computed on the split
model after base change; dimensions do not change under field extension.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Union

from .bundles import AsAtom, BsContext, BundleExpr, SplitBundle, descend
from .errors import DescentFailure, IncompatibleAtom, InvalidContext
from .weights import as_weight, dual_weight, pieri_fold, weyl_dim


@dataclass(frozen=True)
class CohomologyTable:
    """Degree -> dimension; absent degrees are zero."""

    dims: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: Counter = Counter()
        for i, h in self.dims:
            acc[int(i)] += h
        if any(h < 0 for h in acc.values()):
            raise ValueError("negative dimension")
        object.__setattr__(self, "dims", tuple(sorted((i, h) for i, h in acc.items() if h)))

    @classmethod
    def from_dict(cls, d) -> "CohomologyTable":
        return cls(tuple((int(i), int(h)) for i, h in d.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def __getitem__(self, i: int) -> int:
        return self.as_dict().get(i, 0)

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        return CohomologyTable(self.dims + other.dims)

    def scaled(self, m: int) -> "CohomologyTable":
        return CohomologyTable(tuple((i, h * m) for i, h in self.dims))

    def reversed(self, top: int) -> "CohomologyTable":
        """The table with degree i moved to ``top - i`` (Serre duality)."""
        return CohomologyTable(tuple((top - i, h) for i, h in self.dims))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h for i, h in self.dims)

    def __bool__(self) -> bool:
        return bool(self.dims)

    def to_json(self) -> dict:
        return {"table": {str(i): h for i, h in self.dims}}


def bott_pn(n: int, p_form: int, t: int) -> CohomologyTable:
    """Cohomology of ``Omega^p(t)`` on ``P^n`` (Bott's formula)."""
    if not 0 <= p_form <= n:
        raise ValueError(f"p_form must lie in [0, {n}]")
    p = p_form
    if t > p:
        return CohomologyTable(((0, comb(t + n - p, t) * comb(t - 1, p)),))
    if t == 0:
        return CohomologyTable(((p, 1),))
    if t < p - n:
        return CohomologyTable(((n, comb(-t + p, -t) * comb(-t - 1, n - p)),))
    return CohomologyTable()


@lru_cache(maxsize=None)
def _bwb(n: int, lam: tuple[int, ...]) -> tuple[int, int] | None:
    v = [x + n - 1 - k for k, x in enumerate(lam)]
    if len(set(v)) < n:
        return None
    inversions = sum(1 for a in range(n) for b in range(a + 1, n) if v[a] < v[b])
    v.sort(reverse=True)
    dominant = tuple(x - (n - 1 - k) for k, x in enumerate(v))
    return inversions, weyl_dim(dominant, n)


def bwb_cohomology(d: int, n: int, alpha, beta, twist: int = 0) -> CohomologyTable:
    """Borel-Weil-Bott on ``Grass(d, n)`` for
    ``Sigma^alpha(S^dual) (x) Sigma^beta(Q^dual) (x) L^twist``."""
    alpha, beta = as_weight(alpha), as_weight(beta)
    if not 1 <= d < n or len(alpha) != d or len(beta) != n - d:
        raise ValueError(f"weights of lengths {len(alpha)}, {len(beta)} do not fit Grass({d}, {n})")
    res = _bwb(n, tuple(x + twist for x in alpha) + beta)
    if res is None:
        return CohomologyTable()
    return CohomologyTable((res,))


@dataclass(frozen=True)
class CohAtom:
    """An irreducible homogeneous bundle with multiplicity.

    Either a Schur atom (``alpha``, ``beta``) or, on projective space, the
    twisted differential forms ``Omega^p_form(twist)``.
    """

    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()
    twist: int = 0
    mult: int = 1
    p_form: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_weight(self.alpha))
        object.__setattr__(self, "beta", as_weight(self.beta))
        if self.mult < 1:
            raise ValueError("multiplicity must be positive")
        if self.p_form is not None and (self.alpha or self.beta or self.p_form < 0):
            raise ValueError("a differential-form atom carries no Schur weights")

    def shifted(self, s: int) -> "CohAtom":
        return CohAtom(self.alpha, self.beta, self.twist + s, self.mult, self.p_form)

    def dual(self) -> "CohAtom":
        if self.p_form is not None:
            raise ValueError("dualize the Schur form of a differential-form atom")
        return CohAtom(dual_weight(self.alpha), dual_weight(self.beta), -self.twist, self.mult)

    @property
    def is_line(self) -> bool:
        if self.p_form is not None:
            return self.p_form == 0
        return len(set(self.alpha)) <= 1 and not any(self.beta) and (
            not self.alpha or self.alpha[0] == 0
        )

    def to_json(self) -> dict:
        if self.p_form is not None:
            return {"cotangent": {"p": self.p_form, "t": self.twist, "mult": self.mult}}
        return {"schur": {"alpha": list(self.alpha), "beta": list(self.beta),
                          "t": self.twist, "mult": self.mult}}


def line_atom(ctx: BsContext, t: int, mult: int = 1) -> CohAtom:
    return CohAtom((0,) * ctx.d, (0,) * (ctx.algebra_degree - ctx.d), t, mult)


def cotangent_atom(p: int, t: int = 0, mult: int = 1) -> CohAtom:
    return CohAtom(twist=t, mult=mult, p_form=p)


def schur_form(atom: CohAtom, ctx: BsContext) -> CohAtom:
    """Rewrite ``Omega^p(t)`` on ``P^m`` as a Schur atom on ``Grass(1, m + 1)``."""
    if atom.p_form is None:
        return atom
    if ctx.d != 1:
        raise IncompatibleAtom("differential-form atoms need a d = 1 context", d=ctx.d)
    m = ctx.algebra_degree - 1
    p = atom.p_form
    if p > m:
        raise IncompatibleAtom(f"Omega^{p} does not exist on P^{m}", p=p, dimension=m)
    return CohAtom((-p,), (1,) * p + (0,) * (m - p), atom.twist, atom.mult)


# an AS term ``(AsAtom, mult)`` or a ``BundleExpr`` is accepted wherever atoms are
AtomLike = Union[CohAtom, tuple]


def split_atoms(atoms: "Iterable[AtomLike] | BundleExpr", ctx: BsContext) -> list[CohAtom]:
    """Pull every input back to homogeneous atoms on the split model."""
    if isinstance(atoms, BundleExpr):
        atoms = list(atoms.atoms)
    p = ctx.period
    out = []
    for x in atoms:
        if isinstance(x, CohAtom):
            if x.p_form is None and (len(x.alpha) != ctx.d
                                     or len(x.beta) != ctx.algebra_degree - ctx.d):
                raise IncompatibleAtom(
                    f"atom weights of lengths {len(x.alpha)}, {len(x.beta)} do not fit "
                    f"Grass({ctx.d}, {ctx.algebra_degree})",
                    alpha=list(x.alpha), beta=list(x.beta),
                )
            if x.p_form is not None:
                schur_form(x, ctx)
            out.append(x)
        else:
            atom, mult = x
            if not isinstance(atom, AsAtom):
                atom = AsAtom(j=atom[1], a=atom[0])
            q, j = divmod(atom.j, p)
            out.append(line_atom(ctx, (atom.a + q) * p + j, mult * ctx.rank_of(j)))
    return out


def atom_cohomology(atom: CohAtom, ctx: BsContext) -> CohomologyTable:
    if atom.p_form is not None:
        schur_form(atom, ctx)
        table = bott_pn(ctx.algebra_degree - 1, atom.p_form, atom.twist)
    else:
        table = bwb_cohomology(ctx.d, ctx.algebra_degree, atom.alpha, atom.beta, atom.twist)
    return table.scaled(atom.mult)


def cohomology_of_expr(atoms, ctx: BsContext) -> CohomologyTable:
    """Dimensions of ``H^i`` of a sum of atoms, computed on the split model."""
    if ctx.d == ctx.algebra_degree:
        raise InvalidContext("BS(n, A) is a point", d=ctx.d)
    total = CohomologyTable()
    for atom in split_atoms(atoms, ctx):
        total = total + atom_cohomology(atom, ctx)
    return total


# ---------------------------------------------------------------- criteria


@dataclass(frozen=True)
class BsWitness:
    i: int
    a: int
    j: int
    dim: int

    def to_json(self) -> dict:
        return {"i": self.i, "a": self.a, "j": self.j, "dim": self.dim}


@dataclass(frozen=True)
class GrassWitness:
    r: int
    lam: tuple[int, ...]
    t: int
    dim: int

    def to_json(self) -> dict:
        return {"r": self.r, "lambda": list(self.lam), "t": self.t, "dim": self.dim}


@dataclass(frozen=True)
class Split:
    decomposition: BundleExpr | None = None

    is_split = True


@dataclass(frozen=True)
class NotSplit:
    witness: BsWitness | GrassWitness = field()

    is_split = False

    def __post_init__(self):
        if self.witness.dim < 1:
            raise ValueError("a witness must have positive dimension")


Verdict = Union[Split, NotSplit]


def _transition_interval(atom: CohAtom, n: int, beta_growth: int = 0) -> tuple[int, int]:
    """Twist shifts outside this closed interval put all cohomology of the atom
    in degree 0 or in top degree (lambda + rho is sorted blockwise)."""
    lo = atom.beta[-1] - atom.alpha[0] - n + 1 - atom.twist
    hi = atom.beta[0] + beta_growth - atom.alpha[-1] - 1 - atom.twist
    return lo, hi


def twist_window(atoms: list[CohAtom], ctx: BsContext, beta_growth: int = 0) -> int:
    """Half-width ``B`` of the twist sweep.

    ``B = dim X + max |coordinate| + n``, enlarged if needed so that every
    atom's transition interval lies inside ``[-B, B]``.
    """
    n = ctx.algebra_degree
    coords = [0]
    bound = 0
    for atom in atoms:
        coords += [abs(x) for x in atom.alpha + atom.beta] + [abs(atom.twist)]
        if atom.p_form is not None:
            coords.append(atom.p_form)
        lo, hi = _transition_interval(schur_form(atom, ctx), n, beta_growth)
        bound = max(bound, abs(lo), abs(hi))
    return max(ctx.dimension + max(coords) + n, bound)


def _split_decomposition(atoms: list[CohAtom], ctx: BsContext) -> BundleExpr | None:
    if not all(a.is_line for a in atoms):
        return None
    twists = SplitBundle(tuple((a.twist, a.mult) for a in atoms))
    if ctx.d != 1:
        if ctx.period != 1:
            return None
        return BundleExpr(ctx, tuple((AsAtom(j=0, a=t), m) for t, m in twists.twists))
    try:
        return descend(twists, ctx)
    except DescentFailure:
        return None


def _bs_cell(args) -> BsWitness | None:
    atoms, ctx, s = args
    n = ctx.dimension
    a, j = divmod(s, ctx.period)
    dj = ctx.rank_of(j)
    total = CohomologyTable()
    for atom in atoms:
        total = total + atom_cohomology(atom.shifted(s), ctx)
    for i in range(1, n):
        if total[i]:
            return BsWitness(i, a, j, total[i] * dj)
    return None


def _first(cells, fn, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, cells, chunksize=4))
        return next((w for w in results if w is not None), None)
    for cell in cells:
        w = fn(cell)
        if w is not None:
            return w
    return None


def criterion_bs(e, ctx: BsContext, window_scale: int = 1, jobs: int = 1) -> Verdict:
    """AS-criterion on an ordinary Brauer-Severi variety of dimension n.

    ``E`` is an AS-bundle iff ``H^i(E (x) O(ap) (x) W_j) = 0`` for
    ``0 < i < n``, all ``a`` and ``0 <= j < p``. On the split model the
    twist by ``O(ap) (x) W_j`` is ``L^(ap + j)`` repeated ``d_j`` times; the
    sweep covers ``|ap + j| <= B`` (see ``twist_window``) in ascending order of
    ``ap + j`` and then ``i``.
    """
    if ctx.d != 1:
        raise InvalidContext("criterion_bs needs an ordinary Brauer-Severi variety", d=ctx.d)
    atoms = split_atoms(e, ctx)
    if ctx.dimension <= 1:
        return Split(_split_decomposition(atoms, ctx))
    B = twist_window(atoms, ctx) * window_scale
    cells = [(atoms, ctx, s) for s in range(-B, B + 1)]
    w = _first(cells, _bs_cell, jobs)
    return NotSplit(w) if w else Split(_split_decomposition(atoms, ctx))


def exterior_tuples(d: int, n: int) -> list[tuple[int, ...]]:
    """All ``lam_1 >= ... >= lam_s`` with ``s <= d`` and ``0 <= lam_k <= n - d``."""
    out: list[tuple[int, ...]] = []
    for s in range(d + 1):
        out += sorted(tuple(sorted(c, reverse=True))
                      for c in combinations_with_replacement(range(n - d + 1), s))
    return out


def fold_exterior(atom: CohAtom, lam) -> list[CohAtom]:
    """Decompose ``Lambda^lam_1(Q^dual) (x) ... (x) atom`` into Schur atoms."""
    current: Counter = Counter({atom.beta: atom.mult})
    for i in lam:
        nxt: Counter = Counter()
        for beta, m in current.items():
            for w in pieri_fold(beta, i):
                nxt[w] += m
        current = nxt
    return [CohAtom(atom.alpha, b, atom.twist, m) for b, m in sorted(current.items(), reverse=True)]


def _grass_cell(args) -> GrassWitness | None:
    atoms, ctx, t, lams = args
    top = ctx.dimension
    shift = t * ctx.period
    for lam in lams:
        total = CohomologyTable()
        for atom in atoms:
            for piece in fold_exterior(atom, lam):
                total = total + atom_cohomology(piece.shifted(shift), ctx)
        for r in range(1, top):
            if r != sum(lam) and total[r]:
                return GrassWitness(r, lam, t, total[r])
    return None


def criterion_grass(e, ctx: BsContext, window_scale: int = 1, jobs: int = 1) -> Verdict:
    """AS-criterion on ``BS(d, A)`` (Ottaviani's criterion on the split model).

    Tests ``H^r(Lambda^lam_1 Q^dual (x) ... (x) Lambda^lam_s Q^dual (x) E(t)) = 0``
    for ``0 < r < d(n - d)``, all admissible ``lam`` and ``t`` in the window;
    ``E(t)`` is ``E (x) M^t`` with ``M`` pulling back to ``L^p``. The degree
    ``r = |lam|`` is skipped: there ``Lambda^lam Q^dual (x) L^t`` itself has
    nonzero cohomology for suitable t, so line bundles would fail. The descent
    multiplicities of the ``P_lam`` are not applied, as they cannot change
    vanishing.
    """
    n, d = ctx.algebra_degree, ctx.d
    if n < 3 or not 1 <= d < n:
        raise InvalidContext("criterion_grass needs degree n >= 3 and 1 <= d < n",
                             algebra_degree=n, d=d)
    atoms = [schur_form(a, ctx) for a in split_atoms(e, ctx)]
    lams = exterior_tuples(d, n)
    B = twist_window(atoms, ctx, beta_growth=d) * window_scale
    p = ctx.period
    T = -(-B // p)
    cells = [(atoms, ctx, t, lams) for t in range(-T, T + 1)]
    w = _first(cells, _grass_cell, jobs)
    return NotSplit(w) if w else Split(_split_decomposition(atoms, ctx))
