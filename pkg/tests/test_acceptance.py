"""Acceptance criteria, one test per criterion.

Every comparison is exact. Each test prints a single ``[PASS]`` or ``[FAIL]``
line; the lines are repeated in the pytest terminal summary. Run this file
directly (``python tests/test_acceptance.py``) for the lines alone.
"""

from __future__ import annotations

import itertools
import random
from math import comb, gcd

from asbundles import (
    INF,
    AbstractBrauerClass,
    BsContext,
    BundleExpr,
    CohAtom,
    NotSplit,
    Split,
    SplitBundle,
    as_type_period_equals_index,
    bott_pn,
    bwb_cohomology,
    class_from_invariants,
    compute_as_type,
    cotangent_atom,
    criterion_bs,
    criterion_grass,
    descend,
    hilbert_symbol,
    line_atom,
    opposite,
    period,
    power,
    pullback,
    quaternion_class,
    rank,
    same_as_type,
    same_cyclic_subgroup,
    tensor_bundles,
    validate_index_sequence,
)
from asbundles.cohomology import schur_form
from asbundles.errors import DescentFailure

from oracles import hilbert_bruteforce, hilbert_real, oracle_line_table
from strategies import random_expr, standard_contexts

RESULTS: list[str] = []

GRID = [1, -1, 2, -2, 3, -3, 5, 7]
ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def _report(n: int, title: str, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {n}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failure: {failures[0]}"
    RESULTS.append(line)
    print(line)
    assert not failures, line


def _grid_pairs():
    return list(itertools.combinations_with_replacement(GRID, 2))


def _cyclic_classes() -> list:
    """Global classes of exact period 3, 4 and 6 from invariant lists."""
    places = [5, 7, 11, 13]
    out = []
    for m in (3, 4, 6):
        for q1, q2 in itertools.combinations(places, 2):
            for k in range(1, m):
                if gcd(k, m) == 1:
                    out.append(class_from_invariants([(q1, f"{k}/{m}"), (q2, f"{m - k}/{m}")]))
        for q1, q2, q3 in itertools.combinations(places, 3):
            for k1, k2 in itertools.product(range(1, m), repeat=2):
                k3 = (-k1 - k2) % m
                if k3 and gcd(gcd(k1, k2), m) == 1:
                    out.append(class_from_invariants([(q1, f"{k1}/{m}"), (q2, f"{k2}/{m}"), (q3, f"{k3}/{m}")]))
    return [c for c in out if period(c) in (3, 4, 6)]


def test_criterion_1_quaternion_as_type():
    failures = []
    for a, b in [(-1, -1), (3, 5), (-1, 3), (2, 5)]:
        c = quaternion_class(a, b)
        got = compute_as_type(c, 1)
        if period(c) != 2 or got.entries != (1, 2, 1):
            failures.append(((a, b), got.entries))
    _report(1, "AS-type of a nonsplit quaternion class is (1,2,1)", failures,
            f"(-1,-1) -> {compute_as_type(quaternion_class(-1, -1)).entries}")


def test_criterion_2_as_type_two_code_paths():
    classes = [quaternion_class(a, b) for a, b in _grid_pairs()] + _cyclic_classes()
    failures = []
    for c in classes:
        lhs = compute_as_type(c, 1)
        rhs = as_type_period_equals_index(period(c))
        if lhs != rhs:
            failures.append((str(c), lhs.entries, rhs.entries))
    periods = sorted({period(c) for c in classes})
    if len(classes) < 50:
        failures.append(f"only {len(classes)} classes")
    if periods != [1, 2, 3, 4, 6]:
        failures.append(f"periods covered {periods}")
    _report(2, "compute_as_type = as_type_period_equals_index", failures,
            f"{len(classes)} classes, periods {periods}")


def test_criterion_3_hilbert_product_formula_and_oracle():
    failures = []
    places = [2] + ODD_PRIMES + [37, 41, 43, 47, INF]
    for a, b in _grid_pairs():
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        if prod != 1:
            failures.append(("product", a, b, prod))
        if hilbert_symbol(a, b, INF) != hilbert_real(a, b):
            failures.append(("real", a, b))
    checked = 0
    for p in ODD_PRIMES:
        for a, b in itertools.product(GRID + [p, -p, 2 * p, p * p], repeat=2):
            checked += 1
            if hilbert_symbol(a, b, p) != hilbert_bruteforce(a, b, p):
                failures.append(("oracle", a, b, p))
    _report(3, "Hilbert product formula and brute-force agreement", failures,
            f"{len(_grid_pairs())} pairs, {checked} oracle comparisons")


def test_criterion_4_index_sequence_validator():
    failures = []
    for p, seq in [(2, (1, 2, 1)), (4, (1, 4, 2, 4, 1)), (6, (1, 6, 3, 2, 3, 6, 1))]:
        r = validate_index_sequence(p, seq)
        if not r.valid:
            failures.append(("accept", seq, sorted(r.constraints)))
    rejected = []
    for p, seq, name in [(2, (1, 3, 1), "same_prime_factors"),
                         (4, (1, 4, 2, 2, 1), "palindrome"),
                         (3, (1, 2, 2, 1), "period_divides_index")]:
        r = validate_index_sequence(p, seq)
        if r.valid or name not in r.constraints:
            failures.append(("reject", seq, sorted(r.constraints)))
        rejected.append(f"{seq}:{'/'.join(sorted(r.constraints))}")
    _report(4, "index-sequence validator", failures, "; ".join(rejected))


def _roundtrip_contexts() -> dict[str, BsContext]:
    ctxs = standard_contexts()
    return {k: ctxs[k] for k in ("split_p3", "conic", "quaternion_p3", "cubic_p2", "abstract_1_4_1")}


def test_criterion_5_descent_roundtrips():
    failures = []
    rng = random.Random(5)
    ctxs = _roundtrip_contexts()
    for name, ctx in ctxs.items():
        for _ in range(200):
            e = random_expr(rng, ctx, max_atoms=5, a_range=4)
            s = pullback(e)
            if descend(s, ctx) != e:
                failures.append((name, "descend.pullback", e))
            if pullback(descend(s, ctx)) != s:
                failures.append((name, "pullback.descend", s))
    witness = None
    try:
        descend(SplitBundle.from_dict({1: 1}), ctxs["conic"])
        failures.append("conic {1:1} descended")
    except DescentFailure as exc:
        witness = (exc.t, exc.m, exc.d)
        if witness != (1, 1, 2):
            failures.append(("witness", witness))
    periods = sorted({c.period for c in ctxs.values()})
    _report(5, "descend/pullback round trips", failures,
            f"200 per context over {len(ctxs)} contexts, periods {periods}, conic witness {witness}")


def _split_tensor(s1: SplitBundle, s2: SplitBundle) -> dict:
    out: dict[int, int] = {}
    for (t1, m1), (t2, m2) in itertools.product(s1.as_dict().items(), s2.as_dict().items()):
        out[t1 + t2] = out.get(t1 + t2, 0) + m1 * m2
    return out


def test_criterion_6_tensor_coherence():
    failures = []
    rng = random.Random(6)
    ctxs = _roundtrip_contexts()
    for name, ctx in ctxs.items():
        for _ in range(100):
            e, f = random_expr(rng, ctx), random_expr(rng, ctx)
            g = tensor_bundles(e, f)
            if rank(g) != rank(e) * rank(f):
                failures.append((name, "rank", e, f))
            if pullback(g).as_dict() != _split_tensor(pullback(e), pullback(f)):
                failures.append((name, "pullback", e, f))
    conic = ctxs["conic"]
    w1 = BundleExpr(conic, (((0, 1), 1),))
    sq = tensor_bundles(w1, w1)
    if {(x.a, x.j): m for x, m in sq.atoms} != {(1, 0): 4}:
        failures.append(("conic", sq))
    _report(6, "tensor coherence", failures, f"100 pairs per context over {len(ctxs)} contexts")


def _chi_forms(n: int, p: int, t: int) -> int:
    """Euler characteristic of Omega^p(t) on P^n from the Euler sequence."""
    if p == 0:
        return comb(t + n, n) if t >= 0 else (-1) ** n * comb(-t - 1, n)
    return comb(n + 1, p) * _chi_forms(n, 0, t - p) - _chi_forms(n, p - 1, t)


def test_criterion_7_cohomology_engine():
    failures = []
    if bott_pn(2, 1, 0).as_dict() != {1: 1}:
        failures.append(("ext", bott_pn(2, 1, 0).as_dict()))
    for n in range(1, 5):
        for t in range(-8, 9):
            if bott_pn(n, 0, t).as_dict() != oracle_line_table(n, t):
                failures.append(("monomial", n, t))
    for n in range(1, 5):
        split = BsContext.split(n + 1)
        for t in range(-6, 7):
            for p in range(n + 1):
                table = bott_pn(n, p, t)
                atom = schur_form(cotangent_atom(p, t), split)
                if bwb_cohomology(1, n + 1, atom.alpha, atom.beta, atom.twist) != table:
                    failures.append(("bwb", n, p, t))
                if table.reversed(n) != bott_pn(n, n - p, -t):
                    failures.append(("serre", n, p, t))
                if table.euler_characteristic() != _chi_forms(n, p, t):
                    failures.append(("euler", n, p, t))
    _report(7, "cohomology engine", failures, "n <= 4, oracle |t| <= 8, BWB/Serre/Euler |t| <= 6")


def test_criterion_8_criterion_soundness_and_discrimination():
    failures = []
    ctxs = standard_contexts()
    pool = [ctxs[k] for k in ("split_line", "split_p3", "conic", "quaternion_p3", "cubic_p2", "abstract_1_4_1")]
    pool += [BsContext.split(3)]
    rng = random.Random(8)
    for k in range(100):
        ctx = pool[k % len(pool)]
        e = random_expr(rng, ctx, max_atoms=3, a_range=3)
        v = criterion_bs(e, ctx)
        if v != Split(e):
            failures.append(("split", e, v))
        if k % 5 == 0 and criterion_bs(e, ctx, window_scale=2) != v:
            failures.append(("window", e))
    witnesses = []
    for n in (2, 3):
        ctx = BsContext.split(n + 1)
        v = criterion_bs([cotangent_atom(1)], ctx)
        ok = isinstance(v, NotSplit) and (v.witness.i, v.witness.a, v.witness.j) == (1, 0, 0)
        if not ok:
            failures.append(("cotangent", n, v))
        else:
            witnesses.append(f"P^{n}: i={v.witness.i} t={v.witness.a * ctx.period + v.witness.j}")
        if criterion_bs([cotangent_atom(1)], ctx, window_scale=2) != v:
            failures.append(("window", "cotangent", n))
    g = BsContext.split(4, d=2)
    lines = [line_atom(g, 0), line_atom(g, 1), line_atom(g, -2, 3)]
    sub_dual = [CohAtom((1, 0), (0, 0))]
    for atoms, expect in ((lines, True), (sub_dual, False)):
        v = criterion_grass(atoms, g)
        if v.is_split != expect:
            failures.append(("grass", atoms, v))
        if criterion_grass(atoms, g, window_scale=2) != v:
            failures.append(("grass window", atoms))
    _report(8, "criterion soundness and discrimination", failures,
            "100 AS expressions split; " + ", ".join(witnesses))


def test_criterion_9_as_type_does_not_determine_class():
    failures = []
    c1, c2 = quaternion_class(-1, -1), quaternion_class(3, 5)
    ram1 = {v for v, _ in c1.invariants}
    ram2 = {v for v, _ in c2.invariants}
    if ram1 & ram2 or period(c1) != 2 or period(c2) != 2:
        failures.append(("setup", ram1, ram2))
    if not same_as_type(c1, c2):
        failures.append("AS-types differ")
    if same_cyclic_subgroup(c1, c2):
        failures.append("disjoint classes reported equivalent")
    cubic = class_from_invariants([(5, "1/3"), (7, "2/3")])
    for c in (c1, c2, cubic):
        if not same_cyclic_subgroup(c, opposite(c)):
            failures.append(("opposite", str(c)))
    if not same_cyclic_subgroup(cubic, power(cubic, 2)):
        failures.append("cubic square")
    _report(9, "equal AS-types, distinct cyclic subgroups", failures,
            f"ramification {sorted(map(str, ram1))} vs {sorted(map(str, ram2))}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
