"""Acceptance criteria, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; every criterion
prints a ``criterion N: PASS|FAIL`` line and the lines are repeated in the
terminal summary.  Criterion 4 is the slow one (a few minutes).
"""

import random
import sys
import time
from collections import Counter

import numpy as np
import pytest

from inertia_kit import graphs as gr
from inertia_kit.algebra import (InertiaSet, T, Trapezoid, add, decompose, expand, is_trapezoidal, min_rank,
                                 minkowski, trapezoid_add_formula)
from inertia_kit.engine import recursive_inertia
from inertia_kit.formulas import inertia_bipartite_join, inertia_formula
from inertia_kit.oracle import (DEFAULT_BUDGET, Realization, batch_inertia, enumerate_realizations, exact_rank,
                                matrix_inertia, verify_containment, witness_max_rank, witness_minrank_path)
from inertia_kit.sweep import family_sweep, unique_by_isomorphism


def S(*terms):
    return InertiaSet.from_trapezoids(*terms)


def _check(results, name, fn):
    try:
        ok = bool(fn())
    except Exception as exc:  # a crash is a failed check, reported by name
        ok = False
        name = f"{name} ({type(exc).__name__}: {exc})"
    results.append((name, ok))


# -- 1 --------------------------------------------------------------------------------

def test_criterion_1_golden_examples(acceptance_log):
    start = time.perf_counter()
    checks = []
    _check(checks, "expand T^1_[2,3]", lambda: expand(T(2, 3, 1)) == {(1, 1), (1, 2), (2, 1)})
    _check(checks, "expand T_[2,3]",
           lambda: expand(T(2, 3)) == {(0, 2), (1, 1), (2, 0), (0, 3), (1, 2), (2, 1), (3, 0)})
    _check(checks, "four-term sum = T^6_[13,22]",
           lambda: add(S(T(2, 3)), S(T(4, 5, 1)), S(T(3, 6, 2)), S(T(4, 8, 3))) == S(T(13, 22, 6)))
    _check(checks, "union sum = T_[4,11]",
           lambda: add(S(T(2, 3), T(3, 4)), S(T(2, 5), T(5, 7))) == S(T(4, 11)))

    def c5_p3():
        s = recursive_inertia(gr.build(gr.Join(gr.Cycle(5), gr.Path(3), 0, 1)))
        return s == S(T(5, 7)) and is_trapezoidal(s)

    _check(checks, "engine C5+P3 = T_[5,7], trapezoidal", c5_p3)
    p3 = gr.build(gr.Path(3))
    b = np.array([[1, 5, 0], [5, 1, 3], [0, 3, 5]], dtype=float)
    _check(checks, "example matrices (1,1,1) (2,1,0) (1,2,0)", lambda: [
        matrix_inertia(Realization(p3, m)).as_tuple()
        for m in ([[0, 1, 0], [1, 0, 1], [0, 1, 0]], b, -b)
    ] == [(1, 1, 1), (2, 1, 0), (1, 2, 0)])
    elapsed = time.perf_counter() - start
    failed = [name for name, ok in checks if not ok]
    ok = not failed and elapsed < 1.0
    got = add(S(T(2, 3)), S(T(4, 5, 1)), S(T(3, 6, 2)), S(T(4, 8, 3)))
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks in {elapsed:.3f}s"
    if failed:
        detail += f"; failed: {failed}; four-term point-set sum is {got!r}"
    acceptance_log(1, ok, detail)
    assert ok, detail


# -- 2 ----------------------------------------------------------------------------------

def _random_trapezoid(rng, max_hi=12):
    k = rng.randint(0, 3)
    hi = rng.randint(2 * k, max_hi)
    lo = rng.randint(0, hi)
    return Trapezoid(k, lo, hi)


def test_criterion_2_algebra_properties(acceptance_log):
    rng = random.Random(20130702)
    start = time.perf_counter()
    add_bad = 0
    pairs = 0
    while pairs < 1000:
        a, b = _random_trapezoid(rng), _random_trapezoid(rng)
        if a.is_empty or b.is_empty:
            continue
        pairs += 1
        if expand(trapezoid_add_formula(a, b)) != minkowski(expand(a), expand(b)):
            add_bad += 1
    trip_bad = 0
    for _ in range(1000):
        terms = [_random_trapezoid(rng) for _ in range(rng.randint(1, 4))]
        pts = S(*terms).points
        if S(*decompose(pts)).points != pts:
            trip_bad += 1
    elapsed = time.perf_counter() - start
    ok = add_bad == 0 and trip_bad == 0 and elapsed < 10
    detail = (f"{pairs} trapezoid pairs ({add_bad} bad), 1000 round trips ({trip_bad} bad) "
              f"in {elapsed:.2f}s")
    acceptance_log(2, ok, detail)
    assert ok, detail


# -- 3 -----------------------------------------------------------------------------------

def test_criterion_3_formula_engine_sweep(acceptance_log):
    start = time.perf_counter()
    specs = list(family_sweep(12))
    mismatches = []
    corrected_bad = 0
    for spec in specs:
        engine = recursive_inertia(gr.build(spec))
        if inertia_formula(spec).set != engine:
            mismatches.append(spec)
        if inertia_formula(spec, corrected=True).set != engine:
            corrected_bad += 1
    elapsed = time.perf_counter() - start
    kinds = Counter(
        'binarystar w=2' if s.w == 2 else 'binarystar w>2' if isinstance(s, gr.BinaryStar) else type(s).__name__
        for s in mismatches
    )
    allowed = all(isinstance(s, gr.BinaryStar) and s.w == 2 for s in mismatches)
    ok = allowed and elapsed < 60
    detail = (f"{len(specs)} specs, {len(mismatches)} formula/engine mismatches {dict(kinds)}; "
              f"confined to binary-star w=2: {allowed}; corrected binary-star formula mismatches: "
              f"{corrected_bad}; {elapsed:.1f}s")
    for s in mismatches[:5]:
        print("  mismatch:", s)
    acceptance_log(3, ok, detail)
    assert ok, detail


# -- 4 and 5 share one oracle pass ----------------------------------------------------------

@pytest.fixture(scope="module")
def oracle_pass():
    """Default-grid scan of every isomorphism class in the sweep with n <= 7."""
    start = time.perf_counter()
    specs = [s for s in family_sweep(12) if gr.build(s).order <= 7]
    groups = unique_by_isomorphism(specs)
    scans = []
    for members in groups.values():
        g = gr.build(members[0])
        sample = enumerate_realizations(g, budget=DEFAULT_BUDGET, check_invariants=True)
        scans.append((members, g, sample))
    return {"specs": specs, "scans": scans, "elapsed": time.perf_counter() - start}


def test_criterion_4_oracle_containment(acceptance_log, oracle_pass):
    violations = []
    corrected_violations = []
    corner_missing = []
    path_missing = []
    tested = 0
    for members, g, sample in oracle_pass["scans"]:
        tested += sample.tested
        n = g.order
        corners = {matrix_inertia(witness_max_rank(g, sign)).point for sign in (1, -1)}
        for spec in members:
            predicted = inertia_formula(spec).set
            rep = verify_containment(sample.attained, predicted, sample)
            if not rep.containment_ok:
                violations.append((spec, rep.violations))
                if not verify_containment(sample.attained, inertia_formula(spec, corrected=True).set).containment_ok:
                    corrected_violations.append(spec)
            want = {p for p in ((n, 0), (0, n)) if p in predicted}
            if not want <= (sample.attained.points | corners):
                corner_missing.append(spec)
            if isinstance(spec, gr.Path) and n >= 2:
                w = matrix_inertia(witness_minrank_path(n))
                if w.point != (n - 1, 0) or matrix_inertia(-witness_minrank_path(n).entries).point != (0, n - 1):
                    path_missing.append(spec)
    elapsed = oracle_pass["elapsed"]
    ok = not violations and not corner_missing and not path_missing and elapsed < 600
    kinds = Counter(type(s).__name__ for s, _ in violations)
    two_arms = all(isinstance(s, gr.BinaryStar) and len(s.s1.arm_sizes) >= 2 for s, _ in violations)
    detail = (f"{len(oracle_pass['specs'])} specs in {len(oracle_pass['scans'])} isomorphism classes, "
              f"{tested} matrices, {elapsed:.0f}s; containment violations: {len(violations)} {dict(kinds)}; "
              f"corner points missing: {len(corner_missing)}; path min-rank witnesses failing: "
              f"{len(path_missing)}; violators are binary stars whose first supernova has >= 2 pendant "
              f"paths: {two_arms}; violations left under the corrected binary-star formula: "
              f"{len(corrected_violations)}")
    for spec, pts in violations[:6]:
        print(f"  violation: {spec} attains {[tuple(p) for p in pts]}")
    acceptance_log(4, ok, detail)
    assert ok, detail


def test_criterion_5_invariants(acceptance_log, oracle_pass):
    # Formula outputs: swap symmetry, and every decomposition term ends at rank n.
    formula_bad = []
    for spec in family_sweep(12):
        s = inertia_formula(spec).set
        n = gr.build(spec).order
        if not (s.is_swap_closed() and all(t.hi == n for t in s.decomposition)):
            formula_bad.append(spec)
    # Oracle matrices: enumerate_realizations asserts conservation and
    # negation duality on every matrix when check_invariants is set.
    checked = sum(sample.invariant_checks for _, _, sample in oracle_pass["scans"])
    scanned = sum(sample.tested for _, _, sample in oracle_pass["scans"])
    # Integer exact-rank guard.
    rng = np.random.default_rng(20130702)
    graphs = [g for _, g, _ in oracle_pass["scans"]]
    guard_bad, guard_n = 0, 0
    while guard_n < 10_000:
        g = graphs[guard_n % len(graphs)]
        a = np.diag(rng.integers(-5, 6, size=g.order))
        for u, v in g.edges:
            a[u, v] = a[v, u] = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        if guard_n % 2:
            # Retune one diagonal entry so the matrix is singular when possible,
            # which exercises the zero count.
            x = int(rng.integers(0, g.order))
            for value in rng.permutation(np.arange(-5, 6)):
                a[x, x] = value
                if exact_rank(a) < g.order:
                    break
        zero_exact = g.order - exact_rank(a)
        zero_jacobi = matrix_inertia(a.astype(float)).zero
        pos, neg = batch_inertia(a[None].astype(float))
        zero_batch = g.order - int(pos[0]) - int(neg[0])
        if not zero_exact == zero_jacobi == zero_batch:
            guard_bad += 1
        guard_n += 1
    ok = not formula_bad and checked == scanned and guard_bad == 0
    detail = (f"formula outputs failing symmetry/closure: {len(formula_bad)}; "
              f"oracle matrices with conservation+duality checked: {checked}/{scanned}; "
              f"exact-rank guard: {guard_n} integer matrices, {guard_bad} disagreements")
    acceptance_log(5, ok, detail)
    assert ok, detail


# -- 6 ----------------------------------------------------------------------------------------

def test_criterion_6_bipartite_join_min_rank(acceptance_log):
    worst, count = 0, 0
    for a in range(2, 5):
        for b in range(a, 5):
            for c in range(2, 5):
                for d in range(c, 5):
                    for case in gr.BIPARTITE_CASES:
                        worst = max(worst, min_rank(inertia_bipartite_join(a, b, c, d, case)))
                        count += 1
    ok = worst <= 4
    detail = f"{count} bipartite joins, largest minimum rank {worst}"
    acceptance_log(6, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
