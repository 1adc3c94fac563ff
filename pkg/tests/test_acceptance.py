"""Acceptance gate: every criterion at its stated tolerance, one per test.

Run with -s to see the per-criterion PASS lines and timings.
"""
import random
import time
from dataclasses import replace

from tornheim import (
    MINUS_ONE,
    ONE,
    EulerTerm,
    EvalConfig,
    Fixture,
    MTIndex,
    RootOfUnity,
    binomial,
    check_relation,
    color_pairs,
    compare_fixture,
    cross_check_grid,
    decompose,
    enumerate_indices,
    eval_decomposition,
    eval_mt_direct,
    parse_relation,
    pi_const,
    verify_fixtures,
    verify_r212,
    zeta_const,
)

EXPECTED_FIXTURE_LABELS = {
    "R(1,1,3)", "R(1,2,2)", "R(1,1,5)", "R(2,1,2)", "R(2,3,2)", "R(1,2,4)",
    "R(1,3,3)", "R(2,1,4)", "R(1,4,2)", "R(2,2,3)", "R(3,1,3)", "R(3,2,2)",
    "R(4,1,2)",
}


def announce(num, name, elapsed, detail=""):
    extra = f" — {detail}" if detail else ""
    print(f"\nACCEPTANCE {num} ({name}): PASS in {elapsed:.2f} s{extra}")


def test_criterion_1_symbolic_fixtures():
    t0 = time.perf_counter()
    reports = verify_fixtures()
    elapsed = time.perf_counter() - t0
    assert {r.label for r in reports} == EXPECTED_FIXTURE_LABELS
    assert all(r.passed for r in reports), [r.label for r in reports if not r.passed]
    assert elapsed < 1.0
    announce(1, "symbolic fixtures", elapsed, f"{len(reports)}/13 exact matches")


def test_criterion_2_central_numeric_claim():
    t0 = time.perf_counter()
    cfg = EvalConfig()  # defaults: tol 1e-10, oracle cutoff 20000
    target = -0.2402184755
    idx = MTIndex(2, 1, 2)

    oracle = eval_mt_direct(idx, MINUS_ONE, ONE, cfg)
    dec = eval_decomposition(decompose(idx, MINUS_ONE, ONE), cfg)
    z5, z3, pi = zeta_const(5).value.real, zeta_const(3).value.real, pi_const().value.real
    closed = (107 / 32) * z5 - (5 / 16) * pi**2 * z3

    assert abs(oracle.value.real - target) < 5e-9
    assert abs(oracle.value.imag) < 1e-13
    assert abs(dec.value.real - target) < 5e-9
    assert abs(closed - target) < 5e-9
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    announce(2, "central value -0.2402184755", elapsed,
             f"oracle {oracle.value.real:.12f}, decomposition {dec.value.real:.12f}, "
             f"closed form {closed:.12f}")


def test_criterion_3_dispute_demonstration():
    t0 = time.perf_counter()
    z5, z3, pi = zeta_const(5).value.real, zeta_const(3).value.real, pi_const().value.real
    disputed = (45 / 16) * z5 - (1 / 4) * pi**2 * z3
    assert abs(disputed - (-0.0495972141)) < 5e-9
    oracle = eval_mt_direct(MTIndex(2, 1, 2), MINUS_ONE, ONE, EvalConfig(oracle_cutoff=6000))
    gap = abs(disputed - oracle.value.real)
    assert gap > 0.19
    elapsed = time.perf_counter() - t0
    announce(3, "published closed form is not R(2,1,2)", elapsed, f"gap {gap:.10f}")


def test_criterion_4_grid_weight8_orders_1_to_4():
    t0 = time.perf_counter()
    cfg = EvalConfig(tolerance=1e-8, oracle_cutoff=1000)
    reports = cross_check_grid(8, [1, 2, 3, 4], cfg)
    elapsed = time.perf_counter() - t0
    expected_cases = sum(
        len([i for i in enumerate_indices(w) if i.weight == w]) for w in range(3, 9)
    ) * 36
    assert len(reports) == expected_cases == 4068
    failures = [r for r in reports if not r.passed]
    assert not failures, [f.label for f in failures[:10]]
    assert elapsed < 300.0
    announce(4, "oracle vs decomposition grid", elapsed, f"{len(reports)} cases, 0 failures")


def test_criterion_5_degenerate_collapse():
    t0 = time.perf_counter()
    cfg = EvalConfig(oracle_cutoff=900)
    colors = [(MINUS_ONE, ONE), (RootOfUnity(1, 4), RootOfUnity(1, 3))]
    degenerate = [idx for idx in enumerate_indices(8) if idx.p == 0 or idx.q == 0]
    assert len(degenerate) == 42  # 21 with p=0, 21 with q=0
    checked = 0
    for idx in degenerate:
        for alpha, beta in colors:
            d = decompose(idx, alpha, beta)
            assert len(d.terms) == 1
            term = d.terms[0]
            assert term.coefficient == 1
            if idx.p == 0:
                assert (term.s, term.t) == (idx.r, idx.q)
                assert (term.x, term.y) == (beta, alpha)
            else:
                assert (term.s, term.t) == (idx.r, idx.p)
                assert (term.x, term.y) == (alpha * beta, alpha.inverse())
            oracle = eval_mt_direct(idx, alpha, beta, cfg)
            dec = eval_decomposition(d, cfg)
            assert abs(oracle.value - dec.value) <= oracle.error_bound + dec.error_bound
            checked += 1
    elapsed = time.perf_counter() - t0
    announce(5, "degenerate collapse", elapsed, f"{checked} index/color cases")


def test_criterion_6_coefficient_sum_identity():
    t0 = time.perf_counter()
    checked = 0
    for p in range(1, 9):
        for q in range(1, 9):
            for r in range(0, 5):
                try:
                    idx = MTIndex(p, q, r)
                except ValueError:
                    continue
                d = decompose(idx, MINUS_ONE, ONE)
                assert d.coefficient_sum() == binomial(p + q, p)
                assert all(t.weight == p + q + r for t in d.terms)
                checked += 1
    elapsed = time.perf_counter() - t0
    announce(6, "coefficient sums = C(p+q,p)", elapsed, f"{checked} indices")


def test_criterion_7_error_bound_honesty():
    t0 = time.perf_counter()
    rng = random.Random(20260810)
    indices = enumerate_indices(8)
    pairs = color_pairs([1, 2, 3, 4])
    base = EvalConfig(oracle_cutoff=800)
    doubled = replace(base, oracle_cutoff=1600, max_inner_terms=400000)
    for _ in range(50):
        idx = rng.choice(indices)
        alpha, beta = rng.choice(pairs)
        o1 = eval_mt_direct(idx, alpha, beta, base)
        o2 = eval_mt_direct(idx, alpha, beta, doubled)
        assert abs(o1.value - o2.value) < o1.error_bound
        d1 = eval_decomposition(decompose(idx, alpha, beta), base)
        d2 = eval_decomposition(decompose(idx, alpha, beta), doubled)
        assert abs(d1.value - d2.value) < d1.error_bound
        assert d1.error_bound > 0
    elapsed = time.perf_counter() - t0
    announce(7, "error-bound honesty", elapsed, "50 randomized cases")


def test_criterion_8_negative_controls():
    t0 = time.perf_counter()
    mutated = Fixture(
        "R(1,1,3)",
        MTIndex(1, 1, 3),
        (EulerTerm(2, 4, 1, True, True), EulerTerm(1, 4, 1, False, True)),
    )
    fixture_report = compare_fixture(mutated)
    assert not fixture_report.passed
    assert fixture_report.detail

    false_relation = parse_relation("1*zeta(5) == MT(2,1,2;-1,1)")
    relation_report = check_relation(false_relation, EvalConfig(oracle_cutoff=2000))
    assert not relation_report.passed
    assert relation_report.absdiff > 1.0
    elapsed = time.perf_counter() - t0
    announce(8, "negative controls detected", elapsed)
