"""Acceptance gate: one criterion per test, one printed pass/fail line each.

Each test prints ``ACCEPTANCE <n>: PASS|FAIL -- <summary> (<elapsed>s)``
before asserting, so a full-suite run always shows the verdict per
criterion.  Run with ``pytest -v -s tests/test_acceptance.py``.
"""

import random
import time
from fractions import Fraction
from math import log

from x16class import arith, ecq, identities, quadfield, x16
from x16class.ecq import E4_GENERATOR, E4_TORSION, E4_WEIERSTRASS, ECPoint, ec_add, ec_mul
from x16class.quadfield import QFieldElem, factor_principal
from x16class.quadform import (
    class_group,
    class_number,
    compose,
    enumerate_reduced,
    principal_form,
    reduce_form,
    two_rank_genus,
    two_rank_of_group,
)


def _verdict(n: int, ok: bool, summary: str, t0: float):
    elapsed = time.perf_counter() - t0
    print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} -- {summary} ({elapsed:.2f}s)")
    assert ok, f"acceptance criterion {n} failed: {summary}"


def test_criterion_1_table1_class_numbers():
    t0 = time.perf_counter()
    h15 = class_number(arith.fundamental_discriminant(-15))
    h2030 = class_number(arith.fundamental_discriminant(-2030))
    ok = h15 == 2 and h2030 == 40 and time.perf_counter() - t0 < 1.0
    _verdict(1, ok, f"h(-15) = {h15} (want 2), h(-2030 field) = {h2030} (want 40), < 1 s", t0)


def test_criterion_2_census_height_50():
    t0 = time.perf_counter()
    records = []
    summary = x16.census(50, records.append)
    exceptions_ok = all(
        x16.point_from_t(t).d == -15 for t in summary.exceptions
    ) and sorted(summary.exceptions) == [Fraction(-3), Fraction(1, 3)]
    ok = (
        summary.violations == []
        and summary.errors == []
        and exceptions_ok
        and all(r.div10 for r in records if r.d != -15)
        and time.perf_counter() - t0 < 600
    )
    _verdict(
        2,
        ok,
        f"{summary.records} records at height <= 50, exceptions {sorted(summary.exceptions)}, "
        f"{len(summary.violations)} violations, {len(summary.errors)} errors",
        t0,
    )


def _fundamental_discriminants_upto(bound: int):
    for disc in range(-3, bound - 1, -1):
        if disc % 4 == 1:
            d = disc
        elif disc % 4 == 0:
            d = disc // 4
            if d % 4 not in (2, 3):
                continue
        else:
            continue
        if arith.squarefree_part(d).m == 1:
            yield disc, d


def test_criterion_3_genus_theory_cross_check():
    t0 = time.perf_counter()
    mismatches = []
    count = 0
    for disc, d in _fundamental_discriminants_upto(-(10**4)):
        count += 1
        expected = two_rank_genus(d)
        actual = two_rank_of_group(class_group(disc))
        if expected != actual:
            mismatches.append((disc, expected, actual))
    ok = not mismatches and count > 3000 and time.perf_counter() - t0 < 120
    _verdict(
        3,
        ok,
        f"{count} fundamental discriminants in [-10^4, -3], {len(mismatches)} 2-rank mismatches",
        t0,
    )


def test_criterion_4_pullback_orders_and_valuations():
    t0 = time.perf_counter()
    trivial = {Fraction(-3), Fraction(1, 3), Fraction(-242, 29), Fraction(29, 242)}
    ts = set(x16.census_parameters(20)) | trivial
    bad_orders = []
    bad_valuations = []
    for t in sorted(ts, key=lambda t: (abs(t.numerator) + t.denominator, t.numerator)):
        p = x16.point_from_t(t)
        e = x16.g_eval(p)
        F = factor_principal(e)
        if any(v % 5 for _, v in F.entries):
            bad_valuations.append(t)
            continue
        order = x16.cl5_pullback(p).order
        expected = 1 if t in trivial else 5
        if order != expected:
            bad_orders.append((t, order, expected))
    ok = not bad_orders and not bad_valuations
    _verdict(
        4,
        ok,
        f"{len(ts)} parameters: orders 1 exactly on the four exceptional t, 5 elsewhere; "
        f"{len(bad_valuations)} non-5-divisible valuation sets",
        t0,
    )


def test_criterion_5_five_indivisibility():
    t0 = time.perf_counter()
    hs = {d: class_number(arith.fundamental_discriminant(d)) for d in x16.COROLLARY15_FIELDS}
    ok = all(h % 5 for h in hs.values()) and time.perf_counter() - t0 < 5
    _verdict(5, ok, f"5 does not divide h for all {len(hs)} listed fields, < 5 s", t0)


def test_criterion_6_identity_suite():
    t0 = time.perf_counter()
    results = identities.verify_all()
    fails = [r.id for r in results if r.status == "fail"]
    passes = {r.id for r in results if r.status == "pass"}
    externals = {r.id for r in results if r.status == "external"}
    ok = (
        not fails
        and len(passes) == 24
        and len(externals) == 18
        and not (passes & externals)
        and time.perf_counter() - t0 < 5
    )
    _verdict(
        6, ok, f"{len(passes)} claims pass, {len(fails)} fail, {len(externals)} external, < 5 s", t0
    )


def test_criterion_7_example6():
    t0 = time.perf_counter()
    checks = ecq.section6_checks(rounds=40)
    p = (ecq.EXAMPLE6_U**4 + ecq.EXAMPLE6_V**4) // 2
    ok = all(good for _, good in checks) and len(str(p)) == 181 and time.perf_counter() - t0 < 30
    _verdict(7, ok, f"all {len(checks)} sub-checks true, prime of {len(str(p))} digits, <= 30 s", t0)


def test_criterion_8_sextic_point_list():
    t0 = time.perf_counter()
    ok = x16.verify_prop34_points()
    img = x16.y16_x_image(Fraction(3), Fraction(-29))
    ok = ok and img == Fraction(-242, 29) and time.perf_counter() - t0 < 1
    _verdict(8, ok, f"8 points verified, 0/0-resolved x-image = {img} (want -242/29), < 1 s", t0)


PI2_FIRST_RUN_RATIOS = {10**4: 2.264823, 10**5: 2.144628, 10**6: 2.040233}


def test_criterion_9_pi2_band():
    t0 = time.perf_counter()
    ok = ecq.pi2_count(20) == 11 == ecq._pi2_brute(20)
    drifts = {}
    for n, pinned in PI2_FIRST_RUN_RATIOS.items():
        ratio = ecq.pi2_count(n) * log(n) / n
        drifts[n] = abs(ratio - pinned) / pinned
        ok = ok and drifts[n] <= 0.05
    ok = ok and time.perf_counter() - t0 < 60
    worst = max(drifts.values())
    _verdict(9, ok, f"pi2(20) = 11, ratio drift <= {worst:.2%} (tolerance 5%), <= 1 min", t0)


def _property_quadform(rng) -> int:
    cases = 0
    discs = [-15, -8120, -455, -2059, -3, -4, -420]
    for disc in discs:
        forms = enumerate_reduced(disc)
        one = principal_form(disc)
        for _ in range(40):
            f, g, h = (rng.choice(forms) for _ in range(3))
            assert compose(one, f) == f
            assert compose(f, reduce_form(f.inverse())) == one
            assert compose(f, g) == compose(g, f)
            assert compose(compose(f, g), h) == compose(f, compose(g, h))
            cases += 4
    return cases


def _property_ideal_norms(rng) -> int:
    cases = 0
    for disc in (-15, -8120, -455, -84):
        ideals = []
        for a in range(1, 30):
            for b in range(0, 2 * a):
                if (b * b - disc) % (4 * a) == 0:
                    ideals.append(quadfield.QIdeal.make(disc, a, b))
        for _ in range(130):
            I, J = rng.choice(ideals), rng.choice(ideals)
            assert (I * J).norm() == I.norm() * J.norm()
            assert (I * I.inverse()).norm() == 1
            cases += 2
    return cases


def _property_factor_reassembly(rng) -> int:
    cases = 0
    for disc in (-15, -8120, -455, -4):
        for _ in range(265):
            u = Fraction(rng.randrange(-15, 16), rng.randrange(1, 5))
            v = Fraction(rng.randrange(-15, 16), rng.randrange(1, 5))
            e = QFieldElem.make(disc, u, v)
            if e.is_zero():
                continue
            F = factor_principal(e)
            I = F.product()
            assert I.norm() == abs(e.norm()) == F.norm()
            assert I.contains(e)
            cases += 1
    return cases


def _property_ec_associativity(rng) -> int:
    G = ECPoint.make(E4_WEIERSTRASS, *E4_GENERATOR)
    T = ECPoint.make(E4_WEIERSTRASS, *E4_TORSION)
    cases = 0
    pool = [ec_add(ec_mul(a, G), ec_mul(t, T)) for a in range(-5, 6) for t in range(2)]
    for _ in range(1000):
        P, Q, R = (rng.choice(pool) for _ in range(3))
        assert ec_add(ec_add(P, Q), R) == ec_add(P, ec_add(Q, R))
        cases += 1
    return cases


def test_criterion_10_property_suites():
    t0 = time.perf_counter()
    rng = random.Random(42)
    counts = {
        "quadform group axioms": _property_quadform(rng),
        "ideal/norm multiplicativity": _property_ideal_norms(rng),
        "factor reassembly": _property_factor_reassembly(rng),
        "EC associativity": _property_ec_associativity(rng),
    }
    ok = all(c >= 1000 for c in counts.values())
    _verdict(10, ok, ", ".join(f"{k}: {v} cases" for k, v in counts.items()), t0)
