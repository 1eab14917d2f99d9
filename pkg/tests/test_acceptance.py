"""Acceptance suite: one test per criterion, exact tolerances, one printed
pass/fail line each. Criterion 2 is asserted twice: once verbatim (known
unsatisfiable: the printed closed form has the wrong exponent, see the
decisions ledger; kept as a strict xfail) and once with the corrected
exponent, which is the mathematically true identity.
"""

import random
from fractions import Fraction

import pytest

from cubicforge import (
    Curve,
    PolyQ,
    RadicalElem,
    TorsionVerdict,
    ascend_range,
    build_polynomial,
    count_ext,
    count_points,
    correlation_scan,
    degree_pattern_scan,
    discriminant,
    factorize,
    integer_params,
    is_admissible,
    is_anomalous,
    is_on_curve,
    lift_point,
    m_value,
    model_over_q,
    model_over_radical,
    primes_up_to,
    reduce_curve,
    scalar_mul,
    torsion_certify,
    verify_phi_identity,
    verify_psi3_identity,
)
from cubicforge.fields import fp_of_rat

from oracles import naive_count_ext_field, naive_count_prime_field, rand_curve_coeffs

X1_11 = Curve(Fraction(-1, 3), Fraction(19, 108))


def _report(number: int, description: str, ok: bool = True):
    print(f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {number}: {description}"


def test_criterion_01_polynomial_reproduction():
    cp = build_polynomial(X1_11)
    expected = PolyQ([-3, 0, 19, 0, -6, 0, 0, 0, 1])
    _report(1, "slope polynomial equals x^8 - 6x^4 + 19x^2 - 3 exactly", cp.poly == expected)


def _disc_criterion(exponent: int) -> bool:
    rng = random.Random(2024)
    for _ in range(100):
        a, b = rand_curve_coeffs(rng, require_a_nonzero=True, bound=9)
        E = Curve(a, b)
        lhs = discriminant(build_polynomial(E).poly)
        rhs = -(2**24) * 3**21 * a**2 * (4 * a**3 + 27 * b**2) ** exponent
        if lhs != rhs:
            return False
    return True


@pytest.mark.xfail(
    strict=True,
    reason=(
        "unsatisfiable as printed: the source's closed form uses exponent 3 "
        "on (4a^3+27b^2) but the true discriminant of the monic octic carries "
        "exponent 4 (weighted degree 56, not 44); see /root/notes/decisions.md"
    ),
)
def test_criterion_02_disc_formula_as_stated():
    ok = _disc_criterion(3)
    _report(2, "disc(P) = -2^24*3^21*a^2*(4a^3+27b^2)^3 for 100 random curves (as stated)", ok)


def test_criterion_02_disc_formula_corrected_exponent():
    ok = _disc_criterion(4)
    _report(2, "disc(P) = -2^24*3^21*a^2*(4a^3+27b^2)^4 for 100 random curves (corrected)", ok)


def test_criterion_03_phi_identity():
    import sympy

    # stated oracle: re-derive the normalization symbolically first
    k, t, a, b = sympy.symbols("k t a b")
    x = (k**2 - t) / 3
    y = (k**4 + 3 * a - 2 * k**2 * t) / (6 * k)
    P = k**8 + 18 * a * k**4 + 108 * b * k**2 - 27 * a**2
    residue = sympy.expand(108 * k**2 * (x**3 + a * x + b - y**2) - (P - 4 * k**2 * t**3))
    assert residue == 0, "symbolic normalization 108k^2 failed"

    rng = random.Random(3)
    ok = True
    for _ in range(100):
        a_q, b_q = rand_curve_coeffs(rng, require_a_nonzero=True)
        ok = ok and verify_phi_identity(Curve(a_q, b_q))
    for _ in range(100):
        _, b_q = rand_curve_coeffs(rng, require_a_nonzero=False)
        if b_q == 0:
            continue
        ok = ok and verify_phi_identity(Curve(0, b_q))
    _report(3, "108k^2(x^3+ax+b-y^2) = P(k) - 4k^2t^3 for 100 random curves per branch", ok)


def test_criterion_04_psi3_identity():
    rng = random.Random(4)
    ok = True
    for _ in range(100):
        a_q, b_q = rand_curve_coeffs(rng, require_a_nonzero=True)
        ok = ok and verify_psi3_identity(Curve(a_q, b_q))
    for _ in range(100):
        _, b_q = rand_curve_coeffs(rng, require_a_nonzero=False)
        if b_q == 0:
            continue
        ok = ok and verify_psi3_identity(Curve(0, b_q))
    _report(4, "27*psi3(k^2/3) = P(k) generically and k^2*P(k) when a = 0", ok)


def test_criterion_05_lift_soundness():
    ok = True
    for x in range(1, 51):
        rec = lift_point(X1_11, x)
        model = (
            model_over_radical(X1_11, rec.m0)
            if not rec.trivial_class
            else model_over_q(X1_11)
        )
        ok = ok and rec.on_curve and is_on_curve(model, rec.point)
    E2 = Curve(0, 2)
    for x in range(1, 21):
        rec = lift_point(E2, x)
        model = (
            model_over_radical(E2, rec.m0) if not rec.trivial_class else model_over_q(E2)
        )
        ok = ok and rec.on_curve and is_on_curve(model, rec.point)
    first = lift_point(X1_11, 1)
    th = RadicalElem.theta(22)
    ok = ok and first.point == ((2 - th) / 6, -th / 6)
    ok = ok and first.m0 == 22 and first.cube_class.c == Fraction(1, 2)
    _report(5, "lifted points satisfy the curve equation exactly; x = 1 record matches", ok)


def test_criterion_06_infinite_order():
    ok = True
    for x in range(1, 11):
        rec = lift_point(X1_11, x)
        if rec.trivial_class:
            continue
        ok = ok and rec.verdict == TorsionVerdict.infinite()
    from cubicforge import INFINITY

    control = (RadicalElem(2, Fraction(-1, 3)), RadicalElem(2, Fraction(1, 2)))
    verdict = torsion_certify(X1_11, control)
    ok = ok and verdict == TorsionVerdict.torsion(5)
    ok = ok and scalar_mul(model_over_radical(X1_11, 2), 5, control) is INFINITY
    _report(6, "x = 1..10 lifts certify infinite order; embedded 5-torsion certifies torsion:5", ok)


def test_criterion_07_distinctness():
    batch = ascend_range(X1_11, integer_params(1, 50))
    ok = len(batch.distinct_m0) >= 25
    _report(7, f"x = 1..50 yields {len(batch.distinct_m0)} distinct m0 (>= 25 required)", ok)


def test_criterion_08_lemma_congruences():
    ok = True
    for x in range(1, 201):
        if x % 11 == 0:
            continue
        _, cls = m_value(X1_11, x)
        divisible = cls.m0 % 11 == 0
        ok = ok and divisible == (x % 11 in (1, 10))
        if divisible:
            ok = ok and dict(factorize(cls.m0).factors)[11] == 1
    _report(8, "11 | m0 iff x = +-1 (mod 11), with exponent exactly 1, for x = 1..200", ok)


def test_criterion_09_remark2_correlation():
    report = correlation_scan(X1_11, 500)
    scanned = {r.l for r in report.rows}
    expected = {l for l in primes_up_to(500) if l not in (2, 3, 11)}
    ok = scanned == expected and report.mismatch_count == 0
    _report(9, "root mod l iff 3 | #E(F_l) for all primes l <= 500 outside {2,3,11}", ok)


def test_criterion_10_degree_pattern_dichotomy():
    rows = degree_pattern_scan(X1_11, 500, residue_class=2)
    scanned = {l for l, _ in rows}
    expected = {l for l in primes_up_to(500) if l % 3 == 2 and l not in (2, 3, 11)}
    ok = scanned == expected and all(
        pattern in {(1, 1, 2, 2, 2), (8,)} for _, pattern in rows
    )
    _report(10, "P mod l factors as (1,1,2,2,2) or (8) for all l = 2 (mod 3), l <= 500", ok)


def test_criterion_11_divisor_anomaly():
    P = build_polynomial(X1_11).poly
    ok = True
    for x in range(1, 51):
        for q, _ in factorize(int(P(Fraction(x)))).factors:
            if q not in (2, 3, 11):
                ok = ok and is_anomalous(X1_11, q)
    _report(11, "every prime divisor of P(x) outside {2,3,11} is anomalous, x = 1..50", ok)


def test_criterion_12_counting_oracle_equivalence():
    rng = random.Random(12)
    ok = True
    for _ in range(5):
        a, b = rand_curve_coeffs(rng, require_a_nonzero=False, bound=6)
        E = Curve(a, b)
        for ell in primes_up_to(3000):
            if not is_admissible(E, ell):
                continue
            report = count_points(reduce_curve(E, ell))
            ok = ok and report.trace**2 <= 4 * ell
            ai, bi = fp_of_rat(a, ell), fp_of_rat(b, ell)
            for d in (1, 2, 3):
                if ell**d > 3000:
                    continue
                expected = (
                    naive_count_prime_field(ai, bi, ell)
                    if d == 1
                    else naive_count_ext_field(ai, bi, ell, d)
                )
                ok = ok and count_ext(report, d) == expected
    _report(12, "count_ext matches naive enumeration for all admissible l^d <= 3000, 5 curves", ok)
