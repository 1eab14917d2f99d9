from fractions import Fraction

import pytest

from cubicforge import (
    Curve,
    Irreducibility,
    InvalidInput,
    InvalidParameter,
    Lemma11Class,
    PrimeExcluded,
    classify_divisors,
    condition_ii_check,
    correlation_scan,
    degree_pattern_scan,
    exception_set,
    is_anomalous,
    lemma11_classify,
    m_value,
    primes_up_to,
)
from cubicforge import anomaly
from cubicforge.curves import count_points, is_admissible, reduce_curve

from oracles import rand_curve_coeffs


def test_exception_set_examples(x1_11):
    assert exception_set(x1_11) == {2, 3, 11}
    assert exception_set(Curve(1, 1)) == {2, 3, 31}
    assert exception_set(Curve(0, 2)) == {2, 3}


def test_exception_set_contains_2_and_3(rng):
    for _ in range(40):
        a, b = rand_curve_coeffs(rng, require_a_nonzero=False)
        assert {2, 3} <= exception_set(Curve(a, b))


def test_exception_set_covers_bad_reduction(rng):
    # every prime outside the set admits reduction of both E and P
    for _ in range(30):
        a, b = rand_curve_coeffs(rng)
        E = Curve(a, b)
        exc = exception_set(E)
        for ell in primes_up_to(100):
            if ell not in exc:
                assert is_admissible(E, ell)


def test_is_anomalous_examples(x1_11):
    assert is_anomalous(Curve(0, 1), 5)
    assert not is_anomalous(x1_11, 5)
    with pytest.raises(PrimeExcluded):
        is_anomalous(x1_11, 2)


def test_is_anomalous_large_prime_path_agrees(x1_11, monkeypatch):
    for ell in primes_up_to(600):
        if not is_admissible(x1_11, ell):
            continue
        naive = count_points(reduce_curve(x1_11, ell)).anomalous
        monkeypatch.setattr(anomaly, "_NAIVE_COUNT_BOUND", 1)
        assert is_anomalous(x1_11, ell) == naive
        monkeypatch.undo()


def test_is_anomalous_beyond_count_cap(x1_11):
    # 2081 divides P(3); far above the cap the psi3 route must still work
    big = 1000003
    result = is_anomalous(x1_11, big)
    assert isinstance(result, bool)
    assert is_anomalous(x1_11, 2081)


def test_correlation_scan_x1_11(x1_11):
    report = correlation_scan(x1_11, 500)
    assert report.mismatch_count == 0
    assert report.irreducibility is Irreducibility.IRREDUCIBLE
    assert not report.one_directional
    rows = {r.l: r for r in report.rows}
    assert len(rows) == 92  # 95 primes <= 500 minus {2, 3, 11}
    assert rows[233].has_root and rows[233].anomalous
    assert not rows[5].has_root and not rows[5].anomalous
    assert all(r.agree for r in report.rows)


def test_correlation_scan_requires_generic():
    from cubicforge.errors import WrongBranch

    with pytest.raises(WrongBranch):
        correlation_scan(Curve(0, 2), 100)


def test_correlation_row_json(x1_11):
    report = correlation_scan(x1_11, 20)
    doc = report.rows[0].to_json()
    assert set(doc) == {"l", "has_root", "anomalous", "agree"}


def test_degree_pattern_dichotomy(x1_11):
    rows = degree_pattern_scan(x1_11, 500, residue_class=2)
    assert rows, "expected nonempty scan"
    assert {p for _, p in rows} <= {(1, 1, 2, 2, 2), (8,)}
    assert (5, (8,)) in rows


def test_degree_pattern_consistent_with_roots(x1_11):
    report = {r.l: r.has_root for r in correlation_scan(x1_11, 300).rows}
    for ell, pattern in degree_pattern_scan(x1_11, 300):
        assert (1 in pattern) == report[ell]


def test_degree_pattern_bad_class_rejected(x1_11):
    with pytest.raises(InvalidInput):
        degree_pattern_scan(x1_11, 100, residue_class=3)


def test_classify_divisors(x1_11):
    rows = classify_divisors(x1_11, 932)
    assert [(d.l, d.anomalous, d.exceptional) for d in rows] == [
        (2, False, True),
        (233, True, False),
    ]
    assert classify_divisors(x1_11, 1) == ()


def test_condition_ii_examples(x1_11):
    rep = condition_ii_check(x1_11, 932)
    assert rep.satisfied and not rep.exceptional_only
    rep22 = condition_ii_check(x1_11, 22)
    assert not rep22.satisfied and rep22.exceptional_only
    rep35 = condition_ii_check(x1_11, 35)
    assert not rep35.satisfied and not rep35.exceptional_only
    assert [(d.l, d.anomalous) for d in rep35.divisors] == [(5, False), (7, False)]


def test_condition_ii_validation(x1_11):
    with pytest.raises(InvalidInput):
        condition_ii_check(x1_11, 1)
    with pytest.raises(InvalidInput):
        condition_ii_check(x1_11, 8)  # 2^3 is not cube-free


def test_condition_ii_json(x1_11):
    doc = condition_ii_check(x1_11, 932).to_json()
    assert doc["m"] == 932
    assert doc["satisfied"] is True
    assert doc["exceptional_only"] is False
    assert {"l": 233, "anomalous": True, "exceptional": False} in doc["divisors"]


def test_divisor_soundness(x1_11):
    """Every good prime dividing P(x) for integer x is anomalous."""
    from cubicforge import build_polynomial, factorize

    P = build_polynomial(x1_11).poly
    for x in range(1, 51):
        value = int(P(Fraction(x)))
        for q, _ in factorize(value).factors:
            if q in (2, 3, 11):
                continue
            assert is_anomalous(x1_11, q), f"x={x}, divisor {q}"


def test_lemma11_classify_examples():
    assert lemma11_classify(1) is Lemma11Class.DIVISIBLE_BY_11
    assert lemma11_classify(2) is Lemma11Class.PRIME_TO_11
    assert lemma11_classify(12) is Lemma11Class.DIVISIBLE_BY_11
    assert lemma11_classify(-1) is Lemma11Class.DIVISIBLE_BY_11
    with pytest.raises(InvalidParameter):
        lemma11_classify(22)


def test_lemma11_agrees_with_m_value(x1_11):
    for x in range(1, 201):
        if x % 11 == 0:
            continue
        _, cls = m_value(x1_11, x)
        expected = (
            Lemma11Class.DIVISIBLE_BY_11
            if cls.m0 % 11 == 0
            else Lemma11Class.PRIME_TO_11
        )
        assert lemma11_classify(x) is expected
