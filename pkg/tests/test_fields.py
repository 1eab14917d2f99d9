from fractions import Fraction

import pytest

from cubicforge import (
    DivisionByZero,
    ExtFieldElem,
    FieldMismatch,
    FpElem,
    InvalidInput,
    PolyFp,
    PrimeExcluded,
    RadicalElem,
    build_residue_fields,
    reduce_radical,
)
from cubicforge.fields import fp_of_rat, fp_sqrt_table, poly_ext_gcd

from oracles import rand_rat


def rand_radical(rng, m0, bound=9):
    return RadicalElem(m0, rand_rat(rng, bound), rand_rat(rng, bound), rand_rat(rng, bound))


def test_theta_times_theta_squared():
    th = RadicalElem.theta(2)
    assert th * th * th == 2
    assert th * (th * th) == RadicalElem(2, 2, 0, 0)


def test_difference_of_squares():
    th = RadicalElem.theta(7)
    one = RadicalElem(7, 1)
    assert (one + th) * (one - th) == RadicalElem(7, 1, 0, -1)


def test_half_theta_squared():
    th = RadicalElem.theta(22)
    assert (th / 2) * (th / 2) == RadicalElem(22, 0, 0, Fraction(1, 4))


def test_inverse_examples():
    th = RadicalElem.theta(2)
    assert th.inverse() == RadicalElem(2, 0, 0, Fraction(1, 2))
    assert RadicalElem(2, 5).inverse() == RadicalElem(2, Fraction(1, 5))
    assert (1 + th).inverse() == RadicalElem(
        2, Fraction(1, 3), Fraction(-1, 3), Fraction(1, 3)
    )


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        RadicalElem(2).inverse()


def test_norm_examples():
    assert RadicalElem.theta(22).norm() == 22
    assert RadicalElem(5, 7).norm() == 343
    assert (1 + RadicalElem.theta(2)).norm() == 3


def test_norm_multiplicative(rng):
    for _ in range(100):
        m0 = rng.choice([2, 3, 22, 30])
        u, v = rand_radical(rng, m0), rand_radical(rng, m0)
        assert (u * v).norm() == u.norm() * v.norm()


def test_mul_ring_axioms(rng):
    for _ in range(100):
        m0 = rng.choice([2, 5, 22])
        u, v, w = (rand_radical(rng, m0) for _ in range(3))
        assert u * v == v * u
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_inverse_round_trip(rng):
    one = 1
    for _ in range(100):
        m0 = rng.choice([2, 6, 22, 44])
        u = rand_radical(rng, m0)
        if u.is_zero():
            continue
        assert u * u.inverse() == one
        assert u / u == one


def test_rational_coercion_arithmetic():
    th = RadicalElem.theta(22)
    x = Fraction(1) - th / 2
    assert x == RadicalElem(22, 1, Fraction(-1, 2), 0)
    assert 3 * th == RadicalElem(22, 0, 3, 0)
    assert (6 / (2 + 0 * th)) == RadicalElem(22, 3)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        RadicalElem.theta(2) + RadicalElem.theta(3)


def test_m0_one_banned():
    with pytest.raises(InvalidInput):
        RadicalElem(1, 1)


def test_radical_text_format():
    th = RadicalElem(22, Fraction(1, 3), Fraction(-1, 6), 0)
    assert str(th) == "1/3 + -1/6*r + 0*r^2 where r^3 = 22"
    assert th.to_json() == {"m0": 22, "coeffs": ["1/3", "-1/6", "0"]}


def test_fp_elem_arithmetic():
    a, b = FpElem(7, 3), FpElem(7, 5)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert a / b == FpElem(7, 2)
    assert -a == 4
    with pytest.raises(DivisionByZero):
        a / FpElem(7, 0)
    with pytest.raises(FieldMismatch):
        a + FpElem(11, 1)


def test_fp_of_rat():
    assert fp_of_rat(Fraction(1, 2), 5) == 3
    assert fp_of_rat(Fraction(-1, 3), 5) == 3
    with pytest.raises(PrimeExcluded):
        fp_of_rat(Fraction(1, 5), 5)


def test_fp_sqrt_table():
    assert fp_sqrt_table(5) == [1, 2, 0, 0, 2]
    assert sum(fp_sqrt_table(13)) == 13


def test_residue_fields_22_mod_5():
    fields = build_residue_fields(22, 5)
    assert [g.degree() for g in fields] == [1, 2]
    assert fields[0] == PolyFp(5, (-3, 1))  # 3^3 = 27 = 2 = 22 mod 5


def test_residue_fields_2_mod_31():
    fields = build_residue_fields(2, 31)
    assert [g.degree() for g in fields] == [1, 1, 1]
    roots = sorted(-g[0] % 31 for g in fields)
    assert 4 in roots  # 4^3 = 64 = 2 mod 31
    assert all(pow(r, 3, 31) == 2 for r in roots)


def test_residue_fields_ramified_excluded():
    with pytest.raises(PrimeExcluded):
        build_residue_fields(22, 3)
    with pytest.raises(PrimeExcluded):
        build_residue_fields(22, 11)


def test_residue_fields_degree_sum(rng):
    for _ in range(60):
        m0 = rng.choice([2, 3, 5, 6, 7, 10, 22, 44, 932])
        ell = rng.choice([5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
        if (3 * m0) % ell == 0:
            continue
        degrees = [g.degree() for g in build_residue_fields(m0, ell)]
        assert sum(degrees) == 3
        assert tuple(sorted(degrees)) in {(1, 1, 1), (1, 2), (3,)}
        if ell % 3 == 2:
            assert tuple(degrees) == (1, 2)


def test_reduce_radical_examples():
    g = PolyFp(5, (-3, 1))
    th = RadicalElem.theta(22)
    assert reduce_radical(th, g, 5) == ExtFieldElem(5, g, (3,))
    assert reduce_radical(RadicalElem(22, Fraction(1, 2)), g, 5) == ExtFieldElem(5, g, (3,))
    assert reduce_radical(th / 2, g, 5) == ExtFieldElem(5, g, (4,))


def test_reduce_radical_denominator_guard():
    g = PolyFp(5, (-3, 1))
    with pytest.raises(PrimeExcluded):
        reduce_radical(RadicalElem(22, Fraction(1, 5)), g, 5)


def test_reduce_radical_wrong_field_guard():
    g = PolyFp(5, (-1, 1))  # x - 1 does not divide x^3 - 22 mod 5
    with pytest.raises(InvalidInput):
        reduce_radical(RadicalElem.theta(22), g, 5)


def test_reduce_radical_is_homomorphism(rng):
    for _ in range(60):
        m0 = rng.choice([2, 22, 30])
        ell = rng.choice([5, 7, 13, 17, 19, 23])
        if (3 * m0) % ell == 0:
            continue
        u = rand_radical(rng, m0, bound=6)
        v = rand_radical(rng, m0, bound=6)
        if any(c.denominator % ell == 0 for c in u.coeffs() + v.coeffs()):
            continue
        for g in build_residue_fields(m0, ell):
            ru, rv = reduce_radical(u, g, ell), reduce_radical(v, g, ell)
            assert reduce_radical(u * v, g, ell) == ru * rv
            assert reduce_radical(u + v, g, ell) == ru + rv


def test_ext_field_inverse(rng):
    for _ in range(80):
        m0 = rng.choice([2, 22])
        ell = rng.choice([5, 7, 13])
        if (3 * m0) % ell == 0:
            continue
        for g in build_residue_fields(m0, ell):
            coeffs = [rng.randrange(ell) for _ in range(g.degree())]
            u = ExtFieldElem(ell, g, coeffs)
            if u.is_zero():
                continue
            assert u * u.inverse() == 1
            assert (1 / u) * u == 1


def test_ext_field_zero_inverse():
    g = PolyFp(5, (-3, 1))
    with pytest.raises(DivisionByZero):
        ExtFieldElem(5, g, (0,)).inverse()


def test_poly_ext_gcd_bezout(rng):
    for _ in range(60):
        ell = rng.choice([5, 7, 11])
        a = PolyFp(ell, [rng.randrange(ell) for _ in range(5)])
        b = PolyFp(ell, [rng.randrange(ell) for _ in range(4)])
        if a.is_zero() or b.is_zero():
            continue
        g, s, t = poly_ext_gcd(a, b)
        assert s * a + t * b == g
