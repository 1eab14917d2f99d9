"""Anomalous-prime diagnostics for the 3-torsion of a curve.

A good prime l is anomalous when 3 divides #E(F_l) (equivalently the reduced
curve has a rational 3-torsion point). For the slope polynomial P these
primes are exactly the ones where P acquires a root mod l, away from a small
exception set; the scans here measure that correlation and the factor-degree
dichotomy, and classify the prime divisors of a cube class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import factorize, legendre, prime_support, primes_up_to
from .curves import Curve, count_points, psi3, reduce_curve
from .errors import InvalidInput, InvalidParameter, PrimeExcluded, WrongBranch
from .poly import (
    Irreducibility,
    ddf_pattern,
    frobenius_roots,
    irreducibility_sieve,
    reduce_mod,
    roots_mod,
)

# Above this bound, anomaly is decided by 3-torsion existence instead of a
# full point count.
_NAIVE_COUNT_BOUND = 2000


def exception_set(E: Curve) -> frozenset[int]:
    """Primes excluded from the root/anomalous correlation.

    The support of 6 * num(a) * den(a) * num(4a^3+27b^2) * den(4a^3+27b^2)
    (of 6 * num(b) * den(b) when a = 0); always contains 2 and 3. Outside
    this set P reduces with full degree and E has good reduction.
    """
    out = {2, 3}
    if E.a == 0:
        out |= prime_support(E.b.numerator)
        out |= prime_support(E.b.denominator)
    else:
        quantity = 4 * E.a**3 + 27 * E.b**2
        out |= prime_support(E.a.numerator)
        out |= prime_support(E.a.denominator)
        out |= prime_support(quantity.numerator)
        out |= prime_support(quantity.denominator)
    return frozenset(out)


def is_anomalous(E: Curve, ell: int) -> bool:
    """True when 3 divides #E(F_l); requires good reduction at l.

    Small l is settled by the naive count. Large l uses the equivalent
    criterion (Cauchy both ways): 3 | #E(F_l) iff some root z of the
    3-division polynomial mod l has z^3 + a*z + b a nonzero square, i.e. the
    reduced curve carries a rational point of order 3.
    """
    model = reduce_curve(E, ell)
    if ell <= _NAIVE_COUNT_BOUND:
        return count_points(model).anomalous
    a, b = model.a.value, model.b.value
    for z in frobenius_roots(reduce_mod(psi3(E), ell)):
        rhs = (z * z * z + a * z + b) % ell
        if rhs != 0 and legendre(rhs, ell) == 1:
            return True
    return False


@dataclass(frozen=True)
class DivisorReport:
    """Classification of one prime divisor of a cube class."""

    l: int
    anomalous: bool
    exceptional: bool

    def to_json(self) -> dict:
        return {"l": self.l, "anomalous": self.anomalous, "exceptional": self.exceptional}


def classify_divisors(E: Curve, m: int) -> tuple[DivisorReport, ...]:
    """Anomaly status of every prime dividing m (empty for m = 1)."""
    if m == 1:
        return ()
    rows = []
    exc = exception_set(E)
    for q in sorted(prime_support(m)):
        if q in exc:
            rows.append(DivisorReport(q, False, True))
            continue
        try:
            rows.append(DivisorReport(q, is_anomalous(E, q), False))
        except PrimeExcluded:  # pragma: no cover - exception set covers bad primes
            rows.append(DivisorReport(q, False, True))
    return tuple(rows)


@dataclass(frozen=True)
class CorrelationRow:
    l: int
    has_root: bool
    anomalous: bool

    @property
    def agree(self) -> bool:
        return self.has_root == self.anomalous

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "has_root": self.has_root,
            "anomalous": self.anomalous,
            "agree": self.agree,
        }


@dataclass(frozen=True)
class CorrelationReport:
    """Per-prime comparison of 'P has a root mod l' against 'l is anomalous'."""

    rows: tuple[CorrelationRow, ...]
    irreducibility: Irreducibility

    @property
    def mismatches(self) -> tuple[CorrelationRow, ...]:
        return tuple(r for r in self.rows if not r.agree)

    @property
    def mismatch_count(self) -> int:
        return len(self.mismatches)

    @property
    def one_directional(self) -> bool:
        """Without established irreducibility only root => anomalous is claimed."""
        return self.irreducibility is not Irreducibility.IRREDUCIBLE


def correlation_scan(E: Curve, bound: int) -> CorrelationReport:
    """Compare roots of P mod l with anomaly of l for all good l <= bound."""
    from .ascent import Branch, build_polynomial

    cp = build_polynomial(E)
    if cp.branch is not Branch.GENERIC:
        raise WrongBranch("correlation scan requires the generic branch (a != 0)")
    exc = exception_set(E)
    status = irreducibility_sieve(cp.poly)
    rows = []
    for ell in primes_up_to(bound):
        if ell in exc:
            continue
        has_root = bool(roots_mod(reduce_mod(cp.poly, ell)))
        rows.append(CorrelationRow(ell, has_root, is_anomalous(E, ell)))
    return CorrelationReport(tuple(rows), status)


def degree_pattern_scan(
    E: Curve, bound: int, residue_class: int | None = None
) -> list[tuple[int, tuple[int, ...]]]:
    """Factor-degree patterns of P mod each good l <= bound.

    residue_class restricts to l = residue_class (mod 3); None scans all.
    """
    from .ascent import Branch, build_polynomial

    cp = build_polynomial(E)
    if cp.branch is not Branch.GENERIC:
        raise WrongBranch("degree patterns require the generic branch (a != 0)")
    if residue_class not in (None, 1, 2):
        raise InvalidInput(f"residue class mod 3 must be 1 or 2, got {residue_class}")
    exc = exception_set(E)
    out = []
    for ell in primes_up_to(bound):
        if ell in exc:
            continue
        if residue_class is not None and ell % 3 != residue_class:
            continue
        out.append((ell, ddf_pattern(reduce_mod(cp.poly, ell))))
    return out


@dataclass(frozen=True)
class ConditionIIReport:
    """Whether some good anomalous prime divides m."""

    m: int
    divisors: tuple[DivisorReport, ...]

    @property
    def satisfied(self) -> bool:
        return any(d.anomalous and not d.exceptional for d in self.divisors)

    @property
    def exceptional_only(self) -> bool:
        return bool(self.divisors) and all(d.exceptional for d in self.divisors)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "divisors": [d.to_json() for d in self.divisors],
            "satisfied": self.satisfied,
            "exceptional_only": self.exceptional_only,
        }


def condition_ii_check(E: Curve, m: int) -> ConditionIIReport:
    """Classify every prime divisor of a cube-free m >= 2."""
    if m < 2:
        raise InvalidInput(f"m must be >= 2, got {m}")
    if any(e >= 3 for _, e in factorize(m).factors):
        raise InvalidInput(f"{m} is not cube-free")
    return ConditionIIReport(m, classify_divisors(E, m))


class Lemma11Class(enum.Enum):
    DIVISIBLE_BY_11 = "divisible_by_11"
    PRIME_TO_11 = "prime_to_11"


def lemma11_classify(x: int) -> Lemma11Class:
    """For integer x coprime to 11: 11 | m0 exactly when x = +-1 (mod 11)."""
    if x % 11 == 0:
        raise InvalidParameter(f"{x} is divisible by 11")
    return (
        Lemma11Class.DIVISIBLE_BY_11
        if x % 11 in (1, 10)
        else Lemma11Class.PRIME_TO_11
    )
