"""The lifting construction: from a rational parameter x, a pure cubic field
Q(cbrt(m0)) and an explicit point on E over it.

The slope polynomial P(k) = k^8 + 18a*k^4 + 108b*k^2 - 27a^2 (k^6 + 108b when
a = 0) ties everything together: the auxiliary curve 4k^2*t^3 = P(k) maps to E
via (k, t) -> ((k^2 - t)/3, (k^4 + 3a - 2k^2*t)/(6k)), so x yields a point
with t = cbrt(P(x)/4x^2). The identity checks here confirm the algebra
symbolically for any given curve before the lifts are trusted.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arith import CubeClass, cubefree_rat
from .curves import (
    Curve,
    TorsionVerdict,
    is_on_curve,
    model_over_q,
    model_over_radical,
    psi3,
    torsion_certify,
)
from .errors import (
    DegenerateParameter,
    InternalError,
    InvalidInput,
    InvalidParameter,
    WrongBranch,
)
from .fields import RadicalElem
from .poly import BiPolyQ, PolyQ, discriminant

log = logging.getLogger(__name__)


class Branch(enum.Enum):
    GENERIC = "generic"
    SPECIAL_A_ZERO = "special"


@dataclass(frozen=True)
class ConstructionPoly:
    """The slope polynomial of a curve, with its branch tag."""

    curve: Curve
    poly: PolyQ
    branch: Branch


def build_polynomial(E: Curve) -> ConstructionPoly:
    """P(k) = k^8 + 18a*k^4 + 108b*k^2 - 27a^2, or k^6 + 108b when a = 0."""
    a, b = E.a, E.b
    if a == 0:
        poly = PolyQ([108 * b, 0, 0, 0, 0, 0, 1])
        return ConstructionPoly(E, poly, Branch.SPECIAL_A_ZERO)
    poly = PolyQ([-27 * a**2, 0, 108 * b, 0, 18 * a, 0, 0, 0, 1])
    return ConstructionPoly(E, poly, Branch.GENERIC)


def verify_disc_formula(E: Curve) -> bool:
    """disc(P) computed by resultants against -2^24 * 3^21 * a^2 * (4a^3+27b^2)^4.

    The closed form is forced by weights: disc of a monic octic has weighted
    degree 56 under (a, b) -> (u^4*a, u^6*b) with roots of weight u.
    """
    if E.a == 0:
        raise WrongBranch("the discriminant formula needs a != 0")
    cp = build_polynomial(E)
    expected = -(2**24) * 3**21 * E.a**2 * (4 * E.a**3 + 27 * E.b**2) ** 4
    return discriminant(cp.poly) == expected


def _phi_images(a: Fraction) -> tuple[BiPolyQ, BiPolyQ]:
    """Denominator-cleared numerators of the map (k,t) -> (x,y).

    x = X/3 with X = k^2 - t, and y = N/(6k) with N = k^4 + 3a - 2k^2*t.
    """
    k_sq = BiPolyQ.monomial(2, 0)
    t = BiPolyQ.monomial(0, 1)
    big_x = k_sq - t
    big_n = BiPolyQ.monomial(4, 0) + BiPolyQ.monomial(0, 0, 3 * a) - 2 * BiPolyQ.monomial(2, 1)
    return big_x, big_n


def verify_phi_identity(E: Curve) -> bool:
    """Check 108k^2*(x^3 + a*x + b - y^2) = P(k) - 4k^2*t^3 in Q[k, t].

    Both sides are cleared of denominators; the a = 0 branch checks the same
    identity divided by k^2.
    """
    cp = build_polynomial(E)
    a, b = E.a, E.b
    k_sq = BiPolyQ.monomial(2, 0)
    big_x, big_n = _phi_images(a)
    if cp.branch is Branch.GENERIC:
        lhs = 4 * k_sq * big_x**3 + 36 * a * k_sq * big_x + 108 * b * k_sq - 3 * big_n**2
        rhs = BiPolyQ.from_poly_in_k(cp.poly) - 4 * BiPolyQ.monomial(2, 3)
    else:
        # y = k*(k^2 - 2t)/6 once a = 0, so no pole at k = 0 remains
        ky = BiPolyQ.monomial(1, 0) * (k_sq - 2 * BiPolyQ.monomial(0, 1))
        lhs = 4 * big_x**3 + BiPolyQ.monomial(0, 0, 108 * b) - 3 * ky**2
        rhs = BiPolyQ.from_poly_in_k(cp.poly) - 4 * BiPolyQ.monomial(0, 3)
    return lhs == rhs


def verify_psi3_identity(E: Curve) -> bool:
    """Check 27*psi3(k^2/3) = P(k) (generic) or k^2*P(k) (a = 0).

    Roots of P are exactly the tangent slopes at the nontrivial 3-torsion
    points, whose x-coordinates are the roots of psi3.
    """
    cp = build_polynomial(E)
    lhs = 27 * psi3(E).compose(PolyQ([0, 0, Fraction(1, 3)]))
    if cp.branch is Branch.GENERIC:
        rhs = cp.poly
    else:
        rhs = PolyQ.monomial(2) * cp.poly
    return lhs == rhs


def m_value(E: Curve, x) -> tuple[Fraction, CubeClass]:
    """m_x = P(x)/4x^2 (generic) or P(x)/4 (a = 0), with its cube-free class."""
    x = Fraction(x)
    cp = build_polynomial(E)
    if cp.branch is Branch.GENERIC and x == 0:
        raise InvalidParameter("x = 0 is not admissible in the generic branch")
    value = cp.poly(x)
    if value == 0:
        raise DegenerateParameter(f"P({x}) = 0")
    if cp.branch is Branch.GENERIC:
        m_x = value / (4 * x * x)
    else:
        m_x = value / 4
    return m_x, cubefree_rat(m_x)


@dataclass(frozen=True)
class AscentRecord:
    """One lifted point: parameter, cube class, point, and its verdicts."""

    x: Fraction
    m_x: Fraction
    cube_class: CubeClass
    point: tuple
    on_curve: bool
    verdict: TorsionVerdict
    anomalous_divisors: tuple

    @property
    def m0(self) -> int:
        return self.cube_class.m0

    @property
    def trivial_class(self) -> bool:
        """True when m_x is a perfect cube, so the point never left E(Q)."""
        return self.cube_class.m0 == 1

    def to_json(self) -> dict:
        return {
            "x": str(self.x),
            "m_x": str(self.m_x),
            "m0": self.cube_class.m0,
            "c": str(self.cube_class.c),
            "point": {
                "x": _coord_json(self.point[0], self.cube_class.m0),
                "y": _coord_json(self.point[1], self.cube_class.m0),
            },
            "on_curve": self.on_curve,
            "verdict": self.verdict.label(),
            "anomalous_divisors": [
                {"l": d.l, "anomalous": d.anomalous, "exceptional": d.exceptional}
                for d in self.anomalous_divisors
            ],
        }


def _coord_json(coord, m0: int) -> dict:
    if isinstance(coord, RadicalElem):
        return coord.to_json()
    return {"m0": m0, "coeffs": [str(Fraction(coord)), "0", "0"]}


def lift_point(E: Curve, x) -> AscentRecord:
    """Lift the parameter x to a point on E over Q(cbrt(m0)).

    t is c*cbrt(m0) (plain c when m_x is a perfect cube); the emitted point is
    ((x^2 - t)/3, (x^4 + 3a - 2x^2*t)/(6x)). The curve equation and t^3 = m_x
    are asserted exactly; the torsion verdict and the anomaly classification
    of the primes dividing m0 are attached.
    """
    from .anomaly import classify_divisors

    x = Fraction(x)
    m_x, cube_class = m_value(E, x)
    m0, c = cube_class.m0, cube_class.c
    if m0 == 1:
        t = c
        model = model_over_q(E)
    else:
        t = RadicalElem(m0, 0, c, 0)
        model = model_over_radical(E, m0)
    if t**3 != m_x:  # pragma: no cover - algebraically impossible
        raise InternalError(f"t^3 != m_x at x = {x}")
    x_e = (x * x - t) / 3
    if E.a == 0:
        y_e = (x**3 - 2 * x * t) / 6
    else:
        y_e = (x**4 + 3 * E.a - 2 * x * x * t) / (6 * x)
    point = (x_e, y_e)
    if not is_on_curve(model, point):  # pragma: no cover - algebraically impossible
        raise InternalError(f"lifted point off the curve at x = {x}")
    verdict = torsion_certify(E, point)
    divisors = classify_divisors(E, m0)
    return AscentRecord(x, m_x, cube_class, point, True, verdict, divisors)


@dataclass(frozen=True)
class AscentBatch:
    """Records for a parameter sweep plus the skipped parameters."""

    records: tuple[AscentRecord, ...]
    skipped: tuple[tuple[Fraction, str], ...]

    @property
    def distinct_m0(self) -> tuple[int, ...]:
        return tuple(sorted({r.cube_class.m0 for r in self.records}))

    @property
    def infinite_count(self) -> int:
        return sum(1 for r in self.records if not r.verdict.is_torsion)

    @property
    def trivial_count(self) -> int:
        return sum(1 for r in self.records if r.trivial_class)


def _lift_or_skip(E: Curve, x: Fraction):
    try:
        return lift_point(E, x)
    except (InvalidParameter, DegenerateParameter) as exc:
        log.info("skipping x = %s: %s", x, exc)
        return (x, str(exc))


def ascend_range(E: Curve, params: Iterable, jobs: int = 1) -> AscentBatch:
    """Lift every admissible parameter, in the given order.

    Parameters where the lift degenerates (x = 0 in the generic branch, or
    P(x) = 0) are skipped with a notice rather than aborting the batch.
    jobs > 1 fans the lifts out to a thread pool; output order is unchanged.
    """
    xs = [Fraction(x) for x in params]
    if not xs:
        raise InvalidInput("empty parameter range")
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda x: _lift_or_skip(E, x), xs))
    else:
        results = [_lift_or_skip(E, x) for x in xs]
    records = tuple(r for r in results if isinstance(r, AscentRecord))
    skipped = tuple(r for r in results if not isinstance(r, AscentRecord))
    return AscentBatch(records, skipped)


def integer_params(lo: int, hi: int) -> list[Fraction]:
    """Integers lo..hi inclusive."""
    return [Fraction(i) for i in range(lo, hi + 1)]


def rational_params(height: int) -> list[Fraction]:
    """All p/q in lowest terms with 0 < p, q <= height, both signs of p."""
    from math import gcd

    out = []
    for q in range(1, height + 1):
        for p in range(1, height + 1):
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
                out.append(Fraction(-p, q))
    return out
