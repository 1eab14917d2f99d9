"""Short Weierstrass curves: group law over any exact field, reduction mod
primes, naive point counts, Frobenius power-sum extension counts, the
3-division polynomial, and torsion certification over pure cubic fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, is_prime, next_prime, prime_to_part
from .errors import (
    InternalError,
    InvalidInput,
    OracleExhausted,
    PrimeExcluded,
    SingularCurve,
)
from .fields import (
    ExtFieldElem,
    FpElem,
    RadicalElem,
    build_residue_fields,
    fp_of_rat,
    fp_sqrt_table,
    reduce_radical,
)
from .poly import PolyFp, PolyQ

_COUNT_CAP = 10**5


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "Infinity"


INFINITY = _Infinity()


class Curve:
    """y^2 = x^3 + a*x + b over Q with 4a^3 + 27b^2 != 0."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = Fraction(a)
        self.b = Fraction(b)
        if 4 * self.a**3 + 27 * self.b**2 == 0:
            raise SingularCurve(f"4a^3 + 27b^2 = 0 for a={self.a}, b={self.b}")

    @property
    def disc(self) -> Fraction:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def __eq__(self, other):
        return isinstance(other, Curve) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Curve(a={self.a}, b={self.b})"


class WeierstrassModel:
    """Curve coefficients carried into some exact field; used by the group law."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b


def model_over_q(E: Curve) -> WeierstrassModel:
    return WeierstrassModel(E.a, E.b)

def model_over_radical(E: Curve, m0: int) -> WeierstrassModel:
    return WeierstrassModel(RadicalElem(m0, E.a), RadicalElem(m0, E.b))

def model_over_ext(E: Curve, ell: int, g: PolyFp) -> WeierstrassModel:
    return WeierstrassModel(
        ExtFieldElem(ell, g, (fp_of_rat(E.a, ell),)),
        ExtFieldElem(ell, g, (fp_of_rat(E.b, ell),)),
    )


def point_neg(P):
    if P is INFINITY:
        return P
    x, y = P
    return (x, -y)


def point_add(model: WeierstrassModel, P, Q):
    """Chord-tangent addition; INFINITY is the identity."""
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return INFINITY
        slope = (3 * x1 * x1 + model.a) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - x1 - x2
    y3 = slope * (x1 - x3) - y1
    return (x3, y3)


def scalar_mul(model: WeierstrassModel, n: int, P):
    """nP by double-and-add; (-n)P = n(-P)."""
    if n < 0:
        return scalar_mul(model, -n, point_neg(P))
    result = INFINITY
    addend = P
    while n:
        if n & 1:
            result = point_add(model, result, addend)
        addend = point_add(model, addend, addend)
        n >>= 1
    return result


def is_on_curve(model: WeierstrassModel, P) -> bool:
    if P is INFINITY:
        return True
    x, y = P
    return y * y == x * x * x + model.a * x + model.b


@dataclass(frozen=True)
class PrimeReport:
    """Exact point count of a reduced curve over F_l."""

    l: int
    count: int
    trace: int
    anomalous: bool

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "count": self.count,
            "trace": self.trace,
            "anomalous": self.anomalous,
        }


def is_admissible(E: Curve, ell: int) -> bool:
    """Good prime for naive reduction: l coprime to 6, denominators, num(disc)."""
    if ell in (2, 3):
        return False
    if E.a.denominator % ell == 0 or E.b.denominator % ell == 0:
        return False
    return E.disc.numerator % ell != 0


def reduce_curve(E: Curve, ell: int) -> WeierstrassModel:
    """Coefficientwise reduction mod an admissible prime."""
    if not is_prime(ell):
        raise InvalidInput(f"{ell} is not prime")
    if ell in (2, 3):
        raise PrimeExcluded(f"{ell} divides 6")
    if E.a.denominator % ell == 0 or E.b.denominator % ell == 0:
        raise PrimeExcluded(f"{ell} divides a coefficient denominator")
    if E.disc.numerator % ell == 0:
        raise PrimeExcluded(f"{ell} divides the discriminant numerator")
    return WeierstrassModel(
        FpElem(ell, fp_of_rat(E.a, ell)), FpElem(ell, fp_of_rat(E.b, ell))
    )


def reduce_point(P, ell: int):
    """Reduction of a rational affine point mod l (denominators must be units)."""
    if P is INFINITY:
        return INFINITY
    x, y = P
    return (FpElem(ell, fp_of_rat(x, ell)), FpElem(ell, fp_of_rat(y, ell)))


def count_points(model: WeierstrassModel) -> PrimeReport:
    """#E(F_l) by enumeration of x with a precomputed square table."""
    if not isinstance(model.a, FpElem):
        raise InvalidInput("count_points expects a curve over a prime field")
    ell = model.a.modulus
    if ell > _COUNT_CAP:
        raise InvalidInput(f"naive counting capped at l <= {_COUNT_CAP}")
    table = fp_sqrt_table(ell)
    a, b = model.a.value, model.b.value
    count = 1
    for x in range(ell):
        count += table[(x * x * x + a * x + b) % ell]
    trace = ell + 1 - count
    if trace * trace > 4 * ell:  # pragma: no cover
        raise InternalError(f"Hasse bound violated at l={ell}: count={count}")
    return PrimeReport(ell, count, trace, count % 3 == 0)


def count_ext(report: PrimeReport, d: int) -> int:
    """#E(F_{l^d}) from the trace via power sums of the Frobenius eigenvalues."""
    t, ell = report.trace, report.l
    if d == 1:
        s = t
    elif d == 2:
        s = t * t - 2 * ell
    elif d == 3:
        s = t**3 - 3 * ell * t
    else:
        raise InvalidInput(f"extension degree must be 1, 2 or 3, got {d}")
    return ell**d + 1 - s


def psi3(E: Curve) -> PolyQ:
    """3-division polynomial 3X^4 + 6aX^2 + 12bX - a^2."""
    return PolyQ([-E.a**2, 12 * E.b, 6 * E.a, 0, 3])


@dataclass(frozen=True)
class TorsionVerdict:
    """Result of torsion certification: exact order n, or infinite order."""

    order: int | None

    @classmethod
    def torsion(cls, n: int) -> "TorsionVerdict":
        return cls(n)

    @classmethod
    def infinite(cls) -> "TorsionVerdict":
        return cls(None)

    @property
    def is_torsion(self) -> bool:
        return self.order is not None

    def label(self) -> str:
        return "infinite" if self.order is None else f"torsion:{self.order}"


def point_order(model: WeierstrassModel, P, group_order: int) -> int:
    """Exact order of P in a finite group of known order."""
    if P is INFINITY:
        return 1
    o = group_order
    for q, _ in factorize(group_order).factors:
        while o % q == 0 and scalar_mul(model, o // q, P) is INFINITY:
            o //= q
    return o


def _coordinate_denominators(P) -> list[int]:
    out = []
    for coord in P:
        if isinstance(coord, RadicalElem):
            out.extend(c.denominator for c in coord.coeffs())
        else:
            out.append(Fraction(coord).denominator)
    return out


MAX_TORSION_EXPONENT = 30


def torsion_certify(
    E: Curve, R, *, prime_bound: int = 1000, min_primes: int = 2
) -> TorsionVerdict:
    """Certify R as exact torsion of some order <= 30, or of infinite order.

    Stage 1 reduces R at admissible primes into every residue field of
    Q(cbrt(m0)) and keeps only orders whose prime-to-l part divides the order
    of the reduced point (prime-to-l torsion injects under good reduction).
    Stage 2 checks each surviving candidate by exact scalar multiplication,
    so a torsion verdict is always an exact certificate.
    """
    if R is INFINITY:
        return TorsionVerdict.torsion(1)
    x, _ = R
    if isinstance(x, RadicalElem):
        m0 = x.m0
        model = model_over_radical(E, m0)
    else:
        m0 = None
        model = model_over_q(E)
    if not is_on_curve(model, R):
        raise InvalidInput("torsion_certify: point is not on the curve")

    denominators = _coordinate_denominators(R)
    candidates = set(range(2, MAX_TORSION_EXPONENT + 1))
    used = 0
    ell = 3
    while used < min_primes:
        ell = next_prime(ell)
        if ell > prime_bound:
            raise OracleExhausted(
                f"fewer than {min_primes} admissible primes below {prime_bound}"
            )
        if not is_admissible(E, ell):
            continue
        if m0 is not None and m0 % ell == 0:
            continue
        if any(d % ell == 0 for d in denominators):
            continue
        fp_model = reduce_curve(E, ell)
        report = count_points(fp_model)
        if m0 is None:
            reduced = reduce_point(R, ell)
            orders = [point_order(fp_model, reduced, report.count)]
        else:
            orders = []
            for g in build_residue_fields(m0, ell):
                ext_model = model_over_ext(E, ell, g)
                reduced = (
                    reduce_radical(R[0], g, ell),
                    reduce_radical(R[1], g, ell),
                )
                group_order = count_ext(report, g.degree())
                orders.append(point_order(ext_model, reduced, group_order))
        for o in orders:
            candidates = {n for n in candidates if o % prime_to_part(n, ell) == 0}
        used += 1

    for n in sorted(candidates):
        if scalar_mul(model, n, R) is INFINITY:
            return TorsionVerdict.torsion(n)
    return TorsionVerdict.infinite()
