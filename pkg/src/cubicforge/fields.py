"""Field arithmetic: Q(cbrt(m0)), prime fields F_l, and extensions F_{l^d}, d <= 3.

Extension fields are presented as F_l[x]/(g) for g an irreducible factor of
x^3 - m0 mod l, so reduction of radical elements is literal substitution.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import is_prime
from .errors import DivisionByZero, FieldMismatch, InvalidInput, PrimeExcluded
from .poly import PolyFp, roots_mod


class RadicalElem:
    """a0 + a1*r + a2*r^2 in Q(r), r^3 = m0, with m0 cube-free and >= 2.

    Perfect-cube values (m0 = 1) are plain Fractions by construction and are
    never represented here, so (1, r, r^2) is always a Q-basis and equality
    is coefficientwise.
    """

    __slots__ = ("m0", "a0", "a1", "a2")

    def __init__(self, m0: int, a0=0, a1=0, a2=0):
        if m0 < 2:
            raise InvalidInput(f"RadicalElem needs cube-free m0 >= 2, got {m0}")
        self.m0 = m0
        self.a0 = Fraction(a0)
        self.a1 = Fraction(a1)
        self.a2 = Fraction(a2)

    @classmethod
    def theta(cls, m0: int) -> "RadicalElem":
        return cls(m0, 0, 1, 0)

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2)

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0 and self.a2 == 0

    def is_rational(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    def _coerce(self, other):
        if isinstance(other, RadicalElem):
            if other.m0 != self.m0:
                raise FieldMismatch(f"mixed radicands {self.m0} and {other.m0}")
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalElem(self.m0, other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs() == o.coeffs()

    def __hash__(self):
        return hash((self.m0, self.coeffs()))

    def __neg__(self) -> "RadicalElem":
        return RadicalElem(self.m0, -self.a0, -self.a1, -self.a2)

    def __add__(self, other) -> "RadicalElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RadicalElem(self.m0, self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2)

    __radd__ = __add__

    def __sub__(self, other) -> "RadicalElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RadicalElem":
        return (-self) + other

    def __mul__(self, other) -> "RadicalElem":
        if isinstance(other, (int, Fraction)):
            return RadicalElem(
                self.m0, self.a0 * other, self.a1 * other, self.a2 * other
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.m0
        a0, a1, a2 = self.coeffs()
        b0, b1, b2 = o.coeffs()
        return RadicalElem(
            m,
            a0 * b0 + m * (a1 * b2 + a2 * b1),
            a0 * b1 + a1 * b0 + m * a2 * b2,
            a0 * b2 + a1 * b1 + a2 * b0,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Product of the three conjugates: a0^3 + m*a1^3 + m^2*a2^3 - 3m*a0*a1*a2."""
        a0, a1, a2 = self.coeffs()
        m = self.m0
        return a0**3 + m * a1**3 + m * m * a2**3 - 3 * m * a0 * a1 * a2

    def inverse(self) -> "RadicalElem":
        """Multiplicative inverse via the norm form."""
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of zero in Q(cbrt(m0))")
        a, b, c, m = self.a0, self.a1, self.a2, self.m0
        return RadicalElem(
            self.m0, (a * a - m * b * c) / n, (m * c * c - a * b) / n, (b * b - a * c) / n
        )

    def __truediv__(self, other) -> "RadicalElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RadicalElem":
        return self.inverse() * other

    def __pow__(self, e: int) -> "RadicalElem":
        if e < 0:
            return self.inverse() ** (-e)
        acc = RadicalElem(self.m0, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __str__(self):
        return f"{self.a0} + {self.a1}*r + {self.a2}*r^2 where r^3 = {self.m0}"

    def __repr__(self):
        return f"RadicalElem(m0={self.m0}, {self.a0}, {self.a1}, {self.a2})"

    def to_json(self) -> dict:
        return {"m0": self.m0, "coeffs": [str(c) for c in self.coeffs()]}


class FpElem:
    """Residue in F_l."""

    __slots__ = ("modulus", "value")

    def __init__(self, modulus: int, value: int = 0):
        self.modulus = modulus
        self.value = value % modulus

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise FieldMismatch(f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, int):
            return FpElem(self.modulus, other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __neg__(self):
        return FpElem(self.modulus, -self.value)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.modulus, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.modulus, self.value - o.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.modulus, self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise DivisionByZero(f"division by zero in F_{self.modulus}")
        return FpElem(self.modulus, self.value * pow(o.value, -1, self.modulus))

    def __repr__(self):
        return f"FpElem({self.value} mod {self.modulus})"


def fp_of_rat(q: Fraction, ell: int) -> int:
    """Image of a rational in F_l; the denominator must be a unit."""
    q = Fraction(q)
    if q.denominator % ell == 0:
        raise PrimeExcluded(f"{ell} divides the denominator of {q}")
    return q.numerator * pow(q.denominator, -1, ell) % ell


class ExtFieldElem:
    """Element of F_l[x]/(g), g irreducible of degree d in {1, 2, 3}."""

    __slots__ = ("modulus", "defining", "coeffs")

    def __init__(self, modulus: int, defining: PolyFp, coeffs=()):
        self.modulus = modulus
        self.defining = defining
        d = defining.degree()
        cs = [c % modulus for c in coeffs]
        if len(cs) > d:
            raise InvalidInput("coefficient vector longer than the field degree")
        self.coeffs = tuple(cs + [0] * (d - len(cs)))

    @property
    def degree(self) -> int:
        return self.defining.degree()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, ExtFieldElem):
            if other.modulus != self.modulus or other.defining != self.defining:
                raise FieldMismatch("mixed extension fields")
            return other
        if isinstance(other, int):
            return ExtFieldElem(self.modulus, self.defining, (other,))
        if isinstance(other, Fraction):
            return ExtFieldElem(
                self.modulus, self.defining, (fp_of_rat(other, self.modulus),)
            )
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.modulus, self.defining, self.coeffs))

    def __neg__(self):
        return ExtFieldElem(self.modulus, self.defining, [-c for c in self.coeffs])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtFieldElem(
            self.modulus,
            self.defining,
            [a + b for a, b in zip(self.coeffs, o.coeffs)],
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = PolyFp(self.modulus, self.coeffs) * PolyFp(self.modulus, o.coeffs)
        rem = prod % self.defining
        return ExtFieldElem(self.modulus, self.defining, rem.coeffs)

    __rmul__ = __mul__

    def inverse(self) -> "ExtFieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in the extension field")
        g, s, _ = poly_ext_gcd(PolyFp(self.modulus, self.coeffs), self.defining)
        # g is a nonzero constant since the defining polynomial is irreducible
        inv_const = pow(g.coeffs[0], -1, self.modulus)
        res = (s * inv_const) % self.defining
        return ExtFieldElem(self.modulus, self.defining, res.coeffs)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __repr__(self):
        return f"ExtFieldElem({list(self.coeffs)} mod {self.modulus}, g={self.defining!r})"


def poly_ext_gcd(a: PolyFp, b: PolyFp):
    """(g, s, t) with s*a + t*b = g over F_l[x]."""
    l = a.modulus
    one, zero = PolyFp(l, (1,)), PolyFp(l)
    old_r, r = a, b
    old_s, s = one, zero
    old_t, t = zero, one
    while not r.is_zero():
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def build_residue_fields(m0: int, ell: int) -> list[PolyFp]:
    """Irreducible factors of x^3 - m0 mod l, one per residue field.

    Degrees sum to 3; the multiset is (1,1,1), (1,2) or (3). Primes dividing
    3*m0 are refused (ramified or excluded).
    """
    if m0 < 2:
        raise InvalidInput(f"m0 must be >= 2, got {m0}")
    if not is_prime(ell):
        raise InvalidInput(f"{ell} is not prime")
    if (3 * m0) % ell == 0:
        raise PrimeExcluded(f"{ell} divides 3*m0 = {3 * m0}")
    f = PolyFp(ell, (-m0, 0, 0, 1))
    roots = sorted(roots_mod(f))
    if len(roots) == 3:
        return [PolyFp(ell, (-r, 1)) for r in roots]
    if len(roots) == 1:
        linear = PolyFp(ell, (-roots[0], 1))
        return [linear, f // linear]
    return [f]


def reduce_radical(u: RadicalElem, g: PolyFp, ell: int) -> ExtFieldElem:
    """Image of u under cbrt(m0) -> (x mod g); a ring homomorphism."""
    if not (PolyFp(ell, (-u.m0, 0, 0, 1)) % g).is_zero():
        raise InvalidInput(f"{g!r} does not divide x^3 - {u.m0} mod {ell}")
    coeffs = [fp_of_rat(c, ell) for c in u.coeffs()]
    rem = PolyFp(ell, coeffs) % g
    return ExtFieldElem(ell, g, rem.coeffs)


def fp_sqrt_table(ell: int) -> list[int]:
    """table[r] = number of y in F_l with y^2 = r."""
    table = [0] * ell
    for y in range(ell):
        table[y * y % ell] += 1
    return table
