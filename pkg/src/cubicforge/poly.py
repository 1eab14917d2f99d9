"""Exact polynomial algebra over Q and over prime fields.

PolyQ is dense with Fraction coefficients (constant term first), PolyFp is
dense over F_l, BiPolyQ is a sparse bivariate polynomial in (k, t) over Q.
Resultants are computed fraction-free via Bareiss on the Sylvester matrix.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Iterator

from .arith import factorize, is_prime, next_prime
from .errors import InvalidInput, PrimeExcluded


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyQ:
    """Univariate polynomial over Q, coefficients ascending (constant first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyQ":
        return cls([0] * degree + [coeff])

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        if not self.coeffs:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "PolyQ":
        return PolyQ([-c for c in self.coeffs])

    def __add__(self, other: "PolyQ") -> "PolyQ":
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "PolyQ") -> "PolyQ":
        """self(inner(x)) by Horner over polynomials."""
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyQ([c])
        return acc

    def __repr__(self):
        return f"PolyQ({poly_to_text(self)})"


def poly_to_text(p: PolyQ) -> str:
    """Human form 'x^8 - 6*x^4 + 19*x^2 - 3' with exact rational coefficients."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree(), -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            x = "x" if i == 1 else f"x^{i}"
            body = x if mag == 1 else f"{mag}*{x}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_to_json(p: PolyQ) -> list[str]:
    """Coefficient strings, constant term first."""
    return [str(c) for c in p.coeffs]


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _denominator_lcm(p: PolyQ) -> int:
    d = 1
    for c in p.coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def resultant(p: PolyQ, q: PolyQ) -> Fraction:
    """Resultant of two nonzero polynomials, exact.

    The Sylvester matrix is cleared to integers row-blockwise and the
    determinant is taken by Bareiss elimination.
    """
    if p.is_zero() or q.is_zero():
        raise InvalidInput("resultant of the zero polynomial is undefined")
    n, m = p.degree(), q.degree()
    if n == 0 and m == 0:
        return Fraction(1)
    if n == 0:
        return p.lead() ** m
    if m == 0:
        return q.lead() ** n
    dp, dq = _denominator_lcm(p), _denominator_lcm(q)
    pc = [int(c * dp) for c in p.coeffs][::-1]  # descending
    qc = [int(c * dq) for c in q.coeffs][::-1]
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + pc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + qc + [0] * (size - m - 1 - i))
    det = _bareiss_det(rows)
    return Fraction(det) / (Fraction(dp) ** m * Fraction(dq) ** n)


def discriminant(p: PolyQ) -> Fraction:
    """disc(p) = (-1)^(n(n-1)/2) * res(p, p') / lead(p)."""
    n = p.degree()
    if n < 1:
        raise InvalidInput("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lead()


class PolyFp:
    """Dense polynomial over F_l, coefficients ascending in [0, l)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int] = ()):
        self.modulus = modulus
        self.coeffs = _strip([c % modulus for c in coeffs])

    @classmethod
    def x(cls, modulus: int) -> "PolyFp":
        return cls(modulus, (0, 1))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyFp)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def _check(self, other: "PolyFp"):
        if self.modulus != other.modulus:
            raise InvalidInput("mixed moduli in PolyFp arithmetic")

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyFp(self.modulus, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyFp(self.modulus, [self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "PolyFp":
        return PolyFp(self.modulus, [-c for c in self.coeffs])

    def __mul__(self, other) -> "PolyFp":
        if isinstance(other, int):
            return PolyFp(self.modulus, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyFp(self.modulus)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        l = self.modulus
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % l
        return PolyFp(l, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "PolyFp"):
        self._check(other)
        if other.is_zero():
            raise InvalidInput("polynomial division by zero")
        l = self.modulus
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyFp(l), self
        inv_lead = pow(other.coeffs[-1], -1, l)
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree()] * inv_lead % l
            if c:
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % l
        return PolyFp(l, quo), PolyFp(l, rem)

    def __floordiv__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[1]

    def monic(self) -> "PolyFp":
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return self * inv

    def derivative(self) -> "PolyFp":
        return PolyFp(self.modulus, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __repr__(self):
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c] or ["0"]
        return f"PolyFp[{self.modulus}]({' + '.join(terms)})"


def poly_gcd(a: PolyFp, b: PolyFp) -> PolyFp:
    """Monic gcd in F_l[x]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_pow_mod(base: PolyFp, e: int, mod: PolyFp) -> PolyFp:
    """base^e mod mod by repeated squaring."""
    result = PolyFp(base.modulus, (1,))
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def reduce_mod(p: PolyQ, ell: int) -> PolyFp:
    """Coefficientwise reduction of p mod a prime ell."""
    if ell < 2 or not is_prime(ell):
        raise InvalidInput(f"modulus {ell} is not prime")
    out = []
    for c in p.coeffs:
        if c.denominator % ell == 0:
            raise PrimeExcluded(f"{ell} divides a coefficient denominator of {p!r}")
        out.append(c.numerator * pow(c.denominator, -1, ell) % ell)
    return PolyFp(ell, out)


def roots_mod(p: PolyFp) -> set[int]:
    """All roots of p in F_l by exhaustive evaluation."""
    if p.is_zero():
        raise InvalidInput("roots of the zero polynomial are undefined")
    return {x for x in range(p.modulus) if p(x) == 0}


def frobenius_roots(p: PolyFp) -> list[int]:
    """All roots of p in F_l without enumerating the field (odd l).

    gcd(x^l - x, p) isolates the product of distinct linear factors, which is
    then split by quadratic-character gcds with deterministic shifts, so the
    result is reproducible. Suited to large l where roots_mod is infeasible.
    """
    if p.is_zero():
        raise InvalidInput("roots of the zero polynomial are undefined")
    ell = p.modulus
    if ell == 2:
        raise InvalidInput("frobenius_roots requires an odd modulus")
    if p.degree() < 1:
        return []
    x = PolyFp.x(ell)
    linear_part = poly_gcd(p, poly_pow_mod(x, ell, p) - x)
    one = PolyFp(ell, (1,))
    roots: list[int] = []
    stack = [linear_part.monic()]
    shift = 0
    while stack:
        f = stack.pop()
        if f.degree() < 1:
            continue
        if f.degree() == 1:
            roots.append(-f[0] % ell)
            continue
        while True:
            probe = poly_pow_mod(PolyFp(ell, (shift, 1)), (ell - 1) // 2, f) - one
            shift += 1
            g = poly_gcd(f, probe)
            if 0 < g.degree() < f.degree():
                stack.append(g)
                stack.append(f // g)
                break
    return sorted(roots)


def _squarefree_decomposition(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Monic squarefree factors with multiplicities; product^mult = monic(f)."""
    l = f.modulus
    f = f.monic()
    out: list[tuple[PolyFp, int]] = []
    if f.degree() < 1:
        return out
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, c)
        fac = w // y
        if fac.degree() > 0:
            out.append((fac, i))
        w = y
        c = c // y
        i += 1
    if c.degree() > 0:
        # c lies in F_l[x^l]; take the l-th root coefficientwise (Frobenius fixes F_l)
        root = PolyFp(l, c.coeffs[::l])
        out.extend((g, m * l) for g, m in _squarefree_decomposition(root))
    return out


def _distinct_degree_degrees(g: PolyFp) -> list[int]:
    """Degrees (with repetition) of the irreducible factors of monic squarefree g."""
    l = g.modulus
    degrees: list[int] = []
    f = g
    x = PolyFp.x(l)
    xq = x
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        xq = poly_pow_mod(xq, l, f)
        h = poly_gcd(f, xq - x)
        if h.degree() > 0:
            degrees.extend([d] * (h.degree() // d))
            f = f // h
            xq = xq % f
    if f.degree() > 0:
        degrees.append(f.degree())
    return degrees


def ddf_pattern(p: PolyFp) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of p, with multiplicity.

    Squarefree decomposition followed by distinct-degree splitting; the
    factors themselves are never extracted.
    """
    if p.is_zero():
        raise InvalidInput("zero polynomial has no factor pattern")
    if p.modulus == 2:
        raise InvalidInput("ddf_pattern requires an odd modulus")
    pattern: list[int] = []
    for g, mult in _squarefree_decomposition(p):
        for d in _distinct_degree_degrees(g):
            pattern.extend([d] * mult)
    return tuple(sorted(pattern))


class Irreducibility(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


def _divisors_from_factorization(n: int, cap: int) -> list[int] | None:
    divs = [1]
    for prime, e in factorize(n).factors:
        divs = [d * prime**k for d in divs for k in range(e + 1)]
        if len(divs) > cap:
            return None
    return divs


def _rational_root(p: PolyQ) -> Fraction | None:
    """A rational root of p, or None; may give up on huge divisor sets."""
    scale = _denominator_lcm(p)
    ic = [int(c * scale) for c in p.coeffs]
    if ic[0] == 0:
        return Fraction(0)
    nums = _divisors_from_factorization(abs(ic[0]), 512)
    dens = _divisors_from_factorization(abs(ic[-1]), 512)
    if nums is None or dens is None:
        return None
    for num in nums:
        for den in dens:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0:
                    return cand
    return None


def _subset_sums(pattern: tuple[int, ...]) -> int:
    bits = 1
    for d in pattern:
        bits |= bits << d
    return bits


def irreducibility_sieve(p: PolyQ, prime_budget: int = 25) -> Irreducibility:
    """Modular irreducibility evidence for a squarefree p over Q.

    IRREDUCIBLE when some good prime yields the full-degree pattern, or when
    the accumulated factor patterns share no nontrivial splitting degree.
    REDUCIBLE only on an explicit rational root. UNKNOWN otherwise; callers
    must treat UNKNOWN conservatively.
    """
    n = p.degree()
    if n < 1:
        raise InvalidInput("irreducibility needs degree >= 1")
    if discriminant(p) == 0:
        raise InvalidInput("irreducibility_sieve expects a squarefree polynomial")
    if n == 1:
        return Irreducibility.IRREDUCIBLE
    if _rational_root(p) is not None:
        return Irreducibility.REDUCIBLE
    allowed = (1 << n) - 2  # bitmask of degrees 1..n-1
    common = allowed
    examined = 0
    ell = 2
    while examined < prime_budget:
        ell = next_prime(ell)
        try:
            pf = reduce_mod(p, ell)
        except PrimeExcluded:
            continue
        if pf.degree() != n:
            continue
        if poly_gcd(pf, pf.derivative()).degree() != 0:
            continue
        examined += 1
        pattern = ddf_pattern(pf)
        if pattern == (n,):
            return Irreducibility.IRREDUCIBLE
        common &= _subset_sums(pattern) & allowed
        if common == 0:
            return Irreducibility.IRREDUCIBLE
    return Irreducibility.UNKNOWN


class BiPolyQ:
    """Sparse bivariate polynomial in (k, t) over Q.

    Keys are (k-degree, t-degree); zero coefficients are never stored. The
    canonical term order is graded lexicographic with k before t.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms = {
            key: Fraction(c) for key, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def monomial(cls, k_deg: int, t_deg: int, coeff=1) -> "BiPolyQ":
        return cls({(k_deg, t_deg): Fraction(coeff)})

    @classmethod
    def from_poly_in_k(cls, p: PolyQ) -> "BiPolyQ":
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def ordered_terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms in descending graded-lex order (k before t)."""
        for key in sorted(self.terms, key=lambda ij: (-(ij[0] + ij[1]), -ij[0])):
            yield key, self.terms[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPolyQ) and self.terms == other.terms

    def __neg__(self) -> "BiPolyQ":
        return BiPolyQ({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "BiPolyQ") -> "BiPolyQ":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiPolyQ(out)

    def __sub__(self, other: "BiPolyQ") -> "BiPolyQ":
        return self + (-other)

    def __mul__(self, other) -> "BiPolyQ":
        if isinstance(other, (int, Fraction)):
            return BiPolyQ({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiPolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPolyQ":
        acc = BiPolyQ.monomial(0, 0)
        for _ in range(e):
            acc = acc * self
        return acc

    def __call__(self, k, t) -> Fraction:
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * Fraction(k) ** i * Fraction(t) ** j
        return acc

    def __repr__(self):
        if self.is_zero():
            return "BiPolyQ(0)"
        parts = [f"{c}*k^{i}*t^{j}" for (i, j), c in self.ordered_terms()]
        return f"BiPolyQ({' + '.join(parts)})"
