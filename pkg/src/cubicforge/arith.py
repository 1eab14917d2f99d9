"""Exact integer and rational arithmetic: primality, factorization, cube-free classes.

Rationals are plain ``fractions.Fraction`` (always stored reduced, positive
denominator), re-exported here as ``Rat``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput

Rat = Fraction

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")

# Primes below this bound are removed by trial division; rho splits the rest.
_TRIAL_BOUND = 10**4

# Witness set proving primality for every n < 3.3 * 10^24 (covers 2^64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def parse_rat(text: str) -> Fraction:
    """Parse 'p/q' or 'p' (optional leading minus, no whitespace) into a Fraction."""
    if not _RAT_RE.match(text):
        raise InvalidInput(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InvalidInput(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rat(q: Fraction) -> str:
    """Render a Fraction as 'p/q' or 'p'."""
    return str(q)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n < 2^64 (and far beyond)."""
    if n < 2:
        raise InvalidInput(f"is_prime expects n >= 2, got {n}")
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_split(n: int) -> int:
    """Brent's cycle-finding rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise InvalidInput(f"rho failed to split {n}")  # pragma: no cover


@dataclass(frozen=True)
class Factorization:
    """Sign and ascending (prime, exponent) pairs reconstructing an integer exactly."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def factorize(n: int) -> Factorization:
    """Exact factorization of a nonzero integer.

    Trial division strips small primes, then Brent rho splits the cofactor
    with Miller-Rabin certificates on every piece. Deterministic.
    """
    if n == 0:
        raise InvalidInput("cannot factorize 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    exps: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            exps[p] = exps.get(p, 0) + 1
            n //= p
    d = 7
    # 2/4-alternating wheel over numbers coprime to 2 and 3
    step = 4
    while d <= _TRIAL_BOUND and d * d <= n:
        while n % d == 0:
            exps[d] = exps.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if n > 1:
        if d * d > n:
            exps[n] = exps.get(n, 0) + 1
        else:
            stack = [n]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    exps[m] = exps.get(m, 0) + 1
                    continue
                g = _rho_split(m)
                stack.append(g)
                stack.append(m // g)
    return Factorization(sign, tuple(sorted(exps.items())))


def legendre(a: int, ell: int) -> int:
    """Quadratic-residue symbol of a in F_l for odd prime l: 1, -1, or 0."""
    r = pow(a % ell, (ell - 1) // 2, ell)
    return -1 if r == ell - 1 else r


@dataclass(frozen=True)
class CubeClass:
    """A nonzero rational written as c^3 * m0 with m0 a positive cube-free integer.

    m0 = 1 means the value is a perfect rational cube; m0 determines the pure
    cubic field Q(cbrt(m0)) up to isomorphism.
    """

    m0: int
    c: Fraction

    def __post_init__(self):
        if self.m0 < 1:
            raise InvalidInput(f"m0 must be positive, got {self.m0}")
        if self.c == 0:
            raise InvalidInput("c must be nonzero")

    def reconstruct(self) -> Fraction:
        return self.c**3 * self.m0


def cubefree_rat(q: Fraction) -> CubeClass:
    """Decompose a nonzero rational as c^3 * m0, m0 positive and cube-free.

    Works prime-by-prime on the reduced numerator and denominator with
    exponents taken mod 3 (denominator exponents negated), so u*v^2 is never
    formed. The sign goes into c since -1 is a cube.
    """
    q = Fraction(q)
    if q == 0:
        raise InvalidInput("cubefree_rat expects a nonzero rational")
    sign = 1 if q > 0 else -1
    m0 = 1
    c = Fraction(sign)
    for value, direction in ((q.numerator, 1), (q.denominator, -1)):
        value = abs(value)
        if value == 1:
            continue
        for p, e in factorize(value).factors:
            e *= direction
            r = e % 3
            m0 *= p**r
            c *= Fraction(p) ** ((e - r) // 3)
    result = CubeClass(m0, c)
    if result.reconstruct() != q:  # pragma: no cover - algebraically impossible
        raise InvalidInput(f"cube-free decomposition failed for {q}")
    return result


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound by a sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, bound + 1) if sieve[i]]


def prime_support(n: int) -> frozenset[int]:
    """The set of primes dividing n (empty for units)."""
    if abs(n) == 1:
        return frozenset()
    return frozenset(p for p, _ in factorize(n).factors)


def prime_to_part(n: int, ell: int) -> int:
    """Largest divisor of n coprime to ell."""
    while n % ell == 0:
        n //= ell
    return n


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n (n >= 1)."""
    n += 1
    while not is_prime(n):
        n += 1
    return n
