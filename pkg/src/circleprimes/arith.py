"""Exact integer primitives: primality, factorization, divisor machinery.

Everything here is deterministic and exact. Python integers are arbitrary
precision, so no value ever overflows; the only size limits in this
package are the explicit caps in :mod:`circleprimes.circlemap`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "divisors",
    "factorize",
    "gcd",
    "is_prime",
    "mod_pow",
    "moebius",
    "primes_up_to",
    "totient",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ordered (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError(f"primes must be strictly increasing, got {primes}")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    @property
    def n(self) -> int:
        """The factored integer."""
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def __iter__(self):
        return iter(self.factors)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus, without materializing base**exponent."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if base < 0:
        raise ValueError(f"base must be non-negative, got {base}")
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    return pow(base, exponent, modulus)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) == 0 by convention."""
    return math.gcd(a, b)


# Strong-probable-prime witnesses making the test deterministic for every
# n < 3_317_044_064_679_887_385_961_981, comfortably past 2**64.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division by small primes, then strong-probable-prime rounds on a
    fixed witness set; exact (never probabilistic) for all n below the
    witness-set bound, which covers the full 64-bit range.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
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


_TRIAL_LIMIT = 10**6
# increments stepping through numbers coprime to 30, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 2, smallest prime first."""
    if n < 2:
        raise ValueError(f"cannot factor {n}; need n >= 2")
    m = n
    found: list[tuple[int, int]] = []

    def strip(p: int) -> None:
        nonlocal m
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            found.append((p, e))

    for p in (2, 3, 5):
        strip(p)
    d, i = 7, 0
    while d * d <= m and d < _TRIAL_LIMIT:
        strip(d)
        d += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        if d * d > m:
            found.append((m, 1))  # cofactor below the square of the last trial
        else:
            found.extend(_factor_hard(m))
    found.sort()
    return Factorization(tuple(found))


def _factor_hard(m: int) -> list[tuple[int, int]]:
    """Factor m when every prime factor exceeds the trial-division bound."""
    counts: dict[int, int] = {}
    stack = [m]
    while stack:
        v = stack.pop()
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        f = _brent_rho(v)
        stack.append(f)
        stack.append(v // f)
    return sorted(counts.items())


def _brent_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n via Brent's cycle method."""
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g = x = ys = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            j = 0
            while j < r and g == 1:
                ys = y
                for _ in range(min(128, r - j)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                j += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")  # pragma: no cover


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1 in increasing order."""
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    if n == 1:
        return [1]
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    out.sort()
    return out


def moebius(n: int) -> int:
    """Moebius mu: 0 when a square divides n, else (-1)**(prime count)."""
    if n < 1:
        raise ValueError(f"moebius needs n >= 1, got {n}")
    if n == 1:
        return 1
    f = factorize(n)
    if not f.is_squarefree:
        return 0
    return -1 if len(f.factors) % 2 else 1


def totient(n: int) -> int:
    """Euler phi of n >= 1, from the factorization."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    out = 1
    if n > 1:
        for p, e in factorize(n):
            out *= (p - 1) * p ** (e - 1)
    return out


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (simple byte sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, alive in enumerate(sieve) if alive]
