"""Integer primitives: gcd/lcm, general CRT, trial-division factoring, divisors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

# Trial division only; anything at or above this is rejected.
FACTOR_LIMIT = 1 << 63


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    def divisor_count(self) -> int:
        return math.prod(a + 1 for _, a in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm(values) -> int:
    values = list(values)
    if not values:
        raise ValueError("lcm of an empty list is undefined")
    return reduce(lambda x, y: x // math.gcd(x, y) * y, values)


def crt_solve(a1: int, d1: int, a2: int, d2: int) -> tuple[int, int] | None:
    """Solve x = a1 (mod d1), x = a2 (mod d2) for arbitrary moduli.

    Returns ``(r, lcm(d1, d2))`` with ``0 <= r < lcm``, or ``None`` when the
    residues disagree modulo ``gcd(d1, d2)``.
    """
    if d1 < 1 or d2 < 1:
        raise ValueError("moduli must be positive")
    g = math.gcd(d1, d2)
    if (a2 - a1) % g:
        return None
    period = d1 // g * d2
    step = d1 // g
    # a1 + d1*t = a2 (mod d2)  <=>  step*t = (a2-a1)/g (mod d2/g)
    m = d2 // g
    t = ((a2 - a1) // g) * pow(step, -1, m) % m if m > 1 else 0
    return (a1 + d1 * t) % period, period


def mod_inverse(a: int, m: int) -> int | None:
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        return None
    if m == 1:
        return 0
    return pow(a, -1, m)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, math.isqrt(n) + 1, 2))


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    if n >= FACTOR_LIMIT:
        raise ValueError(f"cannot factor {n}: above the trial-division limit 2^63")
    factors = []
    rest = n
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            factors.append((f, e))
        f += 1 if f == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    return factorize(n).factors[0][0]


def divisors_gt1(n: int) -> list[int]:
    divs = [1]
    for p, a in factorize(n).factors:
        divs = [d * p**j for d in divs for j in range(a + 1)]
    divs.sort()
    return divs[1:]
