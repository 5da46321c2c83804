"""Closed-form densities in exact rationals.

Everything here returns :class:`fractions.Fraction`; no floats, because the
interesting comparisons are against exactly 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .numtheory import factorize, lcm


def _check_moduli(moduli) -> list[int]:
    mods = sorted(moduli)
    if any(d < 2 for d in mods):
        raise ValueError(f"moduli must be >= 2: {mods}")
    if len(set(mods)) != len(mods):
        raise ValueError(f"moduli must be distinct: {mods}")
    return mods


def coprime_subset_sums(moduli) -> list[Fraction]:
    """Level sums of the inclusion-exclusion formula for a CD set.

    Entry ``s-1`` is the sum of ``1/(d_1 * ... * d_s)`` over all ``s``-element
    subsets of pairwise coprime moduli. Trailing empty levels are dropped.
    """
    mods = _check_moduli(moduli)
    if not mods:
        return []
    period = lcm(mods)
    # integer numerators over the common denominator `period`
    levels: list[int] = []

    def extend(start: int, product: int, depth: int) -> None:
        for i in range(start, len(mods)):
            d = mods[i]
            if math.gcd(d, product) != 1:
                continue
            prod = product * d
            if depth == len(levels):
                levels.append(0)
            levels[depth] += period // prod
            extend(i + 1, prod, depth + 1)

    extend(0, 1, 0)
    return [Fraction(v, period) for v in levels]


def density_formula(moduli) -> Fraction:
    """Density covered by any CD congruence set with these moduli.

    Alternating sum over pairwise coprime subsets; residues play no role.

    >>> density_formula([2, 4, 5, 10, 20])
    Fraction(19, 20)
    """
    return sum(
        (s if k % 2 == 0 else -s for k, s in enumerate(coprime_subset_sums(moduli))),
        Fraction(0),
    )


def sum_reciprocals(moduli) -> Fraction:
    mods = list(moduli)
    if any(d < 2 for d in mods):
        raise ValueError(f"moduli must be >= 2: {mods}")
    if not mods:
        return Fraction(0)
    period = lcm(mods)
    return Fraction(sum(period // d for d in mods), period)


def euler_divisor_sum(n: int) -> Fraction:
    """Sum of 1/d over divisors d > 1 of n, via the product over prime powers."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    total = Fraction(1)
    for p, a in factorize(n).factors:
        # 1 + 1/p + ... + 1/p^a
        total *= Fraction(p ** (a + 1) - 1, p**a * (p - 1))
    return total - 1


def geometric_upper_bound(p: int) -> Fraction:
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    return Fraction(p, p - 1)
