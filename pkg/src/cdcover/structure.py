"""Arithmetic structure of n: the smallest-prime necessary condition, the case
split showing that no CD set on the divisors of n covers every integer, and
explicit CD constructions for n = p^k and n = q*p^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .congruence import CongruenceSet
from .density import density_formula, euler_divisor_sum
from .numtheory import divisors_gt1, factorize, is_prime, mod_inverse


class CaseTag(str, Enum):
    CASE_1A = "Case1a"
    CASE_1B = "Case1b"
    CASE_2 = "Case2"
    FAILS_LEMMA3 = "FailsLemma3"


class BoundKind(str, Enum):
    RECIPROCAL_SUM = "reciprocal_sum"
    CD_DENSITY = "cd_density"


class InternalContradiction(AssertionError):
    """A computed bound reached 1 for an n where it must stay below 1."""


class ProvenInfeasible(ValueError):
    """n has the right shape for a construction but is known not to be
    non-intersecting (n = q * 2^k, k >= 2)."""


@dataclass(frozen=True)
class CaseReport:
    n: int
    smallest_prime: int
    case_tag: CaseTag
    distinct_primes_of_n_over_p: int
    other_primes: tuple[int, ...] = ()
    bound_kind: BoundKind | None = None
    bound_value: Fraction | None = None
    bound_threshold: Fraction = Fraction(1)

    @property
    def s(self) -> int:
        """Number of primes other than the smallest one."""
        return len(self.other_primes)


def lemma3_check(n: int) -> tuple[bool, int, int]:
    """Return ``(passes, p, omega(n/p))`` where p is the smallest prime of n.

    n can only be non-intersecting when n/p has fewer than p distinct primes.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    fac = factorize(n)
    p = fac.factors[0][0]
    omega = fac.omega - (1 if fac.factors[0][1] == 1 else 0)
    return omega < p, p, omega


def classify(n: int) -> CaseReport:
    passes, p, omega = lemma3_check(n)
    fac = factorize(n)
    others = fac.primes[1:]
    if not passes:
        tag = CaseTag.FAILS_LEMMA3
    elif fac.factors[0][1] >= 2:
        tag = CaseTag.CASE_2
    elif n % 2:
        tag = CaseTag.CASE_1A
    else:
        tag = CaseTag.CASE_1B
    return CaseReport(n, p, tag, omega, others)


def t1_report(n: int) -> CaseReport:
    """Classify n and attach the bound that rules out a CD covering.

    Raises InternalContradiction if the bound is not strictly below 1.
    """
    rep = classify(n)
    if rep.case_tag is CaseTag.FAILS_LEMMA3:
        return rep
    if rep.case_tag is CaseTag.CASE_1B and n != 2:
        kind, value = BoundKind.CD_DENSITY, density_formula(divisors_gt1(n))
    else:
        kind, value = BoundKind.RECIPROCAL_SUM, euler_divisor_sum(n)
    if value >= rep.bound_threshold:
        raise InternalContradiction(
            f"n={n} ({rep.case_tag.value}): {kind.value} bound {value} is not < 1"
        )
    return CaseReport(
        rep.n, rep.smallest_prime, rep.case_tag, rep.distinct_primes_of_n_over_p,
        rep.other_primes, kind, value,
    )


def prime_power_density(p: int, k: int) -> Fraction:
    return Fraction(p**k - 1, p**k * (p - 1))


def construct_prime_power(p: int, k: int) -> CongruenceSet:
    """{p^(i-1) mod p^i : 1 <= i <= k}; the p-adic valuation separates the classes."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return CongruenceSet.of((p ** (i - 1), p**i) for i in range(1, k + 1))


def q_pk_shape(n: int) -> tuple[int, int, int]:
    """Split n as ``(q, p, k)`` with n = q * p^k, p the larger prime when k = 1.

    Raises ValueError when n has no such shape and ProvenInfeasible for
    q * 2^k with k >= 2.
    """
    fac = factorize(n)
    if fac.omega != 2:
        raise ValueError(f"{n} = {fac} is not q*p^k with distinct primes p, q")
    (p1, a1), (p2, a2) = fac.factors
    if a1 == 1 and a2 == 1:
        q, p, k = p1, p2, 1
    elif a1 == 1:
        q, p, k = p1, p2, a2
    elif a2 == 1:
        q, p, k = p2, p1, a1
    else:
        raise ValueError(f"{n} = {fac} is not q*p^k: both exponents exceed 1")
    if p == 2 and k >= 2:
        raise ProvenInfeasible(
            f"{n} = {q}*2^{k} is not non-intersecting: {n}/2 has 2 distinct primes"
        )
    return q, p, k


def q_pk_density(q: int, p: int, k: int) -> Fraction:
    return Fraction(1, q) + prime_power_density(p, k)


def construct_q_pk(n: int) -> CongruenceSet:
    """CD set for n = q*p^k (k = 1 or p > 2):

        0 mod q,  p^(i-1)+1 mod p^i,  a*q*p^(j-1)+1 mod q*p^j   (1 <= i, j <= k)

    with a the least value in [1, p-1] other than q^-1 mod p.
    """
    q, p, k = q_pk_shape(n)
    q_inv = mod_inverse(q, p)
    a = next(x for x in range(1, p) if x != q_inv)
    pairs = [(0, q)]
    pairs += [(p ** (i - 1) + 1, p**i) for i in range(1, k + 1)]
    pairs += [(a * q * p ** (j - 1) + 1, q * p**j) for j in range(1, k + 1)]
    return CongruenceSet.of(pairs)


def construct(n: int) -> CongruenceSet:
    """Dispatch to the prime-power or q*p^k construction."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    fac = factorize(n)
    if fac.omega == 1:
        return construct_prime_power(*fac.factors[0])
    return construct_q_pk(n)


def construction_density(n: int) -> Fraction:
    fac = factorize(n)
    if fac.omega == 1:
        return prime_power_density(*fac.factors[0])
    return q_pk_density(*q_pk_shape(n))
