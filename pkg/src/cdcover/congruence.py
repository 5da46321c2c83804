"""Congruences, congruence sets and the covering / CD predicates.

Coverage is exact: a set of congruences is periodic modulo the lcm of its
moduli, so marking every class in one period decides density and covering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .numtheory import lcm

DEFAULT_SIEVE_CAP = 10**8


class PeriodTooLarge(RuntimeError):
    def __init__(self, period: int, cap: int):
        super().__init__(f"period D={period} exceeds the sieve cap {cap}")
        self.period = period
        self.cap = cap


@dataclass(frozen=True, order=True)
class Congruence:
    residue: int
    modulus: int

    def __init__(self, residue: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "residue", residue % modulus)
        object.__setattr__(self, "modulus", modulus)

    def contains(self, x: int) -> bool:
        return x % self.modulus == self.residue

    def __str__(self) -> str:
        return f"{self.residue}:{self.modulus}"


@dataclass(frozen=True)
class CongruenceSet:
    congruences: tuple[Congruence, ...]
    distinct: bool = True
    period: int = field(init=False, compare=False)

    def __post_init__(self):
        cs = tuple(sorted(self.congruences, key=lambda c: (c.modulus, c.residue)))
        if self.distinct:
            mods = [c.modulus for c in cs]
            if len(set(mods)) != len(mods):
                raise ValueError(f"repeated modulus in a distinct congruence set: {mods}")
        object.__setattr__(self, "congruences", cs)
        object.__setattr__(self, "period", lcm([c.modulus for c in cs]) if cs else 1)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]], distinct: bool = True) -> CongruenceSet:
        """Build from ``(residue, modulus)`` pairs."""
        return cls(tuple(Congruence(a, d) for a, d in pairs), distinct)

    @classmethod
    def relaxed(cls, pairs: Iterable[tuple[int, int]]) -> CongruenceSet:
        """Like :meth:`of` but repeated moduli are allowed."""
        return cls.of(pairs, distinct=False)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.modulus for c in self.congruences)

    def pairs(self) -> list[tuple[int, int]]:
        return [(c.residue, c.modulus) for c in self.congruences]

    def __len__(self) -> int:
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.congruences)) + "}"


def overlaps(c1: Congruence, c2: Congruence) -> bool:
    g = math.gcd(c1.modulus, c2.modulus)
    return (c1.residue - c2.residue) % g == 0


def is_cd(cset: CongruenceSet) -> tuple[bool, tuple[Congruence, Congruence] | None]:
    """Coprime-disjoint test; on failure also return the first offending pair."""
    cs = cset.congruences
    for i, ci in enumerate(cs):
        for cj in cs[i + 1:]:
            if math.gcd(ci.modulus, cj.modulus) > 1 and overlaps(ci, cj):
                return False, (ci, cj)
    return True, None


def covers_integer(cset: CongruenceSet, x: int) -> bool:
    return any(c.contains(x) for c in cset)


def _progression_bits(residue: int, modulus: int, period: int) -> int:
    # bits residue, residue+modulus, ... below period; built by doubling
    pattern, width = 1, modulus
    while width < period:
        pattern |= pattern << width
        width *= 2
    pattern &= (1 << (period - residue)) - 1
    return pattern << residue


def covered_residues(cset: CongruenceSet, cap: int = DEFAULT_SIEVE_CAP) -> tuple[int, int]:
    """Count classes mod D = lcm(moduli) hit by the set; returns ``(m, D)``.

    One bit per residue class, so memory is about D/8 bytes.
    """
    period = cset.period
    if period > cap:
        raise PeriodTooLarge(period, cap)
    marked = 0
    for c in cset:
        marked |= _progression_bits(c.residue, c.modulus, period)
    return marked.bit_count(), period


def density_simulate(cset: CongruenceSet, cap: int = DEFAULT_SIEVE_CAP) -> Fraction:
    m, period = covered_residues(cset, cap)
    return Fraction(m, period)


def is_covering(cset: CongruenceSet, cap: int = DEFAULT_SIEVE_CAP) -> bool:
    if not len(cset):
        return False
    m, period = covered_residues(cset, cap)
    return m == period


def translate(cset: CongruenceSet, t: int) -> CongruenceSet:
    return CongruenceSet.of(((c.residue + t, c.modulus) for c in cset), cset.distinct)
