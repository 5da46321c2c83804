"""Exhaustive decision procedures for CD-feasibility.

A moduli list is CD-feasible when residues can be chosen so that any two
congruences whose moduli share a factor are disjoint, i.e. ``a_d != a_e``
modulo ``gcd(d, e)``. The search assigns residues in ascending-modulus order
with the first residue pinned to 0 (translating a CD set keeps it CD).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

import networkx as nx

from .congruence import CongruenceSet
from .numtheory import divisors_gt1
from .structure import lemma3_check

DEFAULT_NODE_BUDGET = 10**9


class Status(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class Budget:
    nodes: int = DEFAULT_NODE_BUDGET
    seconds: float | None = None


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    moduli: tuple[int, ...]
    witness: CongruenceSet | None = None
    nodes_explored: int = 0
    budget: Budget = field(default_factory=Budget)

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


class _OutOfBudget(Exception):
    pass


def decide_cd_feasible(moduli, budget: Budget | None = None, *, fix_first: bool = True) -> SearchOutcome:
    """Backtracking search for a CD residue assignment.

    A node is one accepted partial assignment (one residue placed). With
    ``fix_first=False`` the translation symmetry is not broken; only useful
    for cross-checking.
    """
    budget = budget or Budget()
    mods = sorted(moduli)
    if any(d < 2 for d in mods) or len(set(mods)) != len(mods):
        raise ValueError(f"moduli must be distinct and >= 2: {mods}")
    n = len(mods)
    # for each position, the earlier positions it must avoid and the shared gcd
    constraints = [
        [(j, g) for j in range(i) if (g := math.gcd(mods[i], mods[j])) > 1]
        for i in range(n)
    ]
    residues = [0] * n
    nodes = 0
    deadline = None if budget.seconds is None else time.monotonic() + budget.seconds

    def place(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        d = mods[i]
        if i == 0 and fix_first:
            candidates = [0]
        else:
            allowed = bytearray(b"\x01") * d
            for j, g in constraints[i]:
                r = residues[j] % g
                allowed[r::g] = bytes(len(range(r, d, g)))
            candidates = [a for a in range(d) if allowed[a]]
        for a in candidates:
            nodes += 1
            if nodes > budget.nodes:
                raise _OutOfBudget
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise _OutOfBudget
            residues[i] = a
            if place(i + 1):
                return True
        return False

    try:
        found = place(0)
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, tuple(mods), None, nodes, budget)
    if found:
        witness = CongruenceSet.of(zip(residues, mods))
        return SearchOutcome(Status.FEASIBLE, tuple(mods), witness, nodes, budget)
    return SearchOutcome(Status.INFEASIBLE, tuple(mods), None, nodes, budget)


def decide_non_intersecting(n: int, budget: Budget | None = None) -> SearchOutcome:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return decide_cd_feasible(divisors_gt1(n), budget)


def pairwise_gcd_condition(moduli) -> tuple[bool, tuple[int, tuple[int, ...]] | None]:
    """Check that for every m >= 2 at most m moduli have all pairwise gcds equal to m.

    Only values of m that occur as some pairwise gcd are examined; on failure
    returns ``(False, (m, subset))`` for the smallest violating m.
    """
    mods = sorted(set(moduli))
    by_gcd: dict[int, list[tuple[int, int]]] = {}
    for a, b in combinations(mods, 2):
        g = math.gcd(a, b)
        if g > 1:
            by_gcd.setdefault(g, []).append((a, b))
    for m in sorted(by_gcd):
        graph = nx.Graph(by_gcd[m])
        clique, size = nx.max_weight_clique(graph, weight=None)
        if size > m:
            return False, (m, tuple(sorted(clique)))
    return True, None


@dataclass(frozen=True)
class ScanRow:
    n: int
    lemma3_passes: bool
    p: int
    omega: int
    outcome: SearchOutcome | None

    @property
    def counterexample(self) -> bool:
        """A lemma3-passing n proven not non-intersecting."""
        return (
            self.lemma3_passes
            and self.outcome is not None
            and self.outcome.status is Status.INFEASIBLE
        )

    @property
    def lemma3_violation(self) -> bool:
        """A lemma3-failing n that nevertheless has a CD set (a bug, if seen)."""
        return (
            not self.lemma3_passes
            and self.outcome is not None
            and self.outcome.feasible
        )


def scan_one(n: int, budget: Budget | None = None, search_failing: bool = True) -> ScanRow:
    passes, p, omega = lemma3_check(n)
    outcome = None
    if passes or search_failing:
        outcome = decide_non_intersecting(n, budget)
    return ScanRow(n, passes, p, omega, outcome)


def scan_conjecture(n_max: int, budget: Budget | None = None, *, n_min: int = 2,
                    failing_stride: int = 1) -> list[ScanRow]:
    """Search every n in [n_min, n_max].

    Lemma3-failing n are searched too (every ``failing_stride``-th one) as a
    soundness check of the necessary condition.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    rows = []
    failing_seen = 0
    for n in range(max(n_min, 2), n_max + 1):
        passes = lemma3_check(n)[0]
        search_failing = False
        if not passes:
            search_failing = failing_stride > 0 and failing_seen % failing_stride == 0
            failing_seen += 1
        rows.append(scan_one(n, budget, search_failing))
    return rows
