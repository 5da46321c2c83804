"""Golden checks behind ``cdcover verify-paper``.

Each check returns ``(ok, detail)``; ``detail`` is a short deterministic string.
"""

from __future__ import annotations

from fractions import Fraction

from .congruence import CongruenceSet, density_simulate, is_cd, is_covering
from .density import density_formula, sum_reciprocals
from .search import decide_cd_feasible, decide_non_intersecting, pairwise_gcd_condition
from .structure import (
    construct_prime_power,
    construct_q_pk,
    lemma3_check,
    prime_power_density,
    q_pk_density,
    t1_report,
)

CLASSIC_COVERING = CongruenceSet.of([(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])
GCD_CONDITION_NOT_SUFFICIENT = (3, 6, 12, 18, 30, 42)


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def check_n20_formula():
    v = density_formula([2, 4, 5, 10, 20])
    return v == Fraction(19, 20), f"density_formula(2,4,5,10,20) = {fmt(v)}"


def check_n20_lemma3():
    passes, p, omega = lemma3_check(20)
    out = decide_non_intersecting(20)
    ok = not passes and p == 2 and omega == 2 and out.status.value == "infeasible"
    return ok, f"lemma3(20) passes={passes} p={p} omega={omega}; search {out.status.value}"


def check_n18_case1b():
    rep = t1_report(18)
    ok = rep.case_tag.value == "Case1b" and rep.bound_value == Fraction(17, 18)
    return ok, f"t1_report(18) {rep.case_tag.value} {rep.bound_kind.value} = {fmt(rep.bound_value)}"


def check_n2_case1b():
    rep = t1_report(2)
    return rep.bound_value == Fraction(1, 2), f"t1_report(2) {rep.bound_kind.value} = {fmt(rep.bound_value)}"


def check_prime_power():
    bad = []
    for p in (2, 3, 5, 7, 11, 13):
        for k in range(1, 5):
            s = construct_prime_power(p, k)
            if not is_cd(s)[0] or density_simulate(s) != prime_power_density(p, k):
                bad.append(f"{p}^{k}")
    return not bad, "prime powers p<=13, k<=4: " + (", ".join(bad) or "all CD, densities match")


def check_q_pk():
    cases = {45: (5, 3, 2), 18: (2, 3, 2), 15: (3, 5, 1), 375: (3, 5, 3)}
    bad = []
    for n, (q, p, k) in cases.items():
        s = construct_q_pk(n)
        if not is_cd(s)[0] or density_simulate(s) != q_pk_density(q, p, k):
            bad.append(str(n))
    return not bad, "q*p^k for n in 15,18,45,375: " + (", ".join(bad) or "all CD, densities match")


def check_gcd_condition_not_sufficient():
    out = decide_cd_feasible(GCD_CONDITION_NOT_SUFFICIENT)
    passes, _ = pairwise_gcd_condition(GCD_CONDITION_NOT_SUFFICIENT)
    ok = out.status.value == "infeasible" and passes
    return ok, f"{{3,6,12,18,30,42}}: search {out.status.value}, pairwise-gcd condition passes={passes}"


def check_classic_covering():
    cover = is_covering(CLASSIC_COVERING)
    s = sum_reciprocals(CLASSIC_COVERING.moduli)
    return cover and s == Fraction(4, 3), f"classic covering: is_covering={cover}, sum 1/d = {fmt(s)}"


CHECKS = {
    "n20_formula_19_20": check_n20_formula,
    "n20_fails_lemma3": check_n20_lemma3,
    "n18_case1b_17_18": check_n18_case1b,
    "n2_case1b_1_2": check_n2_case1b,
    "prime_power_construction": check_prime_power,
    "q_pk_construction": check_q_pk,
    "gcd_condition_not_sufficient": check_gcd_condition_not_sufficient,
    "classic_covering_4_3": check_classic_covering,
}


def run_checks() -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS.items():
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"error: {exc!r}"
        results.append((name, bool(ok), detail))
    return results
