"""Command-line front end.

Exit codes: 0 ok, 1 flagged negative (counterexample, failed check,
proven-infeasible construction), 2 usage error, 3 resource or budget limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial

from . import checks
from .congruence import (
    DEFAULT_SIEVE_CAP,
    CongruenceSet,
    PeriodTooLarge,
    density_simulate,
    is_cd,
)
from .density import density_formula
from .search import (
    DEFAULT_NODE_BUDGET,
    Budget,
    Status,
    decide_cd_feasible,
    decide_non_intersecting,
    scan_one,
)
from .structure import (
    ProvenInfeasible,
    construct,
    construction_density,
    t1_report,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def set_pairs(s: CongruenceSet) -> list[list[int]]:
    return [[a, d] for a, d in s.pairs()]


def set_text(s: CongruenceSet) -> str:
    return " ".join(f"{a}:{d}" for a, d in s.pairs())


def parse_pair(text: str) -> tuple[int, int]:
    try:
        a, d = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"malformed congruence {text!r}: expected a:d") from None
    if d < 2 or not 0 <= a < d:
        raise UsageError(f"bad congruence {text!r}: need 0 <= a < d and d >= 2")
    return a, d


def check_moduli(mods: list[int]) -> list[int]:
    if any(d < 2 for d in mods) or len(set(mods)) != len(mods):
        raise UsageError(f"moduli must be distinct integers >= 2: {mods}")
    return mods


class Output:
    """Collects plain lines (printed as they come) or a JSON report."""

    def __init__(self, command: str, inputs: dict, as_json: bool):
        self.command = command
        self.inputs = inputs
        self.as_json = as_json
        self.results: dict = {}
        self.message: str | None = None

    def line(self, text: str) -> None:
        if not self.as_json:
            print(text, flush=True)

    def finish(self, status: str = "ok") -> None:
        message = self.message
        if self.as_json:
            report = {
                "schema_version": SCHEMA_VERSION,
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "status": status,
            }
            if message is not None:
                report["message"] = message
            print(json.dumps(report, sort_keys=True))
        elif status == "error":
            print(f"cdcover: error: {message}", file=sys.stderr)


def outcome_payload(out) -> dict:
    return {
        "status": out.status.value,
        "moduli": list(out.moduli),
        "witness": set_pairs(out.witness) if out.witness else None,
        "nodes_explored": out.nodes_explored,
        "node_budget": out.budget.nodes,
    }


def cmd_density_formula(args, out: Output) -> int:
    mods = check_moduli(args.moduli)
    v = density_formula(mods)
    out.results["density"] = fmt(v)
    out.line(fmt(v))
    return EXIT_OK


def cmd_check_cd(args, out: Output) -> int:
    pairs = [parse_pair(t) for t in args.congruences]
    if len({d for _, d in pairs}) != len(pairs):
        raise UsageError("congruences must have distinct moduli")
    s = CongruenceSet.of(pairs)
    ok, bad = is_cd(s)
    out.results["cd"] = ok
    out.results["violation"] = [[c.residue, c.modulus] for c in bad] if bad else None
    out.line(f"cd: {'true' if ok else 'false'}")
    if bad:
        out.line(f"violation: {bad[0]} {bad[1]}")
    try:
        sim = density_simulate(s, args.sieve_cap)
    except PeriodTooLarge as exc:
        out.results["density"] = None
        out.line(f"density: skipped ({exc})")
    else:
        out.results["density"] = fmt(sim)
        out.line(f"density: {fmt(sim)}")
    if ok:
        f = density_formula(s.moduli)
        out.results["density_formula"] = fmt(f)
        out.line(f"density_formula: {fmt(f)}")
    return EXIT_OK


def cmd_decide(args, out: Output) -> int:
    budget = Budget(args.budget, args.timeout)
    if args.n is not None:
        if args.n < 2:
            raise UsageError("--n must be >= 2")
        result = decide_non_intersecting(args.n, budget)
    else:
        result = decide_cd_feasible(check_moduli(args.moduli), budget)
    out.results.update(outcome_payload(result))
    out.line(f"moduli: {' '.join(map(str, result.moduli))}")
    out.line(f"status: {result.status.value}")
    if result.witness is not None:
        out.line(f"witness: {set_text(result.witness)}")
    out.line(f"nodes: {result.nodes_explored}")
    if result.status is Status.BUDGET_EXCEEDED:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_report(args, out: Output) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    rep = t1_report(args.n)
    passes = rep.case_tag.value != "FailsLemma3"
    out.results.update({
        "n": rep.n,
        "smallest_prime": rep.smallest_prime,
        "distinct_primes_of_n_over_p": rep.distinct_primes_of_n_over_p,
        "lemma3_passes": passes,
        "case_tag": rep.case_tag.value,
        "bound_kind": rep.bound_kind.value if rep.bound_kind else None,
        "bound_value": fmt(rep.bound_value) if rep.bound_value is not None else None,
        "bound_threshold": fmt(rep.bound_threshold),
    })
    p, w = rep.smallest_prime, rep.distinct_primes_of_n_over_p
    out.line(f"n: {rep.n}")
    out.line(f"lemma3: {'pass' if passes else 'fail'} (p={p}, omega(n/p)={w}, need < {p})")
    out.line(f"case: {rep.case_tag.value}")
    if rep.bound_value is not None:
        out.line(f"bound: {rep.bound_kind.value} = {fmt(rep.bound_value)} < 1")
    return EXIT_OK


def cmd_construct(args, out: Output) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    try:
        s = construct(args.n)
    except ProvenInfeasible as exc:
        out.results["proven_infeasible"] = True
        out.message = str(exc)
        out.line(f"proven-infeasible: {exc}")
        return EXIT_NEGATIVE
    except ValueError as exc:
        raise UsageError(f"{exc}; supported shapes are p^k and q*p^k (k = 1 or p > 2)") from None
    ok, _ = is_cd(s)
    closed = construction_density(args.n)
    formula = density_formula(s.moduli)
    out.results.update({
        "congruences": set_pairs(s),
        "cd": ok,
        "density_closed_form": fmt(closed),
        "density_formula": fmt(formula),
    })
    out.line(f"congruences: {set_text(s)}")
    out.line(f"cd: {'true' if ok else 'false'}")
    out.line(f"density_closed_form: {fmt(closed)}")
    out.line(f"density_formula: {fmt(formula)}")
    try:
        sim = density_simulate(s, args.sieve_cap)
    except PeriodTooLarge as exc:
        out.results["density_simulated"] = None
        out.line(f"density_simulated: skipped ({exc})")
        sim = None
    else:
        out.results["density_simulated"] = fmt(sim)
        out.line(f"density_simulated: {fmt(sim)}")
    agree = ok and formula == closed and (sim is None or sim == closed)
    out.results["agree"] = agree
    out.line(f"agree: {'true' if agree else 'false'}")
    return EXIT_OK if agree else EXIT_NEGATIVE


def _scan_line(row) -> str:
    l3 = "pass" if row.lemma3_passes else "fail"
    if row.outcome is None:
        tail = "not-searched"
    else:
        tail = f"{row.outcome.status.value} nodes={row.outcome.nodes_explored}"
    flag = ""
    if row.counterexample:
        flag = " CONJECTURE COUNTEREXAMPLE"
    elif row.lemma3_violation:
        flag = " LEMMA3 VIOLATION"
    return f"n={row.n} lemma3={l3} p={row.p} omega={row.omega} {tail}{flag}"


def cmd_scan(args, out: Output) -> int:
    if args.max < 2:
        raise UsageError("--max must be >= 2")
    budget = Budget(args.budget, args.timeout)
    ns = list(range(max(args.min, 2), args.max + 1))
    work = partial(scan_one, budget=budget, search_failing=True)
    counts = {"feasible": 0, "infeasible": 0, "failed_lemma3": 0, "budget_exceeded": 0}
    counterexamples, violations, rows = [], [], []
    if args.jobs > 1:
        pool = ProcessPoolExecutor(args.jobs)
        results = pool.map(work, ns, chunksize=16)
    else:
        pool = None
        results = map(work, ns)
    try:
        for row in results:  # map yields in input order
            out.line(_scan_line(row))
            status = row.outcome.status.value
            counts[status] += 1
            if not row.lemma3_passes:
                counts["failed_lemma3"] += 1
            if row.counterexample:
                counterexamples.append(row.n)
            if row.lemma3_violation:
                violations.append(row.n)
            rows.append({
                "n": row.n,
                "lemma3_passes": row.lemma3_passes,
                "p": row.p,
                "omega": row.omega,
                **outcome_payload(row.outcome),
            })
    finally:
        if pool is not None:
            pool.shutdown()
    out.results.update({
        "rows": rows,
        "summary": counts,
        "counterexamples": counterexamples,
        "lemma3_violations": violations,
    })
    out.line("summary: " + " ".join(f"{k}={v}" for k, v in counts.items()))
    out.line(f"counterexamples: {len(counterexamples)}")
    out.line(f"lemma3_violations: {len(violations)}")
    if counterexamples or violations:
        return EXIT_NEGATIVE
    if counts["budget_exceeded"]:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_verify_paper(args, out: Output) -> int:
    results = checks.run_checks()
    out.results["checks"] = [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]
    for name, ok, detail in results:
        out.line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    failed = [n for n, ok, _ in results if not ok]
    out.results["failed"] = failed
    out.line(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_NEGATIVE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--sieve-cap", type=int, default=DEFAULT_SIEVE_CAP,
                        help="largest lcm period simulated (default %(default)s)")
    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                          help="search node limit (default %(default)s)")
    budgeted.add_argument("--timeout", type=float, default=None,
                          help="optional wall-clock limit per search, seconds")

    parser = argparse.ArgumentParser(prog="cdcover", description="Coprime-disjoint congruence sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density-formula", parents=[common],
                       help="inclusion-exclusion density of a CD moduli set")
    p.add_argument("moduli", nargs="+", type=int)
    p.set_defaults(func=cmd_density_formula)

    p = sub.add_parser("check-cd", parents=[common], help="test a congruence set given as a:d pairs")
    p.add_argument("congruences", nargs="+")
    p.set_defaults(func=cmd_check_cd)

    p = sub.add_parser("decide", parents=[common, budgeted],
                       help="search for a CD residue assignment")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int, help="use the divisors > 1 of n")
    g.add_argument("--moduli", type=int, nargs="+")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("report", parents=[common], help="case analysis and bound for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("construct", parents=[common], help="explicit CD set for p^k or q*p^k")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("scan", parents=[common, budgeted],
                       help="search every n in a range (conjecture evidence)")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", parents=[common], help="run the golden checks")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "json")}
    out = Output(args.command, inputs, args.json)
    try:
        code = args.func(args, out)
    except UsageError as exc:
        if not args.json:
            parser.print_usage(sys.stderr)
        out.message = str(exc)
        out.finish("error")
        return EXIT_USAGE
    except PeriodTooLarge as exc:
        out.message = str(exc)
        out.finish("error")
        return EXIT_RESOURCE
    out.finish()
    return code


if __name__ == "__main__":
    sys.exit(main())
