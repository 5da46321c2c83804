"""Search every n in a range and write one CSV row per n.

    python scripts/scan_conjecture.py --max 2000 --out scan.csv

Lemma3-failing n are searched every --failing-stride-th time (0 disables).
"""

import argparse
import csv
import sys
import time

from cdcover.search import Budget, scan_conjecture


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min", type=int, default=2)
    ap.add_argument("--max", type=int, default=1000)
    ap.add_argument("--budget", type=int, default=10**7)
    ap.add_argument("--failing-stride", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    t0 = time.time()
    rows = scan_conjecture(args.max, Budget(args.budget), n_min=args.min,
                           failing_stride=args.failing_stride)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["n", "lemma3_passes", "p", "omega_n_over_p", "status", "nodes"])
    for r in rows:
        status = r.outcome.status.value if r.outcome else "not_searched"
        nodes = r.outcome.nodes_explored if r.outcome else ""
        w.writerow([r.n, int(r.lemma3_passes), r.p, r.omega, status, nodes])
    if fh is not sys.stdout:
        fh.close()

    bad = [r.n for r in rows if r.counterexample or r.lemma3_violation]
    print(f"scanned {len(rows)} n in {time.time() - t0:.1f}s; "
          f"counterexamples/violations: {bad or 'none'}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
