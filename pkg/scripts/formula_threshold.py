"""Compare "inclusion-exclusion over divisors >= 1" with the smallest-prime test.

If the formula reaches 1 then n cannot be non-intersecting, but not
conversely (n = 20 gives 19/20 and still fails). This tabulates both
directions up to --max and prints the smallest n of each kind.
"""

import argparse
from collections import Counter

from cdcover.density import density_formula
from cdcover.numtheory import divisors_gt1
from cdcover.structure import lemma3_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=10**4)
    args = ap.parse_args()

    tally = Counter()
    first = {}
    for n in range(2, args.max + 1):
        key = (density_formula(divisors_gt1(n)) >= 1, lemma3_check(n)[0])
        tally[key] += 1
        first.setdefault(key, n)

    print(f"{'formula>=1':>10} {'lemma3':>7} {'count':>7} {'first n':>8}")
    for (ge1, passes), count in sorted(tally.items()):
        print(f"{str(ge1):>10} {str(passes):>7} {count:>7} {first[(ge1, passes)]:>8}")
    assert (True, True) not in tally, "formula >= 1 for a lemma3-passing n"


if __name__ == "__main__":
    main()
