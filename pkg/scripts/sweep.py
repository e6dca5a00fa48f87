"""Decompose every n up to a bound and tally which route produced each answer.

Also counts how often the theorem path lands on a norm exactly equal to w.

    python scripts/sweep.py --limit 100000
"""

import argparse
import collections
import time
from math import isqrt

from foursq.congruence import solve_root
from foursq.hcf import Classification, hcf_from_root, select_index
from foursq.squares import decompose, verify


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--limit", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    start = time.perf_counter()
    methods = collections.Counter()
    for n in range(1, args.limit + 1):
        rep = decompose(n, args.seed)
        assert verify(rep), n
        methods[rep.method.value] += 1
    classes = collections.Counter()
    for w in range(3, args.limit + 1, 2):
        if isqrt(w) ** 2 == w:
            continue
        wit = solve_root(w, args.seed)
        sel = select_index(hcf_from_root(w, wit.x, wit.y))
        classes[sel.classification.value] += 1
    print(f"decomposed 1..{args.limit} in {time.perf_counter() - start:.1f} s")
    for name, count in sorted(methods.items()):
        print(f"  {name:<18} {count}")
    print("selection classes for odd non-square w:", dict(classes))
    print("strict share:", f"{classes[Classification.STRICT.value] / max(1, sum(classes.values())):.4f}")


if __name__ == "__main__":
    main()
