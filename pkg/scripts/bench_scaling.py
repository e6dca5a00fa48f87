"""Step count and wall time of the expansion versus bit length.

    python scripts/bench_scaling.py --sizes 64 128 256 512 1024 --count 40
"""

import argparse
import statistics

from foursq.cli import METHODS, bench


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    parser.add_argument("--count", type=int, default=30)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--method", choices=["hurwitz", "quaternion"], default="hurwitz")
    args = parser.parse_args()

    means = []
    print(f"{'bits':>5} {'mean steps':>11} {'sd':>6} {'steps/bit':>10} {'witness ms':>11} {'expand ms':>10}")
    for bits in args.sizes:
        rows = bench(bits, args.count, seed=args.seed + bits, method=METHODS[args.method])
        steps = [r.steps for r in rows]
        mean = statistics.mean(steps)
        means.append(mean)
        print(
            f"{bits:>5} {mean:>11.2f} {statistics.pstdev(steps):>6.2f} {mean / bits:>10.4f} "
            f"{statistics.mean(r.witness_ms for r in rows):>11.3f} {statistics.mean(r.expansion_ms for r in rows):>10.3f}"
        )
    if len(args.sizes) >= 2:
        fit = statistics.linear_regression(args.sizes, means)
        r2 = statistics.correlation(args.sizes, means) ** 2
        print(f"steps ~ {fit.slope:.4f} * bits + {fit.intercept:.2f}   (R^2 = {r2:.5f})")


if __name__ == "__main__":
    main()
