"""Measure finder work against edge count on C_{2k}-free families.

Writes one CSV per family and prints the fitted log-log slope next to the
target exponent 2k/(k+1).

    python scripts/scaling_study.py --out results/
"""

import argparse
from pathlib import Path

from evencycle.bench import bench_scaling, fit_slope, rows_to_csv

FAMILIES = {
    "polarity": (2, [7, 11, 13, 17, 19, 23, 29, 31]),
    "highgirth:6": (2, [100, 200, 400, 800, 1600]),
    "highgirth:8": (3, [100, 200, 400, 800, 1600]),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    print(f"{'family':<14} {'k':>2} {'slope(work)':>12} {'slope(time)':>12} {'target':>7}")
    for family, (k, sizes) in FAMILIES.items():
        rows = bench_scaling(family, k, sizes, seed=args.seed, repetitions=args.reps)
        (args.out / f"{family.replace(':', '_')}_k{k}.csv").write_text(rows_to_csv(rows))
        work = fit_slope(rows)
        wall = fit_slope(rows, "wall_time_ns")
        print(f"{family:<14} {k:>2} {work:>12.3f} {wall:>12.3f} {2 * k / (k + 1):>7.3f}")


if __name__ == "__main__":
    main()
