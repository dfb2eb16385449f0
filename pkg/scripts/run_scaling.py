#!/usr/bin/env python3
"""Time the saturation checks on growing interval automata and print the
doubling ratios; quasi-linear behavior keeps them near 2."""

import argparse
import sys
import time

from rvacheck.check import check_rva_dim1, check_rva_parallel
from rvacheck.oracle import gen_interval_rva


def measure(check, aut, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        verdict = check(aut)
        elapsed = time.perf_counter() - t0
        assert verdict.answer
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[20000, 40000, 80000, 160000])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    warm = gen_interval_rva(min(args.sizes))
    check_rva_dim1(warm)
    check_rva_parallel(warm)

    header = f"{'states':>8} {'dim1 (s)':>10} {'ratio':>6} {'parallel (s)':>13} {'ratio':>6}"
    print(header)
    prev = {"dim1": None, "parallel": None}
    for n in args.sizes:
        aut = gen_interval_rva(n)
        t_dim1 = measure(check_rva_dim1, aut, args.repeats)
        t_par = measure(check_rva_parallel, aut, args.repeats)
        r_dim1 = "" if prev["dim1"] is None else f"{t_dim1 / prev['dim1']:.2f}"
        r_par = "" if prev["parallel"] is None else f"{t_par / prev['parallel']:.2f}"
        print(f"{n:>8} {t_dim1:>10.3f} {r_dim1:>6} {t_par:>13.3f} {r_par:>6}")
        prev = {"dim1": t_dim1, "parallel": t_par}
    return 0


if __name__ == "__main__":
    sys.exit(main())
