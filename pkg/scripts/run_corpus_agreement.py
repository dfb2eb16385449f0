#!/usr/bin/env python3
"""Sweep a seeded random corpus and compare every check with the word-level
saturation search.

Any disagreement is printed with the offending automaton serialized, so a
failure here is directly reproducible.
"""

import argparse
import itertools
import sys
import time

from rvacheck import serialize_automaton
from rvacheck.check import (
    check_rva_parallel,
    check_rva_sequential,
)
from rvacheck.oracle import expand_witness, gen_random_weak, saturation_oracle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--per-combo", type=int, default=128,
                        help="seeds per (base, dim, encoding) combination")
    parser.add_argument("--max-states", type=int, default=8)
    args = parser.parse_args()

    total = disagreements = saturated = 0
    start = time.time()
    for b, d in itertools.product((2, 3), (1, 2)):
        for enc in ("parallel", "sequential"):
            check = check_rva_parallel if enc == "parallel" else check_rva_sequential
            for seed in range(args.per_combo):
                n = 1 + seed % args.max_states
                aut = gen_random_weak(n, b, d, enc, seed)
                verdict = check(aut)
                oracle = saturation_oracle(aut)
                total += 1
                saturated += verdict.answer
                if verdict.answer != oracle.answer:
                    disagreements += 1
                    print(f"DISAGREEMENT b={b} d={d} {enc} seed={seed}")
                    print(f"  check:  {verdict.to_dict()}")
                    print(f"  oracle: {oracle.to_dict()}")
                    print(serialize_automaton(aut))
                elif not verdict.answer:
                    expansion = expand_witness(verdict, enc)
                    if expansion is not None and expansion.kind == "equal-value-pair":
                        assert expansion.verify(verdict.minimized)
    elapsed = time.time() - start
    print(
        f"{total} automata checked in {elapsed:.1f}s: "
        f"{saturated} saturated, {disagreements} disagreements"
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
