#!/usr/bin/env python3
"""Scan the quantum basic-vs-flat evidence tables over the catalog.

Whether every quantum basic element commutes with the quantum curvature
is open; this script prints the observed truncated-degree evidence for
each catalog algebra that admits the quantum construction, side by side
with the classical tables where the containment is a theorem.

Usage: python scripts/open_question_scan.py [--max-degree N]
"""

import argparse
import sys
import time

from weil import builtin
from weil.flat import inclusion_report


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=2)
    args = parser.parse_args(argv)

    for name in ("abelian(2)", "abelian(3)", "so3"):
        alg = builtin(name)
        for rep_name in sorted(alg.reps):
            rep = alg.reps[rep_name]
            for context in ("classical", "quantum"):
                t0 = time.time()
                report = inclusion_report(context, alg.lie, rep, args.max_degree)
                tag = "theorem" if context == "classical" else "OBSERVED"
                print(f"{name} rep {rep_name} ({context}, {time.time() - t0:.1f}s)")
                for row in report["per_degree"]:
                    print(f"  deg {row['deg']}: basic {row['dim_basic']:>2}  "
                          f"flat {row['dim_flat']:>2}  "
                          f"basic<flat [{tag}]: {row['basic_subset_flat']}  "
                          f"module=flat: {row['s_basic_equals_flat']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
