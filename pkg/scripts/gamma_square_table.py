#!/usr/bin/env python3
"""Tabulate gamma^2 for quadratic algebras of increasing size.

gamma^2 is the scalar -(1/48) sum f_abc^2; the table cross-checks the
closed form against the actual Clifford product for block sums of
so(3), where the sum grows linearly in the number of blocks.

Usage: python scripts/gamma_square_table.py [--blocks K]
"""

import argparse
import sys
from fractions import Fraction

from weil.lie import BilinearForm, LieData
from weil.linalg import Matrix, format_scalar
from weil.quantum import gamma_squared


def so3_blocks(k):
    entries = {}
    eps = {(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 1): -1}
    for block in range(k):
        off = 3 * block
        for (a, b, c), v in eps.items():
            entries[(a + off, b + off, c + off)] = Fraction(v)
    n = 3 * k
    return LieData(n, entries, form=BilinearForm(Matrix.identity(n)),
                   name=f"so3^{k}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--blocks", type=int, default=4)
    args = parser.parse_args(argv)

    print("blocks  dim  gamma^2")
    for k in range(args.blocks + 1):
        lie = so3_blocks(k)
        value = gamma_squared(lie)
        assert value == Fraction(-k, 8)
        print(f"{k:>6}  {lie.dim:>3}  {format_scalar(value)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
