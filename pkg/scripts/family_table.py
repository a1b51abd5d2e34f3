#!/usr/bin/env python3
"""Tabulate tau-parity verdicts for Kalman loop powers over fly families.

For each multiset of summands drawn from {3, 7, 9} (sizes 1..3) the fly
tangles are concatenated with a bare trefoil, and the loop monodromy raised
to j = 1, 2, 3 is tested for nontrivial action on degree-0 homology.

Usage: python3 scripts/family_table.py [--powers 1,2,3]
"""

import argparse
import sys

from legch.obstruction import family_dga, family_verdicts
from legch.verify import fly_multisets


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--powers", default="1,2,3", help="comma-separated loop powers")
    args = parser.parse_args()
    powers = tuple(int(x) for x in args.powers.split(",") if x)

    print(f"{'fly':<12} {'l(W)':>6}  " + "  ".join(f"{'j=' + str(j):>10}" for j in powers))
    all_nontrivial = True
    for summands in fly_multisets():
        _, fly_word = family_dga(summands)
        verdicts = family_verdicts(summands, powers)
        cells = []
        for j in powers:
            v = verdicts[j]
            cells.append(f"{v.tau_value:>6} {'odd' if v.tau_value % 2 else 'even'}")
            all_nontrivial = all_nontrivial and v.conclusion == "nontrivial"
        label = "#".join(str(n) for n in summands)
        print(f"{label:<12} {fly_word.length():>6}  " + "  ".join(cells))
    print()
    print(
        "all verdicts nontrivial"
        if all_nontrivial
        else "WARNING: some verdicts inconclusive"
    )
    return 0 if all_nontrivial else 1


if __name__ == "__main__":
    sys.exit(main())
