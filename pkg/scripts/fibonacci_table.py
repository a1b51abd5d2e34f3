#!/usr/bin/env python3
"""Print the path-matrix entry lengths against the Fibonacci prediction.

Usage: python3 scripts/fibonacci_table.py [MAX_N]
"""

import sys

from legch.builders import fibonacci_lengths, path_matrix


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    print(f"{'n':>3}  {'l(B11)':>8} {'l(B12)':>8} {'l(B21)':>8} {'l(B22)':>8}  match")
    ok = True
    for n in range(1, max_n + 1):
        got = path_matrix(n).lengths()
        want = fibonacci_lengths(n)
        match = got == want
        ok = ok and match
        print(
            f"{n:>3}  "
            + " ".join(f"{v:>8}" for v in got)
            + f"  {'yes' if match else 'NO, expected ' + str(want)}"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
