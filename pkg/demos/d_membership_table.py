"""Which B-column counts N1 are admissible for a given N0.

Run with:  python3 demos/d_membership_table.py [N0] [n]
"""

import sys
from math import comb

from multiacm import d_membership

n0 = int(sys.argv[1]) if len(sys.argv) > 1 else 4
n = int(sys.argv[2]) if len(sys.argv) > 2 else 2

k = n0
while comb(k, n) < 40:
    block = range(comb(k, n), comb(k + 1, n))
    row = " ".join(f"{v:3d}" if d_membership(n0, v, n)[0] else "  x" for v in block)
    print(f"{comb(k, n):3d}..{comb(k + 1, n) - 1:3d}: {row}")
    k += 1
