"""Searching for ACM configurations with N1 outside D when level images may overlap.

Run with:  python3 demos/counterexample_search.py [budget]

Every flagged case is regenerated from its seed and re-decided over Q before it
counts. The cases found so far share one shape: one level image contains all the
others, so the configuration is a basic double link of the remaining levels,
which keeps it ACM no matter how large N0 becomes.
"""

import sys

from multiacm import Configuration, ab_partition, d_membership
from multiacm.algebra import RationalField
from multiacm.lab.scan import scan

budget = int(sys.argv[1]) if len(sys.argv) > 1 else 30
report = scan("conj-4.10", budget, seed=0)
print(f"{report.cases} cases, {report.failed} confirmed candidates, {report.wall_time:.1f}s")
for cand in report.candidates:
    X = Configuration.from_coords(cand.spec.shape, cand.coords, RationalField())
    ab = ab_partition(X)
    print(f"\n{cand.case_seed}: shape {cand.spec.shape}, {len(X)} points")
    print(f"  N0={ab.n0} N1={ab.n1} in D: {d_membership(ab.n0, ab.n1, cand.spec.shape[1])[0]}")
    print(f"  verdicts: GF(p) {cand.prime_verdict}, Q {cand.rational_verdict}, replays {cand.replays}")
    for Pj, Y in ab.levels:
        print(f"  level {Pj}: {len(Y)} columns")
