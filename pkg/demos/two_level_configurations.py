"""Two levels in P^1 x P^2: how the column counts decide the ACM property.

Run with:  python3 demos/two_level_configurations.py
"""

import random

from multiacm import ab_partition, d_membership, has_star
from multiacm.lab.suites import example_configurations
from multiacm.oracle import acm_decide, acm_fast_paths

four, six, eight = example_configurations(random.Random("demo"))

for X in (four, six, eight):
    ab = ab_partition(X)
    member, _ = d_membership(ab.n0, ab.n1, 2)
    verdict = acm_decide(X)
    fast = acm_fast_paths(X)
    print(f"{len(X)} points: star={has_star(X)} N0={ab.n0} N1={ab.n1} N1 in D={member}")
    print(f"   combinatorial prediction {fast.decision} via {fast.fast_path}; algebra says {verdict.decision}")
    if verdict.certificate_kind == "regular-sequence":
        for ell in verdict.certificate.forms:
            print(f"   regular element {ell}")
    else:
        print(f"   Artinian lengths {verdict.certificate.lengths} exceed {len(X)}")

# Adding one column to both levels moves N1 from 1 to 2, which leaves D; one more
# column brings it back to 3, which is in D again.
