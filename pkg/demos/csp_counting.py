"""
Two-valued constraint problems
==============================

Every pair of variables carries one of three constraints: the two values
must agree (MIXED is forbidden), they may not both be 0, or they may not
both be 1.  Such a system never has more than m + 1 solutions.
"""

import random
from collections import Counter

from lkfree.csp import all_csps, count_satisfying, enumerate_satisfying, extremal_csp, random_csp

# the extremal example: no two variables may both be 1
csp = extremal_csp(4)
print("extremal m=4:", ["".join(map(str, g)) for g in enumerate_satisfying(csp)])

# how the counts spread over all 3^6 systems on four variables
spread = Counter(count_satisfying(c) for c in all_csps(4))
print("m=4 count histogram:", dict(sorted(spread.items())))

# random systems are usually far from the bound
rng = random.Random(1)
for m in (5, 10, 15, 20):
    counts = [count_satisfying(random_csp(m, rng)) for _ in range(200)]
    print(f"m={m:>2}: max {max(counts)}, bound {m + 1}, unsatisfiable {counts.count(0)}/200")
