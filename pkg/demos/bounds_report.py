"""
Upper and lower bounds in log scale
===================================

All bounds are evaluated as base-2 exponents, so they stay usable at sizes
where the counts themselves could never be written down.
"""

import math

from lkfree import count_labeled
from lkfree.bounds import barnes_g_log, qn_lower_log, steiner_lower_log, theorem_main_upper
from lkfree.freeness import all_lists, is_3_good

n = 6
bound = theorem_main_upper(n, 3, 4)
print(f"upper exponent at n={n}: {float(bound):.1f}")
for L in all_lists():
    if is_3_good(L):
        c = count_labeled(n, 3, 4, L).labeled_count
        print(f"  {L.label():>12}: log2 f = {math.log2(c) if c else float('-inf'):6.2f}")

# the explicit Q(n) estimate says nothing until log2 n passes 27
for n in (30, 10 ** 4, 10 ** 9):
    q = qn_lower_log(n)
    print(f"Q(n) lower exponent at n={n}: {'vacuous' if q.vacuous else f'{float(q):.4g}'}")

for n in (10, 100, 1000):
    print(f"n={n}: Steiner lower {float(steiner_lower_log(n, 3)):.4g}, "
          f"1!2!...(n-1)! = 2^{float(barnes_g_log(n)):.4g}")
