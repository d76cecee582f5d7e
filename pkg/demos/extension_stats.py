"""
How many ways to redo one vertex
================================

d(a, n) is the largest number of free 3-graphs that agree with a fixed one
everywhere except on triples containing {1..a}.  Exact values for
L = {1,4}, compared with the product bound from the smaller case and with
the link bound 2^k n.
"""

from math import prod

from lkfree import count_labeled, max_d
from lkfree.bounds import linkgraph_bound

L = {1, 4}
d1 = {n: max_d(1, n, 3, 4, L).value for n in range(3, 7)}
d2 = {n: max_d(2, n, 3, 4, L).value for n in range(3, 7)}
for n in range(3, 7):
    print(f"n={n}: d(1,n)={d1[n]:>3}  d(2,n)={d2[n]}  "
          f"prod d(2,v)={prod(d2[v] for v in range(3, n + 1)):>4}  "
          f"2^k n={2 ** 4 * n if n > 4 else 2 ** 4}")

# one vertex at a time: f(n) <= d(1,n) f(n-1)
f5, f6 = (count_labeled(n, 3, 4, L).labeled_count for n in (5, 6))
print(f"f(6)={f6} <= d(1,6) f(5) = {d1[6] * f5}")

# sampling gives a lower estimate without the full grouping
sampled = max_d(2, 6, 3, 4, L, mode="sample", seed=0, samples=32).value
print(f"sampled d(2,6) >= {sampled} (exact {d2[6]}); link bound admits it: {linkgraph_bound(6, 4).admits(d2[6])}")
