"""
Counting free 3-graphs
======================

Exact values of f(n, 3, 4, L) for every list L of forbidden 4-set edge
counts, side by side with the count for the complementary list.
"""

from lkfree import count_labeled
from lkfree.freeness import all_lists, complement_list

ns = (4, 5, 6)
print(f"{'L':>12} " + " ".join(f"{'n=' + str(n):>9}" for n in ns) + "   dual")
for L in all_lists():
    values = [count_labeled(n, 3, 4, L).labeled_count for n in ns]
    print(f"{L.label():>12} " + " ".join(f"{v:>9}" for v in values) + f"   {complement_list(L).label()}")

# complementing every edge turns an L-free graph into an L^c-free one,
# so each row matches the row of its dual list
rep = count_labeled(7, 3, 4, {1, 4}, workers=4)
print()
print("f(7, {1,4}) =", rep.labeled_count, f"({rep.node_count} search nodes, {rep.elapsed:.2f}s)")
