"""
Reading a 3-graph off one link
==============================

For L = {1,3} every graph on [n-1] is the link of exactly one free
3-graph; for L = {0,1,3} only the graphs whose complement has no triangle
and no induced 2-matching qualify.
"""

from math import comb

from lkfree import Hypergraph, complement, count_labeled, link_graph
from lkfree.constructions import is_triangle_and_matching_free, link_bijection_013, link_bijection_13

for n in (4, 5, 6):
    image = {link_bijection_13(Hypergraph(n - 1, 2, b)).bits for b in range(1 << comb(n - 1, 2))}
    print(f"n={n}: {len(image)} images, census {count_labeled(n, 3, 4, {1, 3}).labeled_count}")

for n in (5, 6, 7):
    m = n - 1
    domain = [A for A in (Hypergraph(m, 2, b) for b in range(1 << comb(m, 2)))
              if is_triangle_and_matching_free(complement(A))]
    ok = all(link_graph(link_bijection_013(A), n) == A for A in domain)
    print(f"n={n}: {len(domain)} admissible links (round trip {ok}), "
          f"census {count_labeled(n, 3, 4, {0, 1, 3}).labeled_count}")
