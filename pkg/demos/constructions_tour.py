"""
Explicit constructions
======================

The tripartite 3-graph C_n, its Q(n) relatives obtained by deleting a
linear family of transversal triples, and greedy partial Steiner systems.
"""

from collections import Counter

from lkfree.constructions import (greedy_linear_transversal, greedy_partial_steiner, max_codegree,
                                  qn_member, turan_cn)
from lkfree.core import subset_masks
from lkfree.freeness import ForbiddenList, is_lk_free

L = ForbiddenList(4, 3, {1, 4})

for n in (6, 9, 12):
    G = turan_cn(n)
    profile = Counter((G.bits & m).bit_count() for _, m in subset_masks(n, 4, 3))
    print(f"C_{n}: {G.num_edges()} edges, 4-set edge counts {dict(sorted(profile.items()))}, "
          f"free: {bool(is_lk_free(G, L))}")

# every seed gives a different maximal linear family, and every deletion stays free
for seed in range(3):
    fam, trace = greedy_linear_transversal(12, "seeded_random", seed)
    Q = qn_member(12, fam)
    print(f"seed {seed}: removed {trace.steps} triples, Q has {Q.num_edges()} edges, "
          f"free: {bool(is_lk_free(Q, L))}")

for n, r in ((20, 3), (15, 4), (12, 5)):
    M, trace = greedy_partial_steiner(n, r)
    print(f"M({n},{r}): {trace.steps} edges, max codegree {max_codegree(M)}")
