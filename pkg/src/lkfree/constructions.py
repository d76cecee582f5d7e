"""Explicit families: the Turan-type 3-graph C_n, its linear-transversal
deletions, greedy partial Steiner systems, complete r-partite graphs, and the
link-graph bijections for the lists {1,3} and {0,1,3}.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .core import Hypergraph, HypergraphError, complement, rank0
from .freeness import ForbiddenList, is_lk_free

STRATEGIES = ("colex_first", "seeded_random")


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Tripartition:
    """Three classes partitioning [n]; sizes differ by at most one."""

    classes: tuple

    def __post_init__(self):
        cls = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", cls)
        if len(cls) != 3:
            raise ConstructionError("need exactly three classes")
        union = set().union(*cls)
        if sum(map(len, cls)) != len(union) or union != set(range(1, len(union) + 1)):
            raise ConstructionError("classes must partition [n]")
        sizes = [len(c) for c in cls]
        if max(sizes) - min(sizes) > 1:
            raise ConstructionError(f"unbalanced classes {sizes}")

    @property
    def n(self):
        return sum(map(len, self.classes))

    def class_of(self, v) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise ConstructionError(f"vertex {v} not covered")


def balanced_partition(n, parts):
    """Round-robin classes: vertex v goes to class (v - 1) mod parts."""
    return tuple(frozenset(range(i + 1, n + 1, parts)) for i in range(parts))


def canonical_tripartition(n) -> Tripartition:
    return Tripartition(balanced_partition(n, 3))


def _is_cn_edge(e, part: Tripartition) -> bool:
    idx = sorted(part.class_of(v) for v in e)
    if len(set(idx)) == 3:
        return True
    if len(set(idx)) == 2:
        twice = max(idx, key=idx.count)
        once = min(idx, key=idx.count)
        return once == (twice + 1) % 3
    return False


def turan_cn(n, partition: Tripartition | None = None) -> Hypergraph:
    """C_n: transversal triples plus triples with two vertices in V_i and one in V_{i+1}."""
    if n < 3:
        raise ConstructionError("C_n needs n >= 3")
    part = partition or canonical_tripartition(n)
    if part.n != n:
        raise ConstructionError("partition is not on [n]")
    edges = [e for e in itertools.combinations(range(1, n + 1), 3) if _is_cn_edge(e, part)]
    return Hypergraph.from_edges(n, 3, edges)


def is_transversal(e, part: Tripartition) -> bool:
    return len({part.class_of(v) for v in e}) == 3


def is_linear(edges) -> bool:
    seen = set()
    for e in edges:
        for p in itertools.combinations(sorted(e), 2):
            if p in seen:
                return False
            seen.add(p)
    return True


def max_codegree(G: Hypergraph) -> int:
    """Largest number of edges through a single (r-1)-subset."""
    counts = {}
    for e in G.edges():
        for s in itertools.combinations(e, G.r - 1):
            counts[s] = counts.get(s, 0) + 1
    return max(counts.values(), default=0)


# --- greedy procedures -------------------------------------------------------

@dataclass
class GreedyTrace:
    edges: list
    strategy: str
    seed: int | None
    steps: int
    rejections: list = field(default_factory=list)  # candidates invalidated at each step
    kind: str = ""
    params: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({
            "kind": self.kind,
            "params": self.params,
            "strategy": self.strategy,
            "seed": self.seed,
            "steps": self.steps,
            "rejections": self.rejections,
            "edges": [list(e) for e in self.edges],
        }, sort_keys=True)

    def replay(self) -> "GreedyTrace":
        if self.kind == "linear_transversal":
            return greedy_linear_transversal(self.params["n"], self.strategy, self.seed)[1]
        if self.kind == "partial_steiner":
            return greedy_partial_steiner(self.params["n"], self.params["r"], self.strategy, self.seed)[1]
        raise ConstructionError(f"cannot replay trace of kind {self.kind!r}")


def _greedy(candidates, blocks, strategy, seed):
    """Pick candidates one at a time until none is valid.

    ``blocks(e)`` lists the keys claimed by e; a candidate is valid while none
    of its keys is claimed.
    """
    if strategy not in STRATEGIES:
        raise ConstructionError(f"unknown strategy {strategy!r}")
    rng = random.Random(seed)
    valid = list(candidates)
    chosen, rejections = [], []
    while valid:
        e = valid[0] if strategy == "colex_first" else valid[rng.randrange(len(valid))]
        chosen.append(e)
        claimed = set(blocks(e))
        before = len(valid)
        valid = [c for c in valid if claimed.isdisjoint(blocks(c))]
        rejections.append(before - len(valid) - 1)
    return chosen, rejections


def _colex(edges):
    return sorted(edges, key=lambda e: e[::-1])


def greedy_linear_transversal(n, strategy="colex_first", seed=None):
    """A maximal linear family of transversal triples of the canonical tripartition."""
    if n < 3:
        raise ConstructionError("need n >= 3")
    part = canonical_tripartition(n)
    cands = _colex(e for e in itertools.combinations(range(1, n + 1), 3) if is_transversal(e, part))
    chosen, rej = _greedy(cands, lambda e: itertools.combinations(e, 2), strategy, seed)
    trace = GreedyTrace(chosen, strategy, seed, len(chosen), rej, "linear_transversal", {"n": n})
    return Hypergraph.from_edges(n, 3, chosen), trace


def qn_member(n, family) -> Hypergraph:
    """C_n with the edges of a linear transversal family removed."""
    family = [tuple(sorted(e)) for e in (family.edges() if isinstance(family, Hypergraph) else family)]
    part = canonical_tripartition(n)
    bad = [e for e in family if len(e) != 3 or not is_transversal(e, part)]
    if bad:
        raise ConstructionError(f"non-transversal triple {bad[0]}")
    if not is_linear(family):
        raise ConstructionError("family is not linear")
    removed = Hypergraph.from_edges(n, 3, family)
    G = Hypergraph(n, 3, turan_cn(n).bits & ~removed.bits)
    if n >= 4 and not is_lk_free(G, ForbiddenList(4, 3, frozenset({1, 4}))):
        raise ConstructionError("internal error: Q(n) member is not ({1,4},4)-free")
    return G


def greedy_partial_steiner(n, r, strategy="colex_first", seed=None):
    """Greedy member of M(n, r): no (r-1)-subset lies in two edges."""
    if not n >= r >= 2:
        raise ConstructionError("need n >= r >= 2")
    cands = _colex(itertools.combinations(range(1, n + 1), r))
    chosen, rej = _greedy(cands, lambda e: itertools.combinations(e, r - 1), strategy, seed)
    trace = GreedyTrace(chosen, strategy, seed, len(chosen), rej, "partial_steiner", {"n": n, "r": r})
    return Hypergraph.from_edges(n, r, chosen), trace


def complete_r_partite(n, r) -> Hypergraph:
    if n < r:
        raise ConstructionError("need n >= r")
    parts = balanced_partition(n, r)
    cls = {v: i for i, p in enumerate(parts) for v in p}
    edges = [e for e in itertools.combinations(range(1, n + 1), r) if len({cls[v] for v in e}) == r]
    return Hypergraph.from_edges(n, r, edges)


def has_even_edge_count(G: Hypergraph) -> bool:
    return G.num_edges() % 2 == 0


# --- simple graphs -----------------------------------------------------------

def _adjacency(H: Hypergraph):
    if H.r != 2:
        raise ConstructionError("expected a simple graph (r = 2)")
    adj = {v: set() for v in range(1, H.n + 1)}
    for a, b in H.edges():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def find_triangle(H: Hypergraph):
    adj = _adjacency(H)
    for a, b, c in itertools.combinations(range(1, H.n + 1), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            return (a, b, c)
    return None


def find_induced_matching(H: Hypergraph):
    """Two edges ab, cd on four distinct vertices with no other edge among them."""
    adj = _adjacency(H)
    edges = H.edges()
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if len({a, b, c, d}) == 4 and not any(y in adj[x] for x in (a, b) for y in (c, d)):
            return ((a, b), (c, d))
    return None


def is_triangle_and_matching_free(H: Hypergraph) -> bool:
    return find_triangle(H) is None and find_induced_matching(H) is None


def _graph_complement(A: Hypergraph) -> Hypergraph:
    if A.r != 2:
        raise ConstructionError("expected a simple graph (r = 2)")
    return complement(A)


def _triple_edges(A: Hypergraph, t) -> int:
    return sum(A.bits >> rank0((x - 1, y - 1)) & 1 for x, y in itertools.combinations(t, 2))


def _lift(A: Hypergraph, interior) -> Hypergraph:
    """3-graph on [m+1] whose link at m+1 is A and whose triples in [m] obey ``interior``."""
    m = A.n
    edges = [t for t in itertools.combinations(range(1, m + 1), 3) if interior(_triple_edges(A, t))]
    edges += [(a, b, m + 1) for a, b in A.edges()]
    return Hypergraph.from_edges(m + 1, 3, edges)


def link_bijection_13(H: Hypergraph) -> Hypergraph:
    """The ({1,3},4)-free 3-graph whose link at the last vertex is H.

    A triple inside [n-1] is an edge exactly when H spans an odd number of
    edges on it.
    """
    if H.r != 2:
        raise ConstructionError("expected a simple graph (r = 2)")
    return _lift(H, lambda c: c % 2 == 1)


def link_bijection_013(A: Hypergraph) -> Hypergraph:
    """The ({0,1,3},4)-free 3-graph whose link at the last vertex is A.

    Needs the complement of A to have no triangle and no induced 2-matching;
    a violating witness is reported otherwise.
    """
    Ac = _graph_complement(A)
    tri = find_triangle(Ac)
    if tri is not None:
        raise ConstructionError(f"complement of A has triangle {tri}")
    mat = find_induced_matching(Ac)
    if mat is not None:
        raise ConstructionError(f"complement of A has induced matching {mat}")
    return _lift(A, lambda c: c in (1, 3))


def chain_neighborhoods(B: Hypergraph, P, Q) -> bool:
    """Whether the neighbourhoods of the P-side vertices are nested."""
    P, Q = set(P), set(Q)
    if P & Q or P | Q != set(range(1, B.n + 1)):
        raise ConstructionError("P and Q must partition the vertex set")
    adj = _adjacency(B)
    for a, b in B.edges():
        if (a in P) == (b in P):
            raise ConstructionError(f"edge {(a, b)} lies inside one part")
    nbhd = [adj[p] for p in sorted(P)]
    return all(x <= y or y <= x for x, y in itertools.combinations(nbhd, 2))


def three_coloring_witness(H: Hypergraph):
    """Three independent sets {u} + N(v), {v} + N(u), rest, for the first edge uv."""
    if H.num_edges() == 0:
        return (frozenset(range(1, H.n + 1)), frozenset(), frozenset())
    if not is_triangle_and_matching_free(H):
        raise ConstructionError("graph has a triangle or an induced 2-matching")
    adj = _adjacency(H)
    u, v = H.edges()[0]
    a1 = frozenset({u} | adj[v])
    a2 = frozenset({v} | adj[u])
    a3 = frozenset(range(1, H.n + 1)) - a1 - a2
    for part in (a1, a2, a3):
        if any(y in adj[x] for x, y in itertools.combinations(part, 2)):
            raise ConstructionError("internal error: colour class is not independent")
    return (a1, a2, a3)


def clique_plus_isolated_family(n):
    """The complete 3-graph and the n cliques on n-1 vertices plus an isolated vertex."""
    if n < 5:
        raise ConstructionError("need n >= 5")
    out = [Hypergraph.complete(n, 3)]
    for iso in range(1, n + 1):
        rest = [v for v in range(1, n + 1) if v != iso]
        out.append(Hypergraph.from_edges(n, 3, itertools.combinations(rest, 3)))
    return out


# Up to isomorphism, the 4-vertex graphs whose complement has no triangle and no induced 2-matching.
FIG2_GRAPHS = (
    ((1, 2), (3, 4)),                                   # two disjoint edges
    ((1, 2), (1, 3), (2, 3)),                           # triangle and isolated vertex
    ((1, 2), (2, 3), (3, 4)),                           # path
    ((1, 2), (1, 3), (2, 3), (3, 4)),                   # triangle with pendant edge
    ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4)),           # K4 minus an edge
    ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),   # K4
)


def fig2_graphs():
    return [Hypergraph.from_edges(4, 2, es) for es in FIG2_GRAPHS]
