"""r-uniform hypergraphs on [n] stored as bitsets over colex-ranked r-subsets.

Vertices are 1-based everywhere in the public API; helpers with a trailing
``0`` work on 0-based vertex tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

MAX_BITS = 2 ** 32
CANONICAL_MAX_N = 10


class HypergraphError(ValueError):
    pass


# --- colex ranking ---------------------------------------------------------

def rank0(s) -> int:
    """Colex rank of a strictly increasing tuple of 0-based vertices."""
    return sum(comb(x, i) for i, x in enumerate(s, 1))


def unrank0(rank: int, r: int) -> tuple:
    out = []
    for i in range(r, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        out.append(c)
        rank -= comb(c, i)
    return tuple(reversed(out))


def rank_subset(s, n: int, r: int) -> int:
    """Colex rank of the r-subset ``s`` of [n] (1-based vertices)."""
    s = tuple(s)
    if len(s) != r:
        raise HypergraphError(f"expected {r} vertices, got {len(s)}")
    if any(b <= a for a, b in zip(s, s[1:])):
        raise HypergraphError(f"subset {s} is not strictly increasing")
    if s and (s[0] < 1 or s[-1] > n):
        raise HypergraphError(f"subset {s} not inside [1, {n}]")
    return rank0(tuple(v - 1 for v in s))


def unrank_subset(rank: int, n: int, r: int) -> tuple:
    if not 0 <= rank < comb(n, r):
        raise HypergraphError(f"rank {rank} outside [0, C({n},{r}))")
    return tuple(v + 1 for v in unrank0(rank, r))


@lru_cache(maxsize=None)
def colex_subsets0(n: int, r: int) -> tuple:
    """All r-subsets of range(n) in colex order (index == rank)."""
    subsets = sorted(itertools.combinations(range(n), r), key=lambda s: s[::-1])
    return tuple(subsets)


@lru_cache(maxsize=None)
def subset_masks(n: int, k: int, r: int) -> tuple:
    """(k-subset, bitmask of its r-subsets) for every k-subset of [n], colex order."""
    out = []
    for ks in colex_subsets0(n, k):
        mask = 0
        for e in itertools.combinations(ks, r):
            mask |= 1 << rank0(e)
        out.append((ks, mask))
    return tuple(out)


def _mask_of(S0, r: int) -> int:
    mask = 0
    for e in itertools.combinations(sorted(S0), r):
        mask |= 1 << rank0(e)
    return mask


# --- the hypergraph value type ---------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """An r-graph on [n]; bit ``i`` of ``bits`` is the r-subset of colex rank i."""

    n: int
    r: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise HypergraphError(f"invalid parameters n={self.n}, r={self.r}")
        if self.r > self.n:
            raise HypergraphError(f"uniformity r={self.r} exceeds n={self.n}")
        if self.size > MAX_BITS:
            raise HypergraphError(f"C({self.n},{self.r}) exceeds the 2^32 bit limit")
        if self.bits < 0 or self.bits >> self.size:
            raise HypergraphError("edge bitset has bits beyond C(n, r)")

    @property
    def size(self) -> int:
        return comb(self.n, self.r)

    @classmethod
    def from_edges(cls, n, r, edges):
        bits = 0
        for e in edges:
            e = tuple(sorted(e))
            idx = rank_subset(e, n, r)
            if bits >> idx & 1:
                raise HypergraphError(f"duplicate edge {e}")
            bits |= 1 << idx
        return cls(n, r, bits)

    @classmethod
    def empty(cls, n, r):
        return cls(n, r, 0)

    @classmethod
    def complete(cls, n, r):
        return cls(n, r, (1 << comb(n, r)) - 1)

    def num_edges(self) -> int:
        return self.bits.bit_count()

    def __len__(self):
        return self.num_edges()

    def edge_ranks(self):
        b, i = self.bits, 0
        while b:
            if b & 1:
                yield i
            b >>= 1
            i += 1

    def edges0(self):
        return [unrank0(i, self.r) for i in self.edge_ranks()]

    def edges(self):
        """Edges as sorted 1-based tuples, in colex order."""
        return [tuple(v + 1 for v in e) for e in self.edges0()]

    def has_edge(self, e) -> bool:
        return bool(self.bits >> rank_subset(tuple(sorted(e)), self.n, self.r) & 1)

    def degree(self, v: int) -> int:
        _check_vertex(v, self.n)
        return sum(1 for e in self.edges() if v in e)

    def permuted(self, perm) -> "Hypergraph":
        """Relabel vertex v as perm[v-1] (perm is a permutation of 1..n)."""
        p0 = [x - 1 for x in perm]
        if sorted(p0) != list(range(self.n)):
            raise HypergraphError("not a permutation of [n]")
        return Hypergraph(self.n, self.r, _permute_bits(self.edges0(), p0))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.r}"]
        lines += [" ".join(map(str, e)) for e in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 2:
            raise HypergraphError("first line must be 'n r'")
        n, r = map(int, rows[0])
        bits = 0
        for row in rows[1:]:
            if len(row) != r:
                raise HypergraphError(f"edge {row} does not have {r} vertices")
            idx = rank_subset(tuple(int(x) for x in row), n, r)
            if bits >> idx & 1:
                raise HypergraphError(f"duplicate edge {row}")
            bits |= 1 << idx
        return cls(n, r, bits)


def _check_vertex(v, n):
    if not 1 <= v <= n:
        raise HypergraphError(f"vertex {v} not in [1, {n}]")


def _permute_bits(edges0, p0) -> int:
    bits = 0
    for e in edges0:
        bits |= 1 << rank0(sorted(p0[x] for x in e))
    return bits


# --- operations --------------------------------------------------------------

def _subset0(S, n, r):
    S0 = sorted({v - 1 for v in S})
    if len(S0) != len(tuple(S)):
        raise HypergraphError("vertex set has duplicates")
    for v in S0:
        _check_vertex(v + 1, n)
    if len(S0) < r:
        raise HypergraphError(f"|S|={len(S0)} is smaller than r={r}")
    return S0


def induced_edge_count(G: Hypergraph, S) -> int:
    S0 = _subset0(S, G.n, G.r)
    return (G.bits & _mask_of(S0, G.r)).bit_count()


def complement(G: Hypergraph) -> Hypergraph:
    return Hypergraph(G.n, G.r, G.bits ^ ((1 << G.size) - 1))


def induced_subhypergraph(G: Hypergraph, S) -> Hypergraph:
    S0 = _subset0(S, G.n, G.r)
    pos = {v: i for i, v in enumerate(S0)}
    bits = 0
    for e in itertools.combinations(S0, G.r):
        if G.bits >> rank0(e) & 1:
            bits |= 1 << rank0(tuple(pos[v] for v in e))
    return Hypergraph(len(S0), G.r, bits)


def link_graph(G: Hypergraph, v: int) -> Hypergraph:
    """(r-1)-graph on the n-1 vertices other than v, order-preservingly relabeled."""
    _check_vertex(v, G.n)
    if G.r < 2:
        raise HypergraphError("link graphs need r >= 2")
    v0 = v - 1
    bits = 0
    for e in G.edges0():
        if v0 in e:
            rest = tuple(x if x < v0 else x - 1 for x in e if x != v0)
            bits |= 1 << rank0(rest)
    return Hypergraph(G.n - 1, G.r - 1, bits)


def canonical_form(G: Hypergraph) -> Hypergraph:
    """Lexicographically minimal relabeling (smallest integer bitset).

    Only relabelings that list vertices by non-increasing degree are tried;
    that set of relabelings is itself isomorphism invariant, so the minimum
    over it is a canonical form.  Guarded to n <= CANONICAL_MAX_N.
    """
    if G.n > CANONICAL_MAX_N:
        raise HypergraphError(f"canonical_form supports n <= {CANONICAL_MAX_N}")
    edges0 = G.edges0()
    if not edges0 or len(edges0) == G.size:
        return G
    deg = [0] * G.n
    for e in edges0:
        for x in e:
            deg[x] += 1
    levels = sorted(set(deg), reverse=True)
    groups = [[v for v in range(G.n) if deg[v] == d] for d in levels]
    slots = []
    start = 0
    for grp in groups:
        slots.append(range(start, start + len(grp)))
        start += len(grp)
    best = None
    for choice in itertools.product(*(itertools.permutations(s) for s in slots)):
        p0 = [0] * G.n
        for grp, targets in zip(groups, choice):
            for v, t in zip(grp, targets):
                p0[v] = t
        bits = _permute_bits(edges0, p0)
        if best is None or bits < best:
            best = bits
    return Hypergraph(G.n, G.r, best)


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    if (G.n, G.r, G.num_edges()) != (H.n, H.r, H.num_edges()):
        return False
    return canonical_form(G) == canonical_form(H)
