"""Forbidden edge-count lists and the (L, k)-freeness predicate."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import Hypergraph, HypergraphError, subset_masks


@dataclass(frozen=True)
class ForbiddenList:
    """A list L of forbidden induced edge counts on k-sets of an r-graph."""

    k: int
    r: int
    members: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(i) for i in self.members))
        if self.k <= self.r or self.r < 1:
            raise ValueError(f"need k > r >= 1, got k={self.k}, r={self.r}")
        bad = [i for i in self.members if not 0 <= i <= self.top]
        if bad:
            raise ValueError(f"list members {sorted(bad)} outside [0, {self.top}]")

    @property
    def top(self) -> int:
        return comb(self.k, self.r)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def __contains__(self, i):
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def label(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"

    def literal(self) -> str:
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str, k: int, r: int) -> "ForbiddenList":
        """Parse the comma-separated literal used on the command line, e.g. "1,4"."""
        text = text.strip().strip("{}")
        items = [t for t in (s.strip() for s in text.split(",")) if t]
        try:
            values = [int(t) for t in items]
        except ValueError:
            raise ValueError(f"bad list literal {text!r}") from None
        if len(set(values)) != len(values):
            raise ValueError(f"duplicate entries in list {text!r}")
        return cls(k, r, frozenset(values))


def all_lists(k=4, r=3):
    """Every subset of {0, ..., C(k, r)}, ordered by bitmask."""
    top = comb(k, r)
    for m in range(1 << (top + 1)):
        yield ForbiddenList(k, r, frozenset(i for i in range(top + 1) if m >> i & 1))


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    witness: tuple | None = None  # (k-subset, induced edge count), 1-based

    def __bool__(self):
        return self.free


def _check(G: Hypergraph, L: ForbiddenList):
    if G.r != L.r:
        raise HypergraphError(f"uniformity mismatch: graph r={G.r}, list r={L.r}")
    if L.k > G.n:
        raise HypergraphError(f"k={L.k} exceeds n={G.n}")


def is_lk_free(G: Hypergraph, L: ForbiddenList) -> FreenessReport:
    _check(G, L)
    bits, lm = G.bits, L.mask
    for ks, mask in subset_masks(G.n, L.k, G.r):
        c = (bits & mask).bit_count()
        if lm >> c & 1:
            return FreenessReport(False, (tuple(v + 1 for v in ks), c))
    return FreenessReport(True)


def is_lk_free_at(G: Hypergraph, L: ForbiddenList, v: int, within: int | None = None) -> FreenessReport:
    """Check only the k-sets that contain vertex v and lie inside [within].

    This is the recheck needed after vertex v was added to a graph whose
    restriction to the other vertices was already known to be free.
    """
    _check(G, L)
    within = G.n if within is None else within
    v0 = v - 1
    bits, lm = G.bits, L.mask
    for ks, mask in subset_masks(within, L.k, G.r):
        if v0 not in ks:
            continue
        c = (bits & mask).bit_count()
        if lm >> c & 1:
            return FreenessReport(False, (tuple(x + 1 for x in ks), c))
    return FreenessReport(True)


def complement_list(L: ForbiddenList) -> ForbiddenList:
    return ForbiddenList(L.k, L.r, frozenset(L.top - i for i in L.members))


def is_3_good(L: ForbiddenList) -> bool:
    return all(L.members & {i, i + 1, i + 2} for i in range(L.top - 1))
