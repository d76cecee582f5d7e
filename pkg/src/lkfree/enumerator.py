"""Exhaustive census of (L, k)-free r-graphs.

Graphs are uint64 bitsets over colex-ranked r-subsets, so C(n, r) <= 64.
The search adds one vertex at a time: edges with largest vertex v form a
contiguous block of ranks, and inside that block the edges whose
second-largest vertex is u form a contiguous sub-block.  After the sub-block
(v, u) is decided, every k-set whose two largest vertices are v and u is
fully decided and gets checked.  Each stage expands a whole array of partial
graphs at once with numpy.
"""

from __future__ import annotations

import json
import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .core import Hypergraph, canonical_form, colex_subsets0, rank0, subset_masks
from .freeness import ForbiddenList, is_lk_free

MAX_BITS = 64
EXHAUSTIVE_MAX_BITS = 26
ISO_MAX_N = 8
EXTENSION_MAX_POSITIONS = 30
CHUNK = 1 << 18


class CensusError(ValueError):
    """Invalid census parameters."""


class BudgetExceeded(RuntimeError):
    """A node or wall-clock budget ran out; no count is reported."""

    def __init__(self, message, partial_count=0, nodes=0):
        super().__init__(message)
        self.partial_count = partial_count
        self.nodes = nodes


@dataclass
class CountReport:
    n: int
    r: int
    k: int
    L: tuple
    labeled_count: int
    iso_count: int | None = None
    method: str = "backtracking"
    elapsed: float = 0.0
    node_count: int = 0

    def to_dict(self, canonical=False) -> dict:
        d = {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "L": list(self.L),
            "labeled_count": str(self.labeled_count),
            "iso_count": self.iso_count,
            "method": self.method,
            "elapsed_s": round(self.elapsed, 6),
            "nodes": self.node_count,
        }
        if canonical:
            del d["elapsed_s"]
        return d

    def to_json(self, canonical=False) -> str:
        return json.dumps(self.to_dict(canonical), sort_keys=True)

    CSV_FIELDS = ("n", "r", "k", "L", "labeled_count", "iso_count", "method", "elapsed_s", "nodes")

    def to_csv_row(self) -> str:
        d = self.to_dict()
        d["L"] = '"' + ",".join(map(str, self.L)) + '"'
        d["iso_count"] = "" if self.iso_count is None else self.iso_count
        return ",".join(str(d[f]) for f in self.CSV_FIELDS)


def as_list(L, k, r) -> ForbiddenList:
    if isinstance(L, ForbiddenList):
        if (L.k, L.r) != (k, r):
            raise CensusError(f"list is for (k, r)=({L.k}, {L.r}), not ({k}, {r})")
        return L
    if isinstance(L, str):
        return ForbiddenList.parse(L, k, r)
    return ForbiddenList(k, r, frozenset(L))


def _check_params(n, r, k):
    if not n >= k > r >= 2:
        raise CensusError(f"need n >= k > r >= 2, got n={n}, k={k}, r={r}")
    if comb(n, r) > MAX_BITS:
        raise CensusError(f"C({n},{r}) = {comb(n, r)} exceeds {MAX_BITS} bits")


# --- the staged engine -------------------------------------------------------

@dataclass(frozen=True)
class _Stage:
    start: int
    width: int
    masks: tuple  # masks of the k-sets completed by this stage


@lru_cache(maxsize=None)
def _stages(n, r, k):
    stages = []
    for v in range(r - 1, n):
        for u in range(r - 2, v):
            start = comb(v, r) + comb(u, r - 1)
            width = comb(u, r - 2)
            masks = tuple(np.uint64(mask) for ks, mask in subset_masks(n, k, r)
                          if ks[-1] == v and ks[-2] == u)
            stages.append(_Stage(start, width, masks))
    return tuple(stages)


class _Budget:
    def __init__(self, node_budget, time_budget):
        self.node_budget = node_budget
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.nodes = 0
        self.count = 0
        self.lock = threading.Lock()

    def spend(self, nodes):
        with self.lock:
            self.nodes += nodes
            if self.node_budget is not None and self.nodes > self.node_budget:
                raise BudgetExceeded(f"node budget {self.node_budget} exceeded",
                                     self.count, self.nodes)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exceeded", self.count, self.nodes)

    def found(self, c):
        with self.lock:
            self.count += c


def _expand(frontier, stage, lut):
    vals = np.arange(1 << stage.width, dtype=np.uint64) << np.uint64(stage.start)
    new = (frontier[:, None] | vals[None, :]).ravel()
    if stage.masks:
        keep = np.ones(new.size, dtype=bool)
        for mask in stage.masks:
            keep &= ~lut[np.bitwise_count(new & mask)]
        new = new[keep]
    return new


def _run(stages, idx, frontier, lut, budget, emit):
    if frontier.size == 0:
        return
    if idx == len(stages):
        budget.found(int(frontier.size))
        emit(frontier)
        return
    stage = stages[idx]
    fan = 1 << stage.width
    budget.spend(frontier.size * fan)
    if fan > CHUNK:
        for g in frontier:
            for lo in range(0, fan, CHUNK):
                piece = np.arange(lo, min(fan, lo + CHUNK), dtype=np.uint64) << np.uint64(stage.start)
                new = g | piece
                keep = np.ones(new.size, dtype=bool)
                for mask in stage.masks:
                    keep &= ~lut[np.bitwise_count(new & mask)]
                _run(stages, idx + 1, new[keep], lut, budget, emit)
        return
    step = max(1, CHUNK // fan)
    for lo in range(0, frontier.size, step):
        _run(stages, idx + 1, _expand(frontier[lo:lo + step], stage, lut), lut, budget, emit)


def _lut(L):
    lut = np.zeros(65, dtype=bool)
    for i in L.members:
        lut[i] = True
    return lut


def _traverse(n, r, k, L, emit, workers=1, node_budget=None, time_budget=None):
    """Feed every free bitset to ``emit`` in search order; returns (count, nodes)."""
    stages = _stages(n, r, k)
    lut = _lut(L)
    budget = _Budget(node_budget, time_budget)
    frontier = np.zeros(1, dtype=np.uint64)
    if workers <= 1:
        _run(stages, 0, frontier, lut, budget, emit)
        return budget.count, budget.nodes
    # breadth-first until there is enough work to split, then fan out
    idx = 0
    while idx < len(stages) and frontier.size < 4 * workers:
        budget.spend(frontier.size << stages[idx].width)
        frontier = _expand(frontier, stages[idx], lut)
        idx += 1
    pieces = np.array_split(frontier, min(max(frontier.size, 1), 4 * workers))
    results = [[] for _ in pieces]

    def work(i):
        _run(stages, idx, pieces[i], lut, budget, results[i].append)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for fut in [pool.submit(work, i) for i in range(len(pieces))]:
            fut.result()
    for chunks in results:
        for arr in chunks:
            emit(arr)
    return budget.count, budget.nodes


def iter_free_bitsets(n, r, k, L, **opts):
    """All free bitsets as one uint64 array, in search order."""
    L = as_list(L, k, r)
    _check_params(n, r, k)
    chunks = []
    _traverse(n, r, k, L, chunks.append, **opts)
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint64)


def _free_bitsets_any(n, r, L):
    """Free bitsets for any n (including n < k or n < r), used by d-statistics."""
    if n < r:
        return np.zeros(1, dtype=np.uint64)
    if n < L.k:
        width = comb(n, r)
        if width > EXHAUSTIVE_MAX_BITS:
            raise CensusError("too many unconstrained edges")
        return np.arange(1 << width, dtype=np.uint64)
    return iter_free_bitsets(n, r, L.k, L)


def _exhaustive(n, r, k, L, budget):
    width = comb(n, r)
    if width > EXHAUSTIVE_MAX_BITS:
        raise CensusError(f"exhaustive scan supports C(n,r) <= {EXHAUSTIVE_MAX_BITS}")
    lut = _lut(L)
    masks = [np.uint64(m) for _, m in subset_masks(n, k, r)]
    total = 1 << width
    for lo in range(0, total, CHUNK):
        g = np.arange(lo, min(total, lo + CHUNK), dtype=np.uint64)
        budget.spend(g.size)
        keep = np.ones(g.size, dtype=bool)
        for mask in masks:
            keep &= ~lut[np.bitwise_count(g & mask)]
        budget.found(int(keep.sum()))
    return budget.count, budget.nodes


def count_labeled(n, r, k, L, method="backtracking", workers=1,
                  node_budget=None, time_budget=None) -> CountReport:
    """Exact number f(n, r, k, L) of (L, k)-free r-graphs on [n]."""
    L = as_list(L, k, r)
    _check_params(n, r, k)
    t0 = time.perf_counter()
    if method == "backtracking":
        count, nodes = _traverse(n, r, k, L, lambda arr: None, workers, node_budget, time_budget)
    elif method == "exhaustive":
        count, nodes = _exhaustive(n, r, k, L, _Budget(node_budget, time_budget))
    else:
        raise CensusError(f"unknown method {method!r}")
    return CountReport(n, r, k, tuple(L), count, None, method,
                       time.perf_counter() - t0, nodes)


def enumerate_free(n, r, k, L, visitor, **opts) -> int:
    """Call ``visitor(G)`` for every free hypergraph; returns the visit count.

    Visits follow the search order: graphs are compared first on the edges
    inside [r], then on the edges with largest vertex r+1, and so on, each
    block read as a binary number.  With several workers the visitor is
    still called from the calling thread, in the same order.
    """
    L = as_list(L, k, r)
    _check_params(n, r, k)
    visits = 0

    def emit(arr):
        nonlocal visits
        for b in arr.tolist():
            visitor(Hypergraph(n, r, b))
            visits += 1

    _traverse(n, r, k, L, emit, **opts)
    return visits


def count_iso_classes(n, r, k, L, **opts) -> CountReport:
    if n > ISO_MAX_N:
        raise CensusError(f"isomorphism classes are counted for n <= {ISO_MAX_N}")
    L = as_list(L, k, r)
    _check_params(n, r, k)
    t0 = time.perf_counter()
    forms = set()
    labeled = 0

    def emit(arr):
        nonlocal labeled
        for b in arr.tolist():
            forms.add(canonical_form(Hypergraph(n, r, b)).bits)
            labeled += 1

    _, nodes = _traverse(n, r, k, L, emit, **opts)
    report = CountReport(n, r, k, tuple(L), labeled, len(forms), "backtracking",
                         time.perf_counter() - t0, nodes)
    assert labeled >= report.iso_count and labeled <= factorial(n) * report.iso_count
    return report


# --- extension sets and d(a, n) ----------------------------------------------

def _positions(A0, n, r):
    """Ranks of the r-subsets of [n] containing the 0-based set A0."""
    A0 = set(A0)
    return [i for i, s in enumerate(colex_subsets0(n, r)) if A0 <= set(s)]


def _deposit(positions, base):
    """All bitsets equal to ``base`` off ``positions``, one per pattern on them."""
    t = np.arange(1 << len(positions), dtype=np.uint64)
    out = np.full(t.size, np.uint64(base), dtype=np.uint64)
    for j, p in enumerate(positions):
        out |= ((t >> np.uint64(j)) & np.uint64(1)) << np.uint64(p)
    return out


@dataclass
class ExtensionSet:
    """D(A, H, n): the free graphs that differ from H only on r-sets containing A."""

    A: tuple
    anchor: Hypergraph
    members: list = field(default_factory=list)  # edge-difference bitsets G ^ H

    def __len__(self):
        return len(self.members)

    def graphs(self):
        return [Hypergraph(self.anchor.n, self.anchor.r, self.anchor.bits ^ d) for d in self.members]


def extension_set(A, H: Hypergraph, L: ForbiddenList) -> ExtensionSet:
    n, r, k = H.n, H.r, L.k
    A0 = sorted({a - 1 for a in A})
    if len(A0) >= r or any(not 0 <= a < n for a in A0):
        raise CensusError(f"A must be a subset of [n] with fewer than r={r} vertices")
    if n >= k and not is_lk_free(H, L):
        raise CensusError("anchor H is not (L, k)-free")
    pos = _positions(A0, n, r)
    if len(pos) > EXTENSION_MAX_POSITIONS:
        raise CensusError(f"{len(pos)} free positions exceed the limit {EXTENSION_MAX_POSITIONS}")
    pmask = sum(1 << p for p in pos)
    base = H.bits & ~pmask
    members = []
    lut = _lut(L)
    # k-sets not containing A see no changed position, and H is free on them
    masks = [np.uint64(m) for ks, m in subset_masks(n, k, r) if set(A0) <= set(ks)] if n >= k else []
    if 1 << len(pos) <= CHUNK:
        cands = [_deposit(pos, base)]
    else:
        head, tail = pos[:18], pos[18:]
        cands = (_deposit(head, base | sum(((t >> j) & 1) << p for j, p in enumerate(tail)))
                 for t in range(1 << len(tail)))
    for cand in cands:
        keep = np.ones(cand.size, dtype=bool)
        for mask in masks:
            keep &= ~lut[np.bitwise_count(cand & mask)]
        members.extend(int(g) ^ H.bits for g in cand[keep].tolist())
    return ExtensionSet(tuple(a + 1 for a in A0), H, members)


@dataclass
class DStat:
    a: int
    n: int
    value: int
    exact: bool
    mode: str
    anchors: int  # distinct anchors examined

    def to_dict(self):
        return {"a": self.a, "n": self.n, "d": self.value, "exact": self.exact,
                "mode": self.mode, "anchors": self.anchors}


def max_d(a, n, r, k, L, mode="exhaustive", seed=0, samples=64) -> DStat:
    """d(a, n) = max |D([a], H, n)| over (L, k)-free H on [n].

    In exhaustive mode every free H is grouped by its edges off the r-sets
    containing [a]; |D([a], H, n)| is the size of H's group.  Sample mode
    draws anchors by reservoir sampling over the census and reports a lower
    bound.
    """
    L = as_list(L, k, r)
    if not 0 <= a < r:
        raise CensusError(f"need 0 <= a < r, got a={a}")
    if n < r:
        return DStat(a, n, 1, True, mode, 1)
    if comb(n, r) > MAX_BITS:
        raise CensusError(f"C({n},{r}) exceeds {MAX_BITS} bits")
    pos = _positions(range(a), n, r)
    keymask = np.uint64(((1 << comb(n, r)) - 1) & ~sum(1 << p for p in pos))
    if mode == "exhaustive":
        free = _free_bitsets_any(n, r, L)
        _, counts = np.unique(free & keymask, return_counts=True)
        return DStat(a, n, int(counts.max()), True, mode, int(counts.size))
    if mode != "sample":
        raise CensusError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    reservoir = []
    seen = 0
    for b in _free_bitsets_any(n, r, L).tolist():
        seen += 1
        if len(reservoir) < samples:
            reservoir.append(b)
        else:
            j = rng.randrange(seen)
            if j < samples:
                reservoir[j] = b
    best = max(len(extension_set(range(1, a + 1), Hypergraph(n, r, b), L)) for b in reservoir)
    return DStat(a, n, best, False, mode, len(reservoir))
