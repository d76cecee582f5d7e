"""Binary pairwise CSPs whose constraints come from the three-element family

    MIXED = {(1,0), (0,1)},   ZERO = {(0,0)},   ONE = {(1,1)},

together with exact model counting and the CSP attached to a partially
coloured link of a hypergraph.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from math import comb

import numpy as np

from .core import Hypergraph, rank0
from .freeness import ForbiddenList

EXHAUSTIVE_MAX_M = 20
ENUMERATE_MAX_M = 25


class CspError(ValueError):
    pass


class Constraint(enum.Enum):
    MIXED = "MIXED"
    ZERO = "ZERO"
    ONE = "ONE"

    @property
    def forbidden(self) -> frozenset:
        return _FORBIDDEN[self]

    def allows(self, x: int, y: int) -> bool:
        return (x, y) not in _FORBIDDEN[self]

    @classmethod
    def for_sum(cls, t: int) -> "Constraint":
        """The constraint that rules out g(a) + g(b) == t."""
        return (cls.ZERO, cls.MIXED, cls.ONE)[t]


_FORBIDDEN = {
    Constraint.MIXED: frozenset({(1, 0), (0, 1)}),
    Constraint.ZERO: frozenset({(0, 0)}),
    Constraint.ONE: frozenset({(1, 1)}),
}
_KINDS = (Constraint.MIXED, Constraint.ZERO, Constraint.ONE)

# allowed[kind][x] = bitmask of values y (bit 0 -> y=0, bit 1 -> y=1) compatible with x
_ALLOWED = {c: tuple(sum(1 << y for y in (0, 1) if c.allows(x, y)) for x in (0, 1)) for c in _KINDS}


@dataclass(frozen=True)
class Csp:
    """A CSP on variables 1..m with one constraint for every pair a < b."""

    m: int
    constraints: dict

    def __post_init__(self):
        if self.m < 1:
            raise CspError("a CSP needs at least one variable")
        cons = {}
        for (a, b), c in self.constraints.items():
            a, b = min(a, b), max(a, b)
            if not 1 <= a < b <= self.m:
                raise CspError(f"pair ({a}, {b}) outside [1, {self.m}]")
            cons[(a, b)] = Constraint(c)
        if len(cons) != comb(self.m, 2):
            raise CspError(f"expected {comb(self.m, 2)} constraints, got {len(cons)}")
        object.__setattr__(self, "constraints", cons)

    def __hash__(self):
        return hash((self.m, tuple(sorted((k, v.value) for k, v in self.constraints.items()))))

    def constraint(self, a, b) -> Constraint:
        return self.constraints[(min(a, b), max(a, b))]

    def induced(self, variables) -> "Csp":
        """The CSP restricted to ``variables`` (1-based), relabeled 1..|variables|."""
        vs = sorted(variables)
        return Csp(len(vs), {(i + 1, j + 1): self.constraint(vs[i], vs[j])
                             for i, j in itertools.combinations(range(len(vs)), 2)})

    def relabeled(self, perm) -> "Csp":
        """Variable v becomes perm[v-1]."""
        return Csp(self.m, {(perm[a - 1], perm[b - 1]): c for (a, b), c in self.constraints.items()})

    def to_text(self) -> str:
        lines = [str(self.m)]
        lines += [f"{a} {b} {c.value}" for (a, b), c in sorted(self.constraints.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Csp":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 1:
            raise CspError("first line must hold m")
        m = int(rows[0][0])
        cons = {}
        for row in rows[1:]:
            if len(row) != 3:
                raise CspError(f"bad constraint line {' '.join(row)!r}")
            a, b = sorted((int(row[0]), int(row[1])))
            if (a, b) in cons:
                raise CspError(f"pair ({a}, {b}) given twice")
            try:
                cons[(a, b)] = Constraint(row[2].upper())
            except ValueError:
                raise CspError(f"unknown constraint kind {row[2]!r}") from None
        return cls(m, cons)


def _check_assignment(csp, g):
    if len(g) != csp.m:
        raise CspError(f"assignment length {len(g)} != m={csp.m}")


def is_satisfying(csp: Csp, g) -> bool:
    _check_assignment(csp, g)
    return all(c.allows(g[a - 1], g[b - 1]) for (a, b), c in csp.constraints.items())


def _table(csp):
    t = [[None] * csp.m for _ in range(csp.m)]
    for (a, b), c in csp.constraints.items():
        # every kind in the family is symmetric, so orientation does not matter
        t[a - 1][b - 1] = t[b - 1][a - 1] = c
    return t


def _propagate(table, domains, var, value):
    """Fix var=value and unit-propagate; returns new domains or None on wipe-out."""
    domains = list(domains)
    domains[var] = 1 << value
    queue = [var]
    while queue:
        u = queue.pop()
        x = domains[u].bit_length() - 1
        row = table[u]
        for w, d in enumerate(domains):
            if w == u or d == 0:
                continue
            nd = d & _ALLOWED[row[w]][x]
            if nd != d:
                if nd == 0:
                    return None
                domains[w] = nd
                queue.append(w)
    return domains


def count_satisfying(csp: Csp) -> int:
    """Exact number of satisfying assignments.

    Branches on the highest-index undecided variable.  Fixing its value forces
    every variable linked to it by a MIXED constraint, and by ZERO or ONE on
    one of the two branches; forced values are unit-propagated and checked, and
    the count recurses on the variables that stay free.
    """
    table = _table(csp)

    def rec(domains):
        free = [v for v, d in enumerate(domains) if d == 3]
        if not free:
            return 1
        v = free[-1]
        total = 0
        for value in (0, 1):
            nd = _propagate(table, domains, v, value)
            if nd is not None:
                total += rec(nd)
        return total

    return rec([3] * csp.m)


def free_sets(csp: Csp):
    """(F0, F1): variables below m left free when variable m is set to 0 / 1."""
    m = csp.m
    f0 = [j for j in range(1, m) if csp.constraint(j, m) is Constraint.ONE]
    f1 = [j for j in range(1, m) if csp.constraint(j, m) is Constraint.ZERO]
    return f0, f1


def split_bound(csp: Csp) -> int:
    """|A(G[F0])| + |A(G[F1])|, with an empty free set contributing 1."""
    return sum(count_satisfying(csp.induced(f)) if f else 1 for f in free_sets(csp))


def count_exhaustive(csp: Csp) -> int:
    """Brute-force count over all 2^m assignments (oracle, m <= 20)."""
    if csp.m > EXHAUSTIVE_MAX_M:
        raise CspError(f"exhaustive count supports m <= {EXHAUSTIVE_MAX_M}")
    g = np.arange(1 << csp.m, dtype=np.uint32)
    bit = [((g >> i) & 1).astype(bool) for i in range(csp.m)]
    ok = np.ones(g.size, dtype=bool)
    for (a, b), c in csp.constraints.items():
        x, y = bit[a - 1], bit[b - 1]
        if c is Constraint.MIXED:
            ok &= x == y
        elif c is Constraint.ZERO:
            ok &= x | y
        else:
            ok &= ~(x & y)
    return int(ok.sum())


def enumerate_satisfying(csp: Csp) -> list:
    """All satisfying assignments as tuples, in lexicographic order."""
    if csp.m > ENUMERATE_MAX_M:
        raise CspError(f"enumeration supports m <= {ENUMERATE_MAX_M}")
    table = _table(csp)
    out = []

    def rec(domains, v):
        if v == csp.m:
            out.append(tuple(d.bit_length() - 1 for d in domains))
            return
        for value in (0, 1):
            if domains[v] >> value & 1:
                nd = _propagate(table, domains, v, value)
                if nd is not None:
                    rec(nd, v + 1)

    rec([3] * csp.m, 0)
    return out


def extremal_csp(m: int) -> Csp:
    """Every pair forbids (1, 1): exactly the assignments with at most one 1."""
    if m < 1:
        raise CspError("m must be positive")
    return Csp(m, {p: Constraint.ONE for p in itertools.combinations(range(1, m + 1), 2)})


def random_csp(m: int, rng: random.Random) -> Csp:
    return Csp(m, {p: rng.choice(_KINDS) for p in itertools.combinations(range(1, m + 1), 2)})


def all_csps(m: int):
    """All 3^C(m,2) total CSPs on m variables."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    for kinds in itertools.product(_KINDS, repeat=len(pairs)):
        yield Csp(m, dict(zip(pairs, kinds)))


# --- the CSP attached to a coloured link -------------------------------------

def _extension_sums(H: Hypergraph, L: ForbiddenList, coloring):
    """Yield (i, j, fixed edge count on [k-2]+{i,j}) for the pairs of free vertices.

    ``coloring`` gives the bit of [r-1]+{s} for s = r, ..., k-2 (1-based).
    """
    n, r, k = H.n, H.r, L.k
    if L.r != r:
        raise CspError("list and hypergraph uniformities differ")
    if n <= k:
        raise CspError(f"need n > k, got n={n}, k={k}")
    S = list(range(r - 1, k - 2))  # 0-based vertices r..k-2
    coloring = tuple(coloring)
    if len(coloring) != len(S) or any(c not in (0, 1) for c in coloring):
        raise CspError(f"coloring must assign 0/1 to the {len(S)} vertices {[s + 1 for s in S]}")
    base = tuple(range(r - 1))
    bits = H.bits
    for s, c in zip(S, coloring):
        idx = rank0(base + (s,))
        bits = bits | (1 << idx) if c else bits & ~(1 << idx)
    core = list(range(k - 2))
    for i, j in itertools.combinations(range(k - 2, n), 2):
        skip = {rank0(base + (i,)), rank0(base + (j,))}
        count = 0
        for e in itertools.combinations(core + [i, j], r):
            idx = rank0(e)
            if idx not in skip and bits >> idx & 1:
                count += 1
        yield i, j, count


def derive_extension_csp(H: Hypergraph, L: ForbiddenList, coloring=()) -> Csp:
    """CSP on the vertices k-1..n (variable t is vertex k-2+t) bounding |D(c)|.

    For each pair {i, j} the number R of already-fixed edges on [k-2]+{i,j} is
    computed, and the smallest t in {0,1,2} with R + t in L becomes the
    forbidden value of C(i) + C(j).
    """
    cons = {}
    offset = L.k - 2
    for i, j, count in _extension_sums(H, L, coloring):
        ts = [t for t in (0, 1, 2) if count + t in L]
        if not ts:
            raise CspError(f"no t in {{0,1,2}} with {count}+t in {L.label()}; list is not 3-good")
        cons[(i - offset + 1, j - offset + 1)] = Constraint.for_sum(ts[0])
    return Csp(H.n - offset, cons)


def strict_forbidden_sums(H: Hypergraph, L: ForbiddenList, coloring=()) -> dict:
    """Every forbidden value of C(i) + C(j), keyed by CSP variable pair."""
    offset = L.k - 2
    return {(i - offset + 1, j - offset + 1): frozenset(t for t in (0, 1, 2) if count + t in L)
            for i, j, count in _extension_sums(H, L, coloring)}


def count_strict(m: int, sums: dict) -> int:
    """Assignments avoiding every forbidden pair sum (exhaustive, m <= 20)."""
    if m > EXHAUSTIVE_MAX_M:
        raise CspError(f"strict count supports m <= {EXHAUSTIVE_MAX_M}")
    g = np.arange(1 << m, dtype=np.uint32)
    bit = [((g >> i) & 1).astype(np.int8) for i in range(m)]
    ok = np.ones(g.size, dtype=bool)
    for (a, b), ts in sums.items():
        s = bit[a - 1] + bit[b - 1]
        for t in ts:
            ok &= s != t
    return int(ok.sum())
