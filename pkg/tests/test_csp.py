import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lkfree.core import Hypergraph
from lkfree.csp import (Constraint, Csp, CspError, all_csps, count_exhaustive, count_satisfying,
                        count_strict, derive_extension_csp, enumerate_satisfying, extremal_csp,
                        free_sets, is_satisfying, random_csp, split_bound, strict_forbidden_sums)
from lkfree.enumerator import extension_set, iter_free_bitsets
from lkfree.freeness import ForbiddenList

L14 = ForbiddenList(4, 3, frozenset({1, 4}))


def uniform(m, kind):
    return Csp(m, {p: kind for p in itertools.combinations(range(1, m + 1), 2)})


@st.composite
def csps(draw, max_m=12):
    m = draw(st.integers(1, max_m))
    kinds = draw(st.lists(st.sampled_from(list(Constraint)), min_size=m * (m - 1) // 2,
                          max_size=m * (m - 1) // 2))
    return Csp(m, dict(zip(itertools.combinations(range(1, m + 1), 2), kinds)))


def test_is_satisfying_examples():
    one = uniform(2, Constraint.ONE)
    assert not is_satisfying(one, (1, 1))
    assert is_satisfying(one, (0, 1))
    assert is_satisfying(uniform(3, Constraint.MIXED), (0, 0, 0))
    with pytest.raises(CspError):
        is_satisfying(one, (0,))


def test_count_examples():
    assert count_satisfying(Csp(1, {})) == 2
    assert count_satisfying(uniform(3, Constraint.ONE)) == 4
    assert count_satisfying(uniform(3, Constraint.ZERO)) == 4
    assert count_satisfying(uniform(5, Constraint.MIXED)) == 2
    csp = random_csp(10, random.Random(10))
    assert count_satisfying(csp) == count_exhaustive(csp) <= 11


def test_enumerate_examples():
    assert enumerate_satisfying(Csp(1, {})) == [(0,), (1,)]
    assert enumerate_satisfying(uniform(2, Constraint.MIXED)) == [(0, 0), (1, 1)]
    assert enumerate_satisfying(uniform(3, Constraint.ONE)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_extremal():
    for m in (1, 4, 20):
        assert count_satisfying(extremal_csp(m)) == m + 1


def test_validation_and_text():
    with pytest.raises(CspError):
        Csp(0, {})
    with pytest.raises(CspError):
        Csp(3, {(1, 2): Constraint.ONE})
    with pytest.raises(CspError):
        Csp.from_text("2\n1 2 BOTH\n")
    with pytest.raises(CspError):
        Csp.from_text("3\n1 2 ONE\n1 3 ONE\n")
    csp = random_csp(6, random.Random(1))
    assert Csp.from_text(csp.to_text()) == csp


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_count_bound_exhaustive(m):
    worst = 0
    for csp in all_csps(m):
        c = count_satisfying(csp)
        assert c <= m + 1
        worst = max(worst, c)
    assert worst == m + 1


@settings(max_examples=300, deadline=None)
@given(csps(14))
def test_counter_matches_oracle(csp):
    assert count_satisfying(csp) == count_exhaustive(csp)


@settings(max_examples=200, deadline=None)
@given(csps(10))
def test_enumeration_is_sorted_and_complete(csp):
    sols = enumerate_satisfying(csp)
    assert sols == sorted(sols)
    assert len(sols) == count_satisfying(csp)
    assert all(is_satisfying(csp, g) for g in sols)


@settings(max_examples=200, deadline=None)
@given(csps(10), st.randoms(use_true_random=False))
def test_relabel_invariance(csp, rnd):
    perm = list(range(1, csp.m + 1))
    rnd.shuffle(perm)
    assert count_satisfying(csp.relabeled(perm)) == count_satisfying(csp)


@settings(max_examples=300, deadline=None)
@given(csps(12))
def test_split_bound(csp):
    f0, f1 = free_sets(csp)
    assert set(f0).isdisjoint(f1)
    if csp.m >= 2:
        assert count_satisfying(csp) <= split_bound(csp)


def test_free_sets_extremal():
    f0, f1 = free_sets(extremal_csp(5))
    assert f0 == [1, 2, 3, 4] and f1 == []


# --- the CSP attached to an extension --------------------------------------

def test_derived_csp_on_empty_graph():
    csp = derive_extension_csp(Hypergraph.empty(5, 3), L14)
    assert csp.m == 3
    assert set(csp.constraints.values()) == {Constraint.MIXED}


def test_derived_csp_rejects_bad_input():
    with pytest.raises(CspError):
        derive_extension_csp(Hypergraph.empty(4, 3), L14)
    with pytest.raises(CspError):
        derive_extension_csp(Hypergraph.empty(5, 3), ForbiddenList(4, 3, frozenset({3, 4})))


def _assignment(G, n, k, r):
    # C(i) = 1 iff [r-1] + {i} is an edge, for the variable vertices k-1..n
    base = tuple(range(1, r))
    return tuple(int(G.has_edge(base + (i,))) for i in range(k - 1, n + 1))


@pytest.mark.parametrize("n", [5, 6])
def test_derived_csp_dominates_extension_sets(n):
    k, r = 4, 3
    for b in iter_free_bitsets(n, r, k, L14).tolist():
        H = Hypergraph(n, r, b)
        csp = derive_extension_csp(H, L14)
        assert csp.m == n - k + 2
        count = count_satisfying(csp)
        assert count <= n - k + 3
        D = extension_set((1, 2), H, L14)
        assert len(D) <= count_strict(csp.m, strict_forbidden_sums(H, L14)) <= count
        for G in D.graphs():
            assert is_satisfying(csp, _assignment(G, n, k, r))


def test_derived_csp_with_colouring():
    # k = 5 leaves vertex 3 to be coloured before the pairs are read off
    k, r, n = 5, 3, 6
    lst = ForbiddenList(k, r, frozenset({1, 4, 7, 10}))
    free = iter_free_bitsets(n, r, k, lst)
    rng = np.random.default_rng(0)
    for b in rng.choice(free, size=min(200, free.size), replace=False).tolist():
        H = Hypergraph(n, r, b)
        D = extension_set((1, 2), H, lst)
        for c in (0, 1):
            csp = derive_extension_csp(H, lst, (c,))
            members = [G for G in D.graphs() if int(G.has_edge((1, 2, 3))) == c]
            assert len(members) <= count_satisfying(csp) <= n - k + 3
            for G in members:
                assert is_satisfying(csp, _assignment(G, n, k, r))
    with pytest.raises(CspError):
        derive_extension_csp(Hypergraph.empty(n, r), lst, ())
