"""End-to-end acceptance checks, one test per numbered criterion.

Each test prints a PASS/FAIL line; the lines are repeated in the terminal
summary under "acceptance criteria".
"""

import itertools
import random
from math import comb, prod

import pytest

from lkfree.bounds import theorem_main_upper
from lkfree.cli import main
from lkfree.constructions import (chain_neighborhoods, complete_r_partite, find_induced_matching,
                                  greedy_linear_transversal, greedy_partial_steiner, has_even_edge_count,
                                  is_triangle_and_matching_free, link_bijection_013, link_bijection_13,
                                  max_codegree, qn_member, turan_cn)
from lkfree.core import Hypergraph, complement, subset_masks
from lkfree.csp import Constraint, Csp, all_csps, count_exhaustive, count_satisfying, extremal_csp, random_csp
from lkfree.enumerator import count_labeled, iter_free_bitsets, max_d
from lkfree.freeness import ForbiddenList, all_lists, complement_list, is_3_good, is_lk_free
from lkfree.table import ClaimedForm, Verdict, claimed_form, verify_row

L14 = ForbiddenList(4, 3, frozenset({1, 4}))
D25 = 4  # exact d(2, 5) for L = {1,4}


def lst(*m):
    return ForbiddenList(4, 3, frozenset(m))


def f(n, L):
    return count_labeled(n, 3, 4, L).labeled_count


def four_set_counts(G):
    return {(G.bits & m).bit_count() for _, m in subset_masks(G.n, 4, 3)}


def test_criterion_01_closed_forms(criterion):
    c = criterion(1, "census equals the closed forms", limit=10)
    with c.check():
        assert [f(n, lst(1, 3)) for n in (4, 5, 6)] == [8, 64, 1024]
        assert [f(n, lst(0, 2, 3)) for n in (5, 6, 7)] == [6, 7, 8]
        assert [f(n, lst(1, 2, 3)) for n in range(4, 9)] == [2] * 5
        for L in (lst(1, 2, 4), lst(0, 1, 3)):
            for n in range(4, 8):
                assert f(n, L) == f(n, complement_list(L))
        c.note("{1,3}: 8,64,1024; {0,2,3}: 6,7,8; {1,2,3}: 2 for n=4..8")


def test_criterion_02_duality(criterion):
    c = criterion(2, "f(L) = f(L^c) for all 32 lists at n = 5, 6", limit=60)
    with c.check():
        for n in (5, 6):
            values = {L: f(n, L) for L in all_lists()}
            for L, v in values.items():
                assert v == values[complement_list(L)], (n, L.label())


def test_criterion_03_csp_bound(criterion):
    c = criterion(3, "satisfying assignments <= m+1; extremal CSP attains m+1", limit=30)
    with c.check():
        for m, expected in ((3, 27), (4, 729)):
            counts = [count_satisfying(csp) for csp in all_csps(m)]
            assert len(counts) == expected
            assert max(counts) == m + 1
        rng = random.Random(2024)
        worst = max(count_satisfying(random_csp(15, rng)) for _ in range(10_000))
        assert worst <= 16
        # uniform instances are nearly always unsatisfiable; perturbing the
        # extremal system gives counts right up against the bound
        base = extremal_csp(15).constraints
        pairs = sorted(base)
        near = []
        for _ in range(10_000):
            cons = dict(base)
            for p in rng.sample(pairs, rng.randint(1, 4)):
                cons[p] = rng.choice(list(Constraint))
            near.append(count_satisfying(Csp(15, cons)))
        assert max(near) <= 16
        for m in range(1, 21):
            assert count_satisfying(extremal_csp(m)) == m + 1
        c.note(f"m=15 max over 10000 uniform: {worst}, over 10000 perturbed extremal: {max(near)}")


def test_criterion_04_counter_vs_brute_force(criterion):
    c = criterion(4, "branch-and-propagate equals 2^m enumeration, 1000 instances", limit=60)
    with c.check():
        rng = random.Random(7)
        for _ in range(1000):
            csp = random_csp(rng.randint(1, 18), rng)
            assert count_satisfying(csp) == count_exhaustive(csp)


def test_criterion_05_link_extension_bound(criterion):
    c = criterion(5, "exhaustive d(2,5) <= 2^4 * 5", limit=60)
    with c.check():
        st = max_d(2, 5, 3, 4, L14)
        assert st.exact
        assert st.value <= 2 ** 4 * 5
        assert st.value == D25
        c.note(f"d(2,5) = {st.value}")


def test_criterion_06_telescoping(criterion):
    c = criterion(6, "d(1,n) <= prod_{v=3..n} d(2,v) for n = 5, 6")
    with c.check():
        d2 = {v: max_d(2, v, 3, 4, L14).value for v in range(3, 7)}
        for n in (5, 6):
            d1 = max_d(1, n, 3, 4, L14).value
            bound = prod(d2[v] for v in range(3, n + 1))
            assert d1 <= bound
            c.note(f"n={n}: {d1} <= {bound}")


def test_criterion_07_constructions(criterion):
    c = criterion(7, "constructions satisfy their predicates", limit=30)
    with c.check():
        for n in range(4, 31):
            G = turan_cn(n)
            assert is_lk_free(G, L14)
            assert four_set_counts(G) <= {0, 2, 3}
        for n in range(4, 16):
            for seed in range(10):
                fam, _ = greedy_linear_transversal(n, "seeded_random", seed)
                assert is_lk_free(qn_member(n, fam), L14)
        for n, r in ((20, 3), (15, 4), (12, 5)):
            for strategy in ("colex_first", "seeded_random"):
                G, _ = greedy_partial_steiner(n, r, strategy, seed=1)
                assert max_codegree(G) <= 1
        for n in range(4, 13):
            assert is_lk_free(complete_r_partite(n, 3), lst(3, 4))
        c.note("C_n is ({1,4},4)-free with 4-set counts in {0,2,3} for n <= 30")


@pytest.mark.xfail(strict=True, reason="a 4-set split 2+2 over consecutive classes spans exactly 2 edges of C_n")
def test_criterion_07_turan_zero_or_three(criterion):
    c = criterion(7, "every 4-set of C_n spans 0 or 3 edges (n <= 30)")
    c.note("expected failure: {a,b} in V_i, {c,d} in V_i+1 spans only abc, abd")
    with c.check():
        for n in range(4, 31):
            assert four_set_counts(turan_cn(n)) <= {0, 3}, f"n={n}: {sorted(four_set_counts(turan_cn(n)))}"


def test_criterion_08_bijections(criterion):
    c = criterion(8, "link bijections match the census", limit=120)
    with c.check():
        for n in (4, 5, 6):
            image = {link_bijection_13(Hypergraph(n - 1, 2, b)).bits for b in range(1 << comb(n - 1, 2))}
            assert len(image) == 2 ** comb(n - 1, 2)
            assert image == set(iter_free_bitsets(n, 3, 4, {1, 3}).tolist())
        for n in (5, 6, 7):
            m = n - 1
            domain = [A for A in (Hypergraph(m, 2, b) for b in range(1 << comb(m, 2)))
                      if is_triangle_and_matching_free(complement(A))]
            census = f(n, lst(0, 1, 3))
            assert len(domain) == census
            assert {link_bijection_013(A).bits for A in domain} == set(iter_free_bitsets(n, 3, 4, {0, 1, 3}).tolist())
            c.note(f"n={n}: {census}")


def test_criterion_09_chain_characterisation(criterion):
    c = criterion(9, "chain neighbourhoods <=> no induced 2-matching, 4+4 bipartite", limit=30)
    with c.check():
        P, Q = (1, 2, 3, 4), (5, 6, 7, 8)
        cross = [(p, q) for p in P for q in Q]
        chains = 0
        for mask in range(1 << 16):
            B = Hypergraph.from_edges(8, 2, [e for i, e in enumerate(cross) if mask >> i & 1])
            chain = chain_neighborhoods(B, P, Q)
            assert chain == (find_induced_matching(B) is None)
            chains += chain
        c.note(f"{chains} of 65536 graphs have nested neighbourhoods")


def test_criterion_10_parity(criterion):
    c = criterion(10, "3-graphs on [5] with an even number of edges = 512", limit=1)
    with c.check():
        assert sum(has_even_edge_count(Hypergraph(5, 3, b)) for b in range(1 << 10)) == 512


def test_criterion_11_upper_bound(criterion):
    c = criterion(11, "log2 f(6, L) <= 2k n^2 + n^2 log2 n for 3-good L")
    with c.check():
        bound = theorem_main_upper(6, 3, 4)
        good = [L for L in all_lists() if is_3_good(L)]
        for L in good:
            assert bound.admits(f(6, L)), L.label()
        c.note(f"{len(good)} lists checked")


def test_criterion_12_asymptotic_rows(criterion):
    c = criterion(12, "growth-rate rows are bound-consistent, never exact")
    with c.check():
        theta = (ClaimedForm.THETA_N3, ClaimedForm.THETA_N2_LOG_N, ClaimedForm.THETA_N_LOG_N)
        rows = [verify_row(L, n_values=(4, 5, 6)) for L in all_lists() if claimed_form(L) in theta]
        for row in rows:
            assert row.verification is Verdict.BOUND_CONSISTENT, (row.L.label(), row.diagnostics)
        c.note(f"{len(rows)} rows")


def test_criterion_13_determinism(criterion, tmp_path, capsys):
    c = criterion(13, "verify-table output is identical for 1 and 8 threads")
    with c.check():
        outputs = []
        for threads in ("1", "8"):
            out = tmp_path / f"table-{threads}.json"
            assert main(["verify-table", "--threads", threads, "--canonical", "--seed", "0",
                         "--out", str(out)]) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        capsys.readouterr()
