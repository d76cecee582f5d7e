import csv
import io
import json

import pytest

from lkfree.freeness import ForbiddenList, all_lists
from lkfree.table import (ClaimedForm, Verdict, admissible_link_count, claimed_form, closed_form,
                          is_out_of_scope, rows_to_csv, rows_to_json, verify_table)


def lst(*m):
    return ForbiddenList(4, 3, frozenset(m))


@pytest.fixture(scope="module")
def rows():
    return {row.L: row for row in verify_table()}


def test_claimed_forms():
    assert claimed_form(lst()) is ClaimedForm.FULL_CUBE
    assert claimed_form(lst(1, 3)) is ClaimedForm.EXACT_POWER
    assert claimed_form(lst(0, 4)) is ClaimedForm.ZERO
    assert claimed_form(lst(1, 2, 3)) is ClaimedForm.TWO
    assert claimed_form(lst(1, 4)) is ClaimedForm.THETA_N2_LOG_N
    assert closed_form(ClaimedForm.N_PLUS_ONE, 7) == 8
    assert closed_form(ClaimedForm.N_PLUS_ONE, 4) is None
    assert closed_form(ClaimedForm.THETA_N3, 6) is None
    assert is_out_of_scope(lst(0, 4)) and not is_out_of_scope(lst(0, 1, 2, 3, 4))
    assert sum(is_out_of_scope(L) for L in all_lists()) == 7


def test_admissible_link_counts():
    assert [admissible_link_count(m) for m in range(1, 8)] == [1, 2, 7, 38, 283, 2594, 26839]


def test_table_has_no_mismatch(rows):
    assert len(rows) == 32
    assert all(r.verification is not Verdict.MISMATCH for r in rows.values()), [
        (r.L.label(), r.diagnostics) for r in rows.values() if r.diagnostics]


def test_exact_rows(rows):
    assert rows[lst(1, 3)].computed_values == {4: 8, 5: 64, 6: 1024, 7: 32768}
    assert rows[lst(1, 3)].skipped == [8]  # 2^21 graphs exceed the default node budget
    assert rows[lst(1, 3)].verification is Verdict.EXACT_MATCH
    for n in (5, 6, 7):
        assert rows[lst(0, 2, 3)].computed_values[n] == n + 1
        assert rows[lst(1, 2, 4)].computed_values[n] == n + 1
    assert set(rows[lst(1, 2, 3)].computed_values.values()) == {2}
    assert rows[lst()].computed_values[6] == 2 ** 20
    assert rows[lst(0, 1, 2, 3, 4)].computed_values[4] == 0


def test_theta_rows_are_never_exact(rows):
    for L, r in rows.items():
        if claimed_form(L).value.startswith("theta"):
            assert r.verification is Verdict.BOUND_CONSISTENT
            assert r.n_values_checked


def test_out_of_scope_rows_keep_values(rows):
    r = rows[lst(0, 4)]
    assert r.verification is Verdict.OUT_OF_DESK_SCOPE
    assert "R_3(4,4)=13" in r.note
    assert r.computed_values[4] == 14


def test_link_rows_match_domain(rows):
    for n, v in rows[lst(0, 1, 3)].computed_values.items():
        assert v == admissible_link_count(n - 1)


def test_serialisation(rows):
    ordered = [rows[L] for L in all_lists()]
    data = json.loads(rows_to_json(ordered))
    assert [d["L"] for d in data] == [list(L) for L in all_lists()]
    assert data[10]["computed_values"]["6"] == "1024"
    table = list(csv.reader(io.StringIO(rows_to_csv(ordered))))
    assert table[0] == ["L", "claimed_form", "verification", "n_values_checked", "computed_values"]
    assert len(table) == 33
