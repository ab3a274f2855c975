import logging

import pytest

from dyckgen.constants import GUARD_ENV_VAR, METHOD_ORACLE
from dyckgen.errors import GuardExceeded, SpecOutOfRange, Unreachable
from dyckgen.genfun import GenSpec, genfun
from dyckgen.oracle import PathTable, enumerate_paths, genfun_from_table, max_area


def test_long_meander_with_one_touchdown():
    table = enumerate_paths(4, 1, 2, 13)
    assert table.count(13, 21, 1) >= 1
    assert table.count(13, 21) >= table.count(13, 21, 1)
    assert table.max_area(13) == 35


def test_four_step_excursions():
    table = enumerate_paths(None, 0, 0, 4)
    assert table.count(4, 0) == 1
    assert table.count(4, 2) == 1
    assert table.count(4, 0, 2) == 1
    assert table.count(4, 2, 1) == 1
    assert table.count(4, 1) == 0
    assert table.count(5, 0) == 0
    assert table.count(-1, 0) == 0


def test_empty_path():
    assert enumerate_paths(3, 0, 0, 0).rows() == [(0, 0, 0, 1)]
    assert enumerate_paths(3, 2, 2, 0).rows(touchdowns=False) == [(0, 0, 1)]
    assert enumerate_paths(3, 0, 1, 0).totals() == [0]


def test_zigzag_rows():
    rows = enumerate_paths(1, 0, 0, 6).rows(touchdowns=True)
    assert rows == [(0, 0, 0, 1), (2, 0, 1, 1), (4, 0, 2, 1), (6, 0, 3, 1)]


def test_catalan_totals():
    assert enumerate_paths(None, 0, 0, 10).totals() == [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42]


@pytest.mark.parametrize("k,m,n", [(3, 0, 1), (4, 1, 3), (5, 2, 2), (None, 0, 2)])
def test_parity_and_reach(k, m, n):
    table = enumerate_paths(k, m, n, 12)
    for l, A, count in table.rows(touchdowns=False):
        assert count > 0
        assert l >= n - m and (l - (n - m)) % 2 == 0


@pytest.mark.parametrize("k,m,n", [(3, 0, 2), (4, 1, 3), (5, 0, 5)])
def test_reversal_symmetry(k, m, n):
    L = 11
    assert enumerate_paths(k, m, n, L).rows(touchdowns=False) == enumerate_paths(k, n, m, L).rows(touchdowns=False)


@pytest.mark.parametrize("k,m,n", [(3, 0, 1), (4, 1, 2), (2, 1, 1), (4, 0, 4)])
def test_reflection_duality(k, m, n):
    L = 10
    dual = enumerate_paths(k, k - m, k - n, L)
    for l, A, count in enumerate_paths(k, m, n, L).rows(touchdowns=False):
        assert dual.count(l, (k - 1) * l - A) == count


def test_max_area():
    assert max_area(4, 1, 2, 13) == 35
    for a in range(1, 8):
        assert max_area(None, 0, 0, 2 * a) == a * (a - 1)
    assert max_area(1, 0, 0, 12) == 0
    with pytest.raises(Unreachable):
        max_area(2, 0, 0, 3)
    with pytest.raises(Unreachable):
        max_area(4, 0, 3, 1)


def test_bad_specs():
    with pytest.raises(SpecOutOfRange):
        enumerate_paths(2, 3, 0, 4)
    with pytest.raises(SpecOutOfRange):
        enumerate_paths(2, 0, 0, -1)


def test_genfun_from_table():
    table = enumerate_paths(3, 1, 2, 9)
    G = genfun_from_table(table)
    assert G.method == METHOD_ORACLE
    assert G.prefactor == (1, 1)
    assert G.series == genfun(GenSpec(3, 1, 2, 9)).series
    tilde = genfun_from_table(table, touchdowns=True)
    assert tilde.series.at_t(1) == G.series


def test_table_round_trip():
    table = enumerate_paths(3, 0, 1, 9)
    rebuilt = PathTable.from_terms(3, 0, 1, 9, table.to_terms())
    assert rebuilt == table
    assert rebuilt.ceiling == 3
    assert enumerate_paths(None, 1, 1, 4).ceiling == 5


def test_oracle_guard(monkeypatch, caplog):
    monkeypatch.delenv(GUARD_ENV_VAR, raising=False)
    with pytest.raises(GuardExceeded):
        enumerate_paths(1, 0, 0, 25)

    monkeypatch.setenv(GUARD_ENV_VAR, "yes")
    with caplog.at_level(logging.WARNING, logger="dyckgen"):
        table = enumerate_paths(1, 0, 0, 25)
    assert table.totals()[24] == 1
    assert "l_max=25 exceeds the desk-scale guard 24" in caplog.text
