import json

import pytest

import partgraph as pg


def test_partition_basics():
    p = pg.from_parts([1, 3, 2, 5, 1])
    assert p.parts == [5, 3, 2, 1, 1]
    assert p.n == 12
    assert str(pg.compress(p)) == "5^1 3^1 2^1 1^2"
    assert pg.gaps(p) == [2, 1, 1, 1]
    assert pg.bonus_profile(p) == (1, 1)
    assert pg.conjugate(p) == p
    assert pg.parse_partition("3^2 1^1") == pg.Partition([3, 3, 1])


def test_degree_formula_matches_oracle():
    for n in range(1, 16):
        for p in pg.enumerate_partitions(n):
            assert pg.degree_formula(p) == pg.degree_oracle(p) == len(pg.neighbors(p))


def test_extremal():
    assert pg.decompose(63) == (10, 8)
    assert [pg.rho(q) for q in range(9)] == [0, 1, 2, 2, 3, 3, 4, 4, 4]
    assert pg.max_degree(12) == 14
    assert pg.admissible_profiles(8) == [(3, 1), (2, 2), (1, 3)]
    table = pg.maximizers(13)
    assert table.counts() == {(2, 0): 1, (1, 1): 4, (0, 2): 1}
    assert table.total == 6
    assert pg.maximizers(44, fast=True).total == 22
    assert pg.canonical_representative(4, 3, 1, 1).parts == [6, 3, 2, 1, 1]
    assert len(pg.slack_family(8, 8, 3, 1)) == 2


def test_json_and_windows():
    doc = json.loads(pg.maximizers(12, include_members=True).to_json())
    assert doc["fibres"][0]["members"] == ["5,3,2,1,1"]
    report = pg.scan_window(8, 8, 10)
    assert report.constant
    assert [r.total for r in report.rows] == [22, 22, 22]
    cells, ok = pg.small_window_table(8)
    assert ok and all(c["pass"] for c in cells)
    assert pg.localization_check(30) == (True, None)


def test_errors():
    with pytest.raises(pg.InvalidInput):
        pg.decompose(0)
    with pytest.raises(ValueError):
        pg.from_parts([])
    with pytest.raises(pg.ResourceLimit):
        pg.degree_spectrum(30, cap=100)


def test_verify_small():
    assert all(r["pass"] for r in pg.verify(12))
