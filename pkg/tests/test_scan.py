import pytest

from infoorder import BadDimension, Bayesian, LownerPlus, Majorization, Restricted, RestrictedParams, compare, bottom
from infoorder.scan import read_csv, reclassify, region_scan, to_csv, to_svg

BASE = (0.5, 1 / 3, 1 / 6)
LABEL = {"LessThan": "up", "GreaterThan": "down", "Equal": "equal", "Incomparable": "incomparable"}


def test_labels_match_compare():
    for spec in (LownerPlus(), Bayesian(), Restricted(RestrictedParams.build(3, 0, [1]))):
        grid = region_scan(spec, BASE, 24)
        for cell, rel in zip(grid.coords, grid.relations):
            assert LABEL[str(compare(spec, BASE, cell.tolist()))] == rel


def test_worked_point_comparable():
    grid = region_scan(LownerPlus(), BASE, 200)
    assert grid.relation_at((0.6, 0.2, 0.2)) == "up"


def test_bottom_base():
    for spec in (LownerPlus(), Bayesian(), Majorization()):
        grid = region_scan(spec, bottom(3), 30)
        counts = grid.counts()
        assert counts["down"] == 0 and counts["incomparable"] == 0
        assert counts["equal"] == 1 and counts["up"] == len(grid.relations) - 1


def test_sector_border_base_confines_downset():
    base = (0.4, 0.4, 0.2)
    grid = region_scan(Bayesian(), base, 60)
    for i, j, k in grid.cells("down"):
        assert i >= k and j >= k


def test_needs_three_coordinates():
    with pytest.raises(BadDimension):
        region_scan(Bayesian(), (0.5, 0.5), 10)


def test_csv_round_trip():
    spec = Restricted(RestrictedParams.build(3, -0.4, [1.0]))
    grid = region_scan(spec, BASE, 40)
    rows = read_csv(to_csv(grid))
    assert [r for _, r in rows] == list(grid.relations)
    assert reclassify(spec, BASE, rows) == list(grid.relations)
    assert [list(p) for p, _ in rows] == grid.coords.tolist()


def test_svg_colours():
    svg = to_svg(region_scan(LownerPlus(), BASE, 20))
    assert svg.startswith("<svg") and "#d62728" in svg and "#1f77b4" in svg
