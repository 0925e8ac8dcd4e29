import pytest

from gbcount.enumeration import count_gbs
from gbcount.geometry import (GeometryError, check_conjecture, coordinate_changes,
                              find_unique_augmentation, hull_holes, is_linked,
                              pair_counts_match_changes)
from gbcount.ideal import DataSet


def test_coordinate_changes():
    assert coordinate_changes((0, 1, 2), (0, 2, 2)) == 1
    with pytest.raises(GeometryError):
        coordinate_changes((0,), (0, 1))


def test_linked_modes():
    S = DataSet(3, 2, [(0, 0), (2, 2)])
    assert is_linked((0, 1), S)
    assert not is_linked((1, 1), S)
    assert is_linked((0, 2), S, mode="forall")
    assert not is_linked((0, 1), S, mode="forall")
    with pytest.raises(GeometryError):
        is_linked((0, 0), S)
    with pytest.raises(GeometryError):
        is_linked((1, 1), S, mode="some")


def test_hull_holes():
    assert hull_holes(DataSet(3, 2, [(0, 0), (2, 2)])) == [(1, 1)]
    assert hull_holes(DataSet(3, 2, [(0, 0), (0, 1), (1, 0)])) == []
    assert hull_holes(DataSet(2, 3, [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)])) == []
    assert hull_holes(DataSet(3, 2, [])) == []


def test_pairs_count_equals_changes():
    assert pair_counts_match_changes(2, 3)
    assert pair_counts_match_changes(3, 2)


def test_conjecture_small():
    rep = check_conjecture(2, 2, 3)
    assert rep.violations == []
    assert rep.sets_examined == 4 + 6 + 4
    d = rep.as_dict()
    assert d["violation_count"] == 0 and d["mode"] == "exists"


def test_conjecture_guard():
    with pytest.raises(GeometryError):
        check_conjecture(3, 4, 2)


def test_augmentation_example():
    S = DataSet(2, 2, [(0, 0), (1, 1)])
    res = find_unique_augmentation(S, 2)
    assert res.added_points == ((0, 1),)
    assert res.unique_size == 3
    assert count_gbs(S.union(res.added_points)) == 1


def test_augmentation_already_unique_and_budget():
    S = DataSet(2, 2, [(0, 0), (0, 1)])
    assert find_unique_augmentation(S, 0).added_points == ()
    T = DataSet(2, 3, [(0, 0, 0), (1, 1, 1)])
    assert find_unique_augmentation(T, 0) is None
    with pytest.raises(GeometryError):
        find_unique_augmentation(T, -1)
