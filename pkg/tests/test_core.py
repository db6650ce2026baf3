"""Domain types, the reduction, and the two reference counters."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invcount import (Point, PointSet, ValueList, brute_force_count,
                      dominates, mergesort_count, reduce_inversions)


def oracle(values) -> int:
    return brute_force_count(*reduce_inversions(values))


class TestReduction:
    def test_sorted_list_has_no_inversions(self):
        assert oracle([1.0, 2.0, 3.0]) == 0

    def test_three_element_example(self):
        assert oracle([3.0, 1.0, 2.0]) == 2

    def test_reverse_four(self):
        assert oracle([4.0, 3.0, 2.0, 1.0]) == 6

    def test_both_colors_carry_every_element(self):
        red, blue = reduce_inversions([5.0, 1.0, 4.0])
        for s in (red, blue):
            assert len(s) == 3
            assert s.points() == [Point(0, 5.0, 0), Point(1, 1.0, 1),
                                  Point(2, 4.0, 2)]

    def test_empty_list(self):
        red, blue = reduce_inversions([])
        assert len(red) == len(blue) == 0
        assert brute_force_count(red, blue) == 0


class TestDominates:
    def test_right_and_below(self):
        assert dominates(Point(3, 1.0, 3), Point(1, 5.0, 1))

    def test_equal_x_never_dominates(self):
        assert not dominates(Point(1, 1.0, 1), Point(1, 5.0, 0))

    def test_equal_values_resolved_by_tiebreak(self):
        # Later copy of an equal value must not create an inversion.
        assert not dominates(Point(3, 5.0, 3), Point(1, 5.0, 1))
        # ... but the earlier index loses to the later one reversed in x.
        assert dominates(Point(3, 5.0, 1), Point(1, 5.0, 3))

    def test_irreflexive(self):
        p = Point(2, 3.0, 2)
        assert not dominates(p, p)

    @given(st.integers(0, 50), st.integers(0, 50))
    def test_antisymmetric_on_reduction_points(self, i, j):
        a = Point(i, float(i % 7), i)
        b = Point(j, float(j % 7), j)
        assert not (dominates(a, b) and dominates(b, a))


class TestBruteForce:
    def test_example(self):
        assert oracle([3.0, 1.0, 2.0]) == 2

    def test_empty_red_side(self):
        _, blue = reduce_inversions([1.0, 2.0])
        empty = PointSet(np.array([], dtype=np.int64), np.array([]),
                         np.array([], dtype=np.int64))
        assert brute_force_count(empty, blue) == 0

    def test_all_equal_values(self):
        assert oracle([1.0, 1.0, 1.0]) == 0


class TestMergesortCount:
    def test_single_swap(self):
        assert mergesort_count([2.0, 1.0]) == 1

    def test_reverse_five(self):
        assert mergesort_count([5.0, 4.0, 3.0, 2.0, 1.0]) == 10

    def test_thousand_random_matches_brute(self):
        rng = np.random.default_rng(11)
        values = rng.random(1000)
        assert mergesort_count(values) == oracle(values)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 9), max_size=120))
    def test_matches_brute_with_heavy_duplicates(self, ints):
        values = np.array(ints, dtype=np.float64)
        assert mergesort_count(values) == oracle(values)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), max_size=100))
    def test_matches_brute_on_reals(self, vals):
        values = np.array(vals, dtype=np.float64)
        assert mergesort_count(values) == oracle(values)


class TestValidation:
    def test_value_list_rejects_nan(self):
        with pytest.raises(ValueError):
            ValueList(np.array([1.0, np.nan]))

    def test_value_list_rejects_infinity(self):
        with pytest.raises(ValueError):
            ValueList(np.array([np.inf]))

    def test_value_list_rejects_2d(self):
        with pytest.raises(ValueError):
            ValueList(np.zeros((2, 2)))

    def test_point_set_requires_ascending_x(self):
        with pytest.raises(ValueError):
            PointSet(np.array([2, 1]), np.array([0.0, 0.0]), np.array([0, 1]))

    def test_point_set_rejects_unknown_color(self):
        with pytest.raises(ValueError):
            PointSet(np.array([1]), np.array([0.0]), np.array([0]),
                     color="green")
