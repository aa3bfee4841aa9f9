"""Tests for Sturm root counting and bracketing."""

import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from paneitz_rossi.arith.poly import PolyT
from paneitz_rossi.arith.sturm import (
    bracket_root,
    cauchy_bound,
    count_open,
    count_open_with_multiplicity,
    root_multiplicities,
    sturm_count,
    sturm_sequence,
)


class TestSturmCount:
    def test_all_real_roots(self):
        p = PolyT.from_roots([-2, 1, 3])
        assert sturm_count(p) == 3

    def test_no_real_roots(self):
        assert sturm_count(PolyT((1, 0, 1))) == 0

    def test_half_open_interval(self):
        p = PolyT.from_roots([-2, 1, 3])
        assert sturm_count(p, 1, 3) == 1
        assert sturm_count(p, -math.inf, 1) == 2

    def test_repeated_roots_count_once(self):
        p = PolyT.from_roots([1, 1, 1, 2])
        assert sturm_count(p) == 2

    def test_constant_has_no_roots(self):
        assert sturm_count(PolyT((5,))) == 0

    def test_sequence_starts_with_p_and_derivative(self):
        p = PolyT.from_roots([0, 1])
        seq = sturm_sequence(p)
        assert seq[0] == p
        assert seq[1] == p.derivative()


class TestOpenCounts:
    def test_right_endpoint_excluded(self):
        p = PolyT.from_roots([-1, 0, 2])
        assert count_open(p, -math.inf, 0) == 1

    def test_multiplicity(self):
        p = PolyT.from_roots([-1, -1, -3, 2])
        assert count_open(p, -math.inf, 0) == 2
        assert count_open_with_multiplicity(p, -math.inf, 0) == 3

    def test_multiplicity_ignores_boundary_root(self):
        p = PolyT.from_roots([0, 0, -1])
        assert count_open_with_multiplicity(p, -math.inf, 0) == 1

    def test_root_multiplicities(self):
        p = PolyT.from_roots([1, 1, 2, 3, 3, 3])
        assert root_multiplicities(p) == {1: 1, 2: 1, 3: 1}


class TestBracket:
    def test_cauchy_bound_dominates_roots(self):
        p = PolyT.from_roots([-7, 2])
        assert cauchy_bound(p) > 7

    def test_brackets_smallest_root(self):
        p = PolyT((-2, 0, 1))  # ±√2
        a, b = bracket_root(p, None, Fraction(0), rel_tol=Fraction(1, 10**9))
        assert a < -math.sqrt(2) <= b
        assert b - a <= Fraction(1, 10**9) * max(abs(a), abs(b))

    def test_brackets_rational_root(self):
        p = PolyT.from_roots([Fraction(-1, 3), 5])
        a, b = bracket_root(p, None, Fraction(0))
        assert a < Fraction(-1, 3) <= b

    def test_no_root_in_interval(self):
        p = PolyT.from_roots([1, 2])
        assert bracket_root(p, None, Fraction(0)) is None


roots_strategy = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=5
)


class TestProperties:
    @given(roots_strategy)
    @settings(max_examples=60, deadline=None)
    def test_counts_distinct_chosen_roots(self, roots):
        assert sturm_count(PolyT.from_roots(roots)) == len(set(roots))

    @given(roots_strategy)
    @settings(max_examples=60, deadline=None)
    def test_negative_roots_with_multiplicity(self, roots):
        p = PolyT.from_roots(roots)
        assert count_open_with_multiplicity(p, -math.inf, 0) == sum(1 for r in roots if r < 0)
