"""Tests for PolyT, the ℚ[t] polynomial type."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paneitz_rossi.arith.poly import PolyT, factor_t2_one_minus_t2, format_factored, poly_arith
from paneitz_rossi.errors import ConsistencyError

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_fractions, max_size=6).map(PolyT)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        p = PolyT((1, 2, 0, 0))
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1

    def test_zero_has_degree_minus_one(self):
        assert PolyT.zero().degree == -1
        assert PolyT((0, 0)).is_zero()

    def test_monomial(self):
        assert PolyT.monomial(3, 5) == PolyT((0, 0, 0, 5))

    def test_negative_monomial_power_rejected(self):
        with pytest.raises(ValueError):
            PolyT.monomial(-1)

    def test_from_roots(self):
        assert PolyT.from_roots([1, -1]) == PolyT((-1, 0, 1))

    def test_coeff_out_of_range(self):
        assert PolyT((1, 2)).coeff(7) == 0


class TestRing:
    def test_binomial_square(self):
        assert PolyT((1, 0, 1)) ** 2 == PolyT((1, 0, 2, 0, 1))

    def test_scalar_arithmetic(self):
        p = PolyT((1, 1))
        assert p + 1 == PolyT((2, 1))
        assert 1 - p == PolyT((0, -1))
        assert 3 * p == PolyT((3, 3))

    def test_divmod(self):
        q, r = divmod(PolyT((1, 0, 1)), PolyT((1, 1)))
        assert q == PolyT((-1, 1))
        assert r == PolyT((2,))

    def test_exact_div_raises_on_remainder(self):
        with pytest.raises(ConsistencyError):
            PolyT((1, 0, 1)).exact_div(PolyT((1, 1)))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(PolyT.one(), PolyT.zero())

    def test_gcd_is_monic(self):
        a = PolyT.from_roots([1, 2]).scale(3)
        b = PolyT.from_roots([1, 5]).scale(-2)
        assert a.gcd(b) == PolyT((-1, 1))

    def test_squarefree(self):
        p = PolyT.from_roots([1, 1, 2])
        assert p.squarefree().monic() == PolyT.from_roots([1, 2])

    def test_compose_t2(self):
        assert PolyT((1, 2, 3)).compose_t2() == PolyT((1, 0, 2, 0, 3))

    def test_even_detection(self):
        assert PolyT((1, 0, 4)).is_even()
        assert not PolyT((0, 1)).is_even()

    def test_content(self):
        assert PolyT((Fraction(1, 2), Fraction(3, 4))).content() == Fraction(1, 4)

    def test_poly_arith_dispatch(self):
        a, b = PolyT((1, 1)), PolyT((0, 1))
        assert poly_arith(a, b, "mul") == PolyT((0, 1, 1))
        with pytest.raises(ValueError):
            poly_arith(a, b, "div")

    @given(polys, polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys, polys.filter(lambda p: not p.is_zero()))
    @settings(max_examples=60, deadline=None)
    def test_division_identity(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


class TestEvaluation:
    def test_exact_evaluation(self):
        assert PolyT((1, 0, 1))(Fraction(1, 2)) == Fraction(5, 4)

    def test_float_evaluation(self):
        assert PolyT((1, 0, 1))(0.5) == pytest.approx(1.25)

    def test_sign_at(self):
        p = PolyT((-1, 0, 1))
        assert p.sign_at(0) == -1
        assert p.sign_at(1) == 0
        assert p.sign_at(2) == 1


class TestRendering:
    def test_ascending_order(self):
        assert str(PolyT((15, 0, 58, 0, 15))) == "15 + 58t^2 + 15t^4"

    def test_signs_and_unit_coefficients(self):
        assert str(PolyT((0, -1, 0, 1))) == "-t + t^3"

    def test_zero(self):
        assert str(PolyT.zero()) == "0"

    def test_factor_split(self):
        p = PolyT((36,)) * PolyT.monomial(2) * PolyT((1, 0, -1)) ** 2
        content, rest = factor_t2_one_minus_t2(p)
        assert content == 36
        assert rest == PolyT.one()

    def test_factor_split_fails_without_t2(self):
        assert factor_t2_one_minus_t2(PolyT((1, 1))) is None
        assert factor_t2_one_minus_t2(PolyT.zero()) is None

    def test_format_factored(self):
        r = PolyT((15, 58, 15)).compose_t2()
        p = (PolyT.monomial(2) * PolyT((1, 0, -1)) ** 2 * r).scale(576)
        assert format_factored(p) == "576 t^2 (1 - t^2)^2 (15 + 58t^2 + 15t^4)"

    def test_format_factored_falls_back(self):
        assert format_factored(PolyT((1, 1))) == "1 + t"
