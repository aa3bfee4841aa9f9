"""Tests for the harmonic-polynomial calculus and the brute-force block."""

from fractions import Fraction

import pytest

from paneitz_rossi.arith.poly import PolyT
from paneitz_rossi.arith.rational import GaussianRational
from paneitz_rossi.errors import ArgumentError, ConsistencyError
from paneitz_rossi.harmonic import (
    HarmonicPoly,
    OperatorWord,
    apply_box_b,
    apply_box_b_bar,
    apply_calP,
    apply_T,
    apply_word,
    apply_Z1,
    apply_Z1bar,
    basis_Hpq,
    chain_basis,
    kohn_bar_word,
    kohn_word,
    laplacian,
    norm_squared,
    oracle_matrix,
    q_word,
    sphere_inner_product,
)
from paneitz_rossi.rossi import band_coeff, build_balanced

Z = (1, 0, 0, 0)
W = (0, 1, 0, 0)
ZBAR = (0, 0, 1, 0)
WBAR = (0, 0, 0, 1)


class TestHarmonicPoly:
    def test_zero_coefficients_dropped(self):
        f = HarmonicPoly((1, 0), {Z: GaussianRational(0)})
        assert f.is_zero()

    def test_bidegree_mismatch_rejected(self):
        with pytest.raises(ConsistencyError):
            HarmonicPoly((2, 0), {Z: GaussianRational(1)})

    def test_all_zeros_equal(self):
        assert HarmonicPoly.zero((1, 0)) == HarmonicPoly.zero((0, 3))
        assert hash(HarmonicPoly.zero((1, 0))) == hash(HarmonicPoly.zero((0, 3)))

    def test_adding_other_bidegree_rejected(self):
        with pytest.raises(ConsistencyError):
            HarmonicPoly.monomial(Z) + HarmonicPoly.monomial(ZBAR)

    def test_harmonicity(self):
        assert HarmonicPoly.monomial((1, 0, 0, 1)).is_harmonic()
        assert not HarmonicPoly.monomial((1, 0, 1, 0)).is_harmonic()

    def test_laplacian_terms(self):
        f = HarmonicPoly.from_terms((1, 1), [((1, 0, 1, 0), 1), ((0, 1, 0, 1), -1)])
        assert laplacian(f) == {}

    def test_require_harmonic(self):
        with pytest.raises(ConsistencyError):
            HarmonicPoly.monomial((1, 0, 1, 0)).require_harmonic()

    def test_pivot_of_zero_raises(self):
        with pytest.raises(ConsistencyError):
            HarmonicPoly.zero((1, 0)).pivot()


class TestSpherePairing:
    def test_constant_has_unit_norm(self):
        assert norm_squared(HarmonicPoly.monomial((0, 0, 0, 0))) == 1

    def test_coordinate_norms(self):
        assert norm_squared(HarmonicPoly.monomial(Z)) == Fraction(1, 2)
        assert norm_squared(HarmonicPoly.monomial((2, 0, 0, 0))) == Fraction(1, 3)

    def test_orthogonal_monomials(self):
        assert sphere_inner_product(HarmonicPoly.monomial(Z), HarmonicPoly.monomial(W)).is_zero()

    def test_conjugate_linear_in_second_slot(self):
        f = HarmonicPoly.monomial(Z)
        i = GaussianRational.i()
        assert sphere_inner_product(f, f.scale(i)) == GaussianRational(0, Fraction(-1, 2))
        assert sphere_inner_product(f.scale(i), f) == GaussianRational(0, Fraction(1, 2))


class TestGenerators:
    def test_z1_on_z(self):
        assert apply_Z1(HarmonicPoly.monomial(Z)) == HarmonicPoly.monomial(WBAR)

    def test_z1bar_on_wbar(self):
        assert apply_Z1bar(HarmonicPoly.monomial(WBAR)) == HarmonicPoly.monomial(Z, -1)

    def test_z1_kills_antiholomorphic(self):
        assert apply_Z1(HarmonicPoly.monomial((0, 0, 3, 0))).is_zero()

    def test_reeb_eigenvalue(self):
        f = HarmonicPoly.monomial((2, 0, 0, 1))
        assert apply_T(f) == f.scale(GaussianRational(0, 1))

    @pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (0, 2), (2, 1), (3, 3), (1, 4)])
    def test_kohn_eigenvalues(self, p, q):
        for f in basis_Hpq(p, q):
            assert apply_box_b(f) == f.scale((p + 1) * q)
            assert apply_box_b_bar(f) == f.scale(p * (q + 1))

    @pytest.mark.parametrize("p,q", [(2, 2), (3, 1), (0, 4)])
    def test_commutator_is_reeb(self, p, q):
        i = GaussianRational.i()
        for f in basis_Hpq(p, q):
            assert apply_box_b_bar(f) - apply_box_b(f) == apply_T(f).scale(-i)

    def test_generators_preserve_harmonicity(self):
        for f in basis_Hpq(2, 2):
            g, h = apply_Z1(f), apply_Z1bar(f)
            assert g.bidegree == (1, 3) and g.is_harmonic()
            assert h.bidegree == (3, 1) and h.is_harmonic()

    def test_word_order(self):
        f = HarmonicPoly.monomial((2, 0, 0, 0))
        assert apply_word(("Z1bar", "Z1"), f) == apply_Z1bar(apply_Z1(f))

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            OperatorWord({("X",): PolyT.one()})


class TestBasis:
    @pytest.mark.parametrize("p,q", [(0, 0), (3, 0), (0, 2), (1, 1), (2, 3), (4, 4)])
    def test_dimension(self, p, q):
        assert len(basis_Hpq(p, q)) == p + q + 1

    def test_basis_is_harmonic(self):
        assert all(f.is_harmonic() for f in basis_Hpq(3, 2))

    def test_negative_bidegree(self):
        with pytest.raises(ArgumentError):
            basis_Hpq(-1, 2)


class TestChain:
    def test_chain_bidegrees(self):
        assert chain_basis(3).bidegrees() == [(5, 0), (3, 2), (1, 4)]

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_orthogonal(self, k):
        assert chain_basis(k).is_orthogonal()

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_norm_ratios(self, k):
        want = [band_coeff(k, 2 * i + 1) * band_coeff(k, 2 * i + 2) for i in range(1, k)]
        assert chain_basis(k).norm_ratios() == want

    @pytest.mark.parametrize("k", [2, 4])
    def test_lowering_ratios(self, k):
        want = [band_coeff(k, 2 * i - 1) * band_coeff(k, 2 * i) for i in range(2, k + 1)]
        assert chain_basis(k).lowering_ratios() == want

    def test_gram_is_diagonal(self):
        g = chain_basis(3).gram()
        assert g[0][1] == 0 and g[1][2] == 0
        assert g[0][0] == Fraction(1, 6)

    def test_rejects_k_zero(self):
        with pytest.raises(ArgumentError):
            chain_basis(0)


class TestOracle:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_matches_closed_form(self, k):
        assert oracle_matrix(k) == build_balanced(k)

    def test_kohn_word_on_z(self):
        # (1−t²)□_b(t)z = t²z
        out = kohn_word().apply(HarmonicPoly.monomial(Z))
        coords = out.project_onto([HarmonicPoly.monomial(Z)])
        assert coords == [PolyT.monomial(2)]

    def test_kohn_bar_word_on_z(self):
        assert oracle_matrix(1, kohn_bar_word())[0, 0] == PolyT.one()

    def test_q_word_on_z(self):
        assert oracle_matrix(1, q_word())[0, 0] == PolyT.monomial(2, -4)

    def test_calp_on_z(self):
        out = apply_calP(HarmonicPoly.monomial(Z))
        assert out.project_onto([HarmonicPoly.monomial(Z)]) == [PolyT.monomial(2, -3)]

    def test_leaving_the_chain_is_a_consistency_error(self):
        word = OperatorWord.generator("Z1")
        with pytest.raises(ConsistencyError):
            oracle_matrix(2, word)


class TestWorkedExamples:
    def test_degree_one_basis(self):
        assert set(basis_Hpq(1, 0)) == {HarmonicPoly.monomial(Z), HarmonicPoly.monomial(W)}

    def test_constant_basis(self):
        assert basis_Hpq(0, 0) == [HarmonicPoly.monomial((0, 0, 0, 0))]

    def test_mixed_dimension(self):
        assert len(basis_Hpq(2, 1)) == 4
