"""Test code constructions."""

import numpy as np
import pytest

from hyperbicycle.catalog import sixty_rho
from hyperbicycle.classical import circulant
from hyperbicycle.constructions import (
    CssCode,
    HyperbicycleSpec,
    NonCssCode,
    bicycle_K,
    circulant_split,
    css_to_noncss,
    generalized_bicycle,
    haah_code,
    hyperbicycle,
    hypergraph_product,
    noncss_hyperbicycle,
    noncss_to_css,
    repeated_cyclic_inputs,
    single_term_expected,
    single_term_hyperbicycle,
    spec_from_matrices,
    spec_from_polynomials,
    split_inputs,
    symmetric_pair_noncss,
    symmetric_shift,
    tiled_matrices,
    trace_dual_basis,
    trace_dual_pair,
)
from hyperbicycle.errors import CommensurateCaseError, ConstructionError, DimensionError
from hyperbicycle.gf2 import BinMat
from hyperbicycle.poly import BinPoly, F4Poly, f4_mul, f4_trace_inner

RING3 = circulant(3, BinPoly.parse("1+x"))
HAMMING_H = BinMat.from_rows(["1010101", "0110011", "0001111"])


class TestCodes:
    """Test the CSS and non-CSS containers."""

    def test_css_requires_commuting_checks(self):
        """Test that G_X G_Z^T != 0 is rejected."""
        with pytest.raises(ConstructionError, match="commute"):
            CssCode(BinMat.from_rows(["10"]), BinMat.from_rows(["10"]))

    def test_noncss_requires_even_columns(self):
        """Test that (A|B) needs 2n columns."""
        with pytest.raises(DimensionError):
            NonCssCode(BinMat.from_rows(["101"]))

    def test_noncss_requires_commuting_stabilizers(self):
        """Test that X and Z on the same qubit are rejected."""
        with pytest.raises(ConstructionError):
            NonCssCode(BinMat.from_rows(["10", "01"]))


class TestHypergraphProduct:
    """Test the hypergraph product."""

    def test_toric_code(self):
        """Test the 3x3 toric code [[18, 2]]."""
        code = hypergraph_product(RING3, RING3)
        assert (code.n, code.k) == (18, 2)
        assert code.split == (9, 9)
        assert code.family == "hypergraph-product"

    def test_rectangular_inputs(self):
        """Test K for a rectangular factor paired with itself and with its transpose."""
        # ker H has dimension 4, ker H^T is trivial
        assert hypergraph_product(HAMMING_H, HAMMING_H).k == 0
        code = hypergraph_product(HAMMING_H, HAMMING_H.T)
        assert code.n == 7 * 7 + 3 * 3
        assert code.k == 16


class TestGeneralizedBicycle:
    """Test two-circulant codes."""

    def test_parameters(self):
        """Test the [[10, 2]] code and its gcd-based K."""
        f1, f2 = BinPoly.parse("1+x^3"), BinPoly.parse("x+x^2")
        code = generalized_bicycle(f1, f2, 5)
        assert (code.n, code.k) == (10, 2)
        bk = bicycle_K(f1, f2, 5)
        assert bk.consistent
        assert bk.k == 2

    def test_spec_from_polynomials(self):
        """Test that 1x1 blocks reproduce the bicycle K."""
        f1, f2 = BinPoly.parse("1+x^3"), BinPoly.parse("x+x^2")
        spec = spec_from_polynomials(f1, f2, 5)
        assert spec.c == 5
        assert hyperbicycle(spec).k == 2

    def test_single_blocks_match_bicycle_bit_for_bit(self):
        """Test that 1x1 hyperbicycle blocks give the generalized bicycle matrices exactly."""
        rng = np.random.default_rng(71)
        for _ in range(30):
            n = int(rng.integers(2, 16))
            f1, f2 = (BinPoly(int(v)) for v in rng.integers(0, 2**n, size=2))
            code = hyperbicycle(spec_from_polynomials(f1, f2, n))
            bicycle = generalized_bicycle(f1, f2, n)
            assert code.gx == bicycle.gx
            assert code.gz == bicycle.gz
            assert code.k == bicycle.k

    def test_symmetric_pair(self):
        """Test the non-CSS code whose double is a bicycle code."""
        code = symmetric_pair_noncss(BinPoly.parse("x+x^4"), BinPoly.parse("x^2+x^3"), 5)
        assert (code.n, code.k) == (5, 1)
        double = noncss_to_css(code)
        assert double.k == 2 * code.k
        assert css_to_noncss(double).h == code.h

    def test_symmetric_pair_rejects_asymmetric(self):
        """Test that non-symmetric circulants are rejected."""
        with pytest.raises(ConstructionError):
            symmetric_pair_noncss(BinPoly.parse("1+x"), BinPoly.parse("1"), 5)

    def test_symmetric_shift(self):
        """Test the shift that makes a circulant symmetric."""
        assert symmetric_shift(BinPoly.parse("1+x^3"), 5) == 1
        assert symmetric_shift(BinPoly.parse("1+x"), 4) is None


class TestHaah:
    """Test two-sublattice tensor-product codes."""

    @pytest.mark.parametrize("variant", [1, 2, 3, 4])
    @pytest.mark.parametrize("L", [2, 3, 4])
    def test_variants_commute(self, variant, L):
        """Test that every variant has commuting checks on 2 L^3 qubits."""
        code = haah_code(variant, L)
        assert code.n == 2 * L**3
        assert code.split == (L**3, L**3)
        assert (code.gx @ code.gz.T).is_zero()
        assert code.gx.shape == code.gz.shape == (L**3, 2 * L**3)

    def test_invalid_inputs(self):
        """Test rejection of unknown variants and tiny lattices."""
        with pytest.raises(ConstructionError):
            haah_code(5, 3)
        with pytest.raises(ConstructionError):
            haah_code(1, 1)


class TestHyperbicycle:
    """Test the hyperbicycle construction."""

    def test_c1_matches_hypergraph_product(self):
        """Test that c = 1 is the hypergraph product."""
        code = hyperbicycle(spec_from_matrices(HAMMING_H, RING3))
        hp = hypergraph_product(HAMMING_H, RING3)
        assert code.gx == hp.gx
        assert code.gz == hp.gz

    def test_qubit_count_and_split(self):
        """Test N = c (r1 n2 + r2 n1) and the sublattice split."""
        spec = split_inputs(BinPoly.parse("1+x"), 2, 5, 3)
        code = hyperbicycle(spec)
        assert code.n == spec.n_qubits == 40
        assert code.split == (20, 20)
        assert code.k == 2

    def test_split_chi1_is_circulant(self):
        """Test that cut blocks tile back to the big circulant when chi = 1."""
        p = BinPoly.parse("1+x^2+x^8")
        spec = HyperbicycleSpec(tuple(circulant_split(2, 15, p)), tuple(circulant_split(2, 15, p)), 15)
        assert tiled_matrices(spec).h1 == circulant(30, p)

    def test_commensurate_case(self):
        """Test that gcd(c, chi) != 1 is rejected."""
        with pytest.raises(CommensurateCaseError):
            split_inputs(BinPoly.parse("1+x"), 2, 4, 2)

    def test_block_count_mismatch(self):
        """Test that a and b each need c blocks."""
        with pytest.raises(DimensionError):
            HyperbicycleSpec((RING3,), (RING3, RING3), 2)

    def test_repeated_cyclic(self):
        """Test a repeated cyclic input and its divisibility check."""
        spec = repeated_cyclic_inputs(BinPoly.parse("1+x^3"), 3, BinPoly.parse("1+x^3"), 3, 2)
        code = hyperbicycle(spec)
        assert (code.n, code.k) == (36, 18)
        with pytest.raises(ConstructionError):
            repeated_cyclic_inputs(BinPoly.parse("1+x^2"), 7, BinPoly.parse("1+x"), 7, 1)

    @pytest.mark.parametrize("c,chi", [(1, 1), (2, 1), (3, 2)])
    def test_single_term(self, c, chi):
        """Test (N, K) = (c((n-k)^2 + n^2), c k^2) for a single nonzero block."""
        spec = single_term_hyperbicycle(HAMMING_H, 0, 0, c, chi)
        code = hyperbicycle(spec)
        assert (code.n, code.k) == single_term_expected(HAMMING_H, c)


class TestNonCss:
    """Test the non-CSS hyperbicycle and the CSS doubling map."""

    def test_noncss_hyperbicycle(self):
        """Test the c = 1 code from a symmetric circulant."""
        H = circulant(17, BinPoly.parse("x^4+x^5+x^7+x^10+x^12+x^13"))
        assert H.is_symmetric()
        code = noncss_hyperbicycle(HyperbicycleSpec((H,), (H,), 1))
        assert code.n == 289
        assert code.k == 81

    def test_noncss_needs_symmetric_tiles(self):
        """Test rejection when H1 differs from its tilde partner."""
        with pytest.raises(ConstructionError):
            noncss_hyperbicycle(spec_from_matrices(RING3, RING3))

    def test_doubling_round_trip(self):
        """Test that doubling and undoubling recover H."""
        code = symmetric_pair_noncss(BinPoly.parse("x+x^4"), BinPoly.parse("x^2+x^3"), 5)
        double = noncss_to_css(code)
        assert double.provenance["doubled"] is True
        assert css_to_noncss(double).provenance == code.provenance

    def test_undouble_rejects_other_codes(self):
        """Test that a CSS code not of the form (A,B),(B,A) is rejected."""
        with pytest.raises(DimensionError):
            css_to_noncss(hypergraph_product(RING3, RING3))


class TestTraceDual:
    """Test the circulant pair read off the trace dual of a GF(4) cyclic code."""

    def test_sixty_qubit_pair(self):
        """Test the dual of (1+x)^2(1+wx)(1+x+wx^2) on 30 positions."""
        pair = trace_dual_pair(sixty_rho(), 30)
        assert pair.dual_dim == 10
        assert pair.span_dim == 8
        assert not pair.generates_dual
        assert pair.k == 44
        code = generalized_bicycle(pair.f1, pair.f2, 30)
        assert (code.n, code.k) == (60, 44)
        assert code.rank_gx == pair.span_dim

    def test_pair_lies_in_trace_dual(self):
        """Test that every shift of w f1 + f2 is trace-orthogonal to the code."""
        n, rho = 30, sixty_rho()
        pair = trace_dual_pair(rho, n)
        g = [2 * ((pair.f1.value >> j) & 1) + ((pair.f2.value >> j) & 1) for j in range(n)]
        for scale in (1, 2):
            word = [0] * n
            for e, sym in enumerate(rho.coefficients):
                word[e % n] ^= f4_mul(scale, sym)
            for shift in range(n):
                shifted = word[-shift:] + word[:-shift] if shift else word
                assert f4_trace_inner(g, shifted) == 0

    def test_cyclic_dual_is_generated(self):
        """Test a dual generated by one element: the pair spans all of it."""
        # the dual is GF(4) with x acting as a primitive cube root of unity
        pair = trace_dual_pair(F4Poly.parse("1+wx"), 3)
        assert pair.dual_dim == 2
        assert pair.generates_dual
        assert generalized_bicycle(pair.f1, pair.f2, 3).k == pair.k == 2

    def test_basis_dimension(self):
        """Test the GF(2) dimension 2 deg gcd(rho, x^n - 1) of the dual."""
        basis = trace_dual_basis(F4Poly.parse("1+wx"), 6)
        assert basis.shape == (2, 12)
