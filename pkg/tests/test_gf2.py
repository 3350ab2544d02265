"""Test GF(2) vectors and matrices."""

import numpy as np
import pytest

from hyperbicycle.errors import CommensurateCaseError, DimensionError
from hyperbicycle.gf2 import (
    BinMat,
    BinVec,
    add,
    circshift_perm,
    hstack,
    kron,
    mat_sum,
    mul,
    skew_perm,
    transpose,
    vstack,
)

HAMMING = BinMat.from_rows(["1010101", "0110011", "0001111"])


class TestBinVec:
    """Test packed binary vectors."""

    def test_support_and_weight(self):
        """Test support positions and weight of a vector."""
        v = BinVec.from_str("0110001")
        assert v.support() == [1, 2, 6]
        assert v.weight == 3
        assert str(v) == "0110001"

    def test_long_vector_spans_words(self):
        """Test vectors longer than one 64-bit word."""
        v = BinVec.from_support(130, [0, 64, 129])
        assert v.weight == 3
        assert v.support() == [0, 64, 129]
        assert BinVec.from_int(130, v.to_int()) == v

    def test_add_and_dot(self):
        """Test XOR addition and parity dot product."""
        a = BinVec.from_str("1100")
        b = BinVec.from_str("1010")
        assert str(a + b) == "0110"
        assert a.dot(b) == 1
        assert a.dot(a) == 0

    def test_length_mismatch(self):
        """Test that mixing lengths raises DimensionError."""
        with pytest.raises(DimensionError):
            BinVec.from_str("101") + BinVec.from_str("10")


class TestBinMat:
    """Test matrix algebra and elimination."""

    def test_from_rows_and_str(self):
        """Test building from 0/1 rows and printing back."""
        assert str(HAMMING) == "1010101\n0110011\n0001111"
        assert HAMMING.shape == (3, 7)

    def test_rank_and_kernel(self):
        """Test rank-nullity and that kernel rows are annihilated."""
        kernel = HAMMING.kernel_basis()
        assert HAMMING.rank() == 3
        assert kernel.rows == 4
        assert (HAMMING @ kernel.T).is_zero()

    def test_rank_of_dependent_rows(self):
        """Test that a repeated row does not raise the rank."""
        m = vstack(HAMMING, HAMMING.rows_slice(0, 1))
        assert m.rank() == 3

    def test_echelon_pivots(self):
        """Test reduced echelon form and pivot columns."""
        ref, pivots = BinMat.from_rows(["110", "011"]).echelon()
        assert pivots == [0, 1]
        assert str(ref) == "101\n011"

    def test_transpose_and_product(self):
        """Test (AB)^T = B^T A^T."""
        a = BinMat.from_rows(["101", "110"])
        b = BinMat.from_rows(["11", "01", "10"])
        assert (a @ b).T == b.T @ a.T

    def test_free_functions(self):
        """Test mul, add and transpose on a small product."""
        a = BinMat.from_rows(["101", "110"])
        b = BinMat.from_rows(["11", "01", "10"])
        ab = mul(a, b)
        assert str(ab) == "01\n10"
        assert add(ab, ab).is_zero()
        assert transpose(ab) == ab.T

    def test_multiply_shape_mismatch(self):
        """Test that incompatible products raise DimensionError."""
        with pytest.raises(DimensionError):
            HAMMING @ HAMMING

    def test_row_space_contains(self):
        """Test row-space membership."""
        assert HAMMING.row_space_contains(BinVec.from_str("1100110"))
        assert not HAMMING.row_space_contains(BinVec.from_str("1000000"))

    def test_inverse(self):
        """Test inversion of a nonsingular matrix and rejection of a singular one."""
        m = BinMat.from_rows(["110", "011", "001"])
        assert m @ m.inverse() == BinMat.identity(3)
        with pytest.raises(DimensionError):
            BinMat.from_rows(["11", "11"]).inverse()

    def test_kron_and_stack(self):
        """Test Kronecker products and stacking."""
        ident = BinMat.identity(2)
        k = kron(ident, BinMat.from_rows(["11"]))
        assert str(k) == "1100\n0011"
        assert hstack(ident, ident).shape == (2, 4)
        assert vstack(ident, ident).shape == (4, 2)
        with pytest.raises(DimensionError):
            hstack(ident, BinMat.identity(3))

    def test_mat_sum(self):
        """Test summing a list of matrices."""
        ident = BinMat.identity(3)
        assert mat_sum([ident, ident], 3, 3).is_zero()
        assert mat_sum([], 2, 2) == BinMat.zeros(2, 2)

    def test_apply_matches_dense(self):
        """Test matrix-vector product against numpy."""
        v = BinVec.from_str("1011001")
        expected = HAMMING.to_dense().astype(int) @ v.to_dense().astype(int) % 2
        assert np.array_equal(HAMMING.apply(v).to_dense(), expected)


class TestPermutations:
    """Test block-shift and boundary-skew permutations."""

    def test_circshift_powers(self):
        """Test that the shift has order c."""
        shift = circshift_perm(5, 1)
        power = BinMat.identity(5)
        for _ in range(5):
            power = power @ shift
        assert power == BinMat.identity(5)
        assert circshift_perm(5, 2) == shift @ shift

    def test_skew_perm(self):
        """Test the boundary skew for coprime shifts."""
        s = skew_perm(5, 3)
        assert s @ s.T == BinMat.identity(5)
        assert str(s.row(1)) == "00010"

    def test_skew_perm_commensurate(self):
        """Test that gcd(c, chi) != 1 is rejected."""
        with pytest.raises(CommensurateCaseError, match="commensurate"):
            skew_perm(4, 2)

    @pytest.mark.parametrize("c", range(1, 65))
    def test_skew_perm_is_permutation_for_coprime_shifts(self, c):
        """Test one 1 per row and column of the skew for every chi coprime to c."""
        for chi in range(1, c + 1):
            if np.gcd(c, chi) != 1:
                continue
            dense = skew_perm(c, chi).to_dense()
            assert (dense.sum(axis=0) == 1).all()
            assert (dense.sum(axis=1) == 1).all()


class TestRandomMatrices:
    """Test rank and product identities on seeded random matrices."""

    def test_rank_of_transpose(self):
        """Test rank(m) == rank(m^T)."""
        rng = np.random.default_rng(17)
        for _ in range(100):
            rows, cols = rng.integers(1, 40, size=2)
            m = BinMat.from_dense(rng.integers(0, 2, size=(rows, cols)))
            assert m.rank() == m.T.rank() <= min(rows, cols)

    def test_kron_mixed_product(self):
        """Test (A x B)(C x D) == AC x BD."""
        rng = np.random.default_rng(23)
        for _ in range(50):
            p, q, r, s, t, u = rng.integers(1, 6, size=6)
            a = BinMat.from_dense(rng.integers(0, 2, size=(p, q)))
            b = BinMat.from_dense(rng.integers(0, 2, size=(r, s)))
            c = BinMat.from_dense(rng.integers(0, 2, size=(q, t)))
            d = BinMat.from_dense(rng.integers(0, 2, size=(s, u)))
            assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    def test_product_matches_dense(self):
        """Test the packed product against integer matrix multiplication."""
        rng = np.random.default_rng(29)
        for _ in range(30):
            p, q, r = rng.integers(1, 90, size=3)
            a = rng.integers(0, 2, size=(p, q))
            b = rng.integers(0, 2, size=(q, r))
            expected = (a @ b) % 2
            assert ((BinMat.from_dense(a) @ BinMat.from_dense(b)).to_dense() == expected).all()
