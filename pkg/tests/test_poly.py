"""Test binary and GF(4) polynomial algebra."""

import numpy as np
import pytest

from hyperbicycle.errors import PolynomialError
from hyperbicycle.poly import (
    BinPoly,
    F4Poly,
    f4_conj,
    f4_gcd,
    f4_mul,
    f4_trace_inner,
    factor_xc_minus_1,
    irreducibles_of_degree,
    is_irreducible,
    is_palindromic,
    poly_gcd,
    poly_mul,
)


class TestBinPoly:
    """Test polynomials over GF(2)."""

    def test_parse_and_str(self):
        """Test the text syntax in both directions."""
        p = BinPoly.parse("1 + x + x^3")
        assert p.value == 0b1011
        assert str(p) == "1+x+x^3"
        assert str(BinPoly.parse("0")) == "0"

    def test_repeated_terms_cancel(self):
        """Test that a term written twice cancels."""
        assert BinPoly.parse("x^2+1+x^2").value == 1

    def test_parse_errors(self):
        """Test rejection of malformed polynomials."""
        for bad in ("", "1+", "y", "x^a", "wx"):
            with pytest.raises(PolynomialError):
                BinPoly.parse(bad)

    def test_arithmetic(self):
        """Test multiplication, division and remainder."""
        a = BinPoly.parse("1+x")
        b = BinPoly.parse("1+x+x^2")
        assert str(a * b) == "1+x^3"
        q, r = divmod(BinPoly.parse("1+x^3"), a)
        assert q == b
        assert r.is_zero()
        assert BinPoly.parse("x^2") % a == BinPoly(1)

    def test_division_by_zero(self):
        """Test that division by zero raises PolynomialError."""
        with pytest.raises(PolynomialError):
            divmod(BinPoly.parse("x"), BinPoly(0))

    def test_free_functions(self):
        """Test poly_mul and gcd of small polynomials."""
        assert poly_mul(BinPoly.parse("1+x"), BinPoly.parse("1+x")) == BinPoly.parse("1+x^2")
        assert poly_gcd(BinPoly.parse("1+x^2"), BinPoly.parse("1+x")) == BinPoly.parse("1+x")
        assert poly_gcd(BinPoly.parse("1+x^3"), BinPoly.parse("1+x^5")) == BinPoly.parse("1+x")

    def test_gcd(self):
        """Test the gcd of several polynomials."""
        x7 = BinPoly.x_power_minus_one(7)
        g = poly_gcd(BinPoly.parse("1+x^2"), x7)
        assert g == BinPoly.parse("1+x")
        assert poly_gcd(BinPoly.parse("1+x+x^3"), x7, BinPoly.parse("1+x+x^3")) == BinPoly.parse(
            "1+x+x^3"
        )

    def test_cyclic_helpers(self):
        """Test cyclic reduction and reciprocals."""
        assert BinPoly.parse("x^7+x").reduce_cyclic(7) == BinPoly.parse("1+x")
        assert BinPoly.parse("1+x+x^3").reciprocal() == BinPoly.parse("1+x^2+x^3")
        assert BinPoly.parse("x").cyclic_reciprocal(5) == BinPoly.parse("x^4")

    def test_palindromic(self):
        """Test the palindrome check."""
        assert is_palindromic(BinPoly.parse("1+x+x^3+x^6+x^8+x^9"))
        assert not is_palindromic(BinPoly.parse("1+x+x^3"))


class TestFactorization:
    """Test irreducibility and the factorization of x^c - 1."""

    def test_irreducible(self):
        """Test Rabin's irreducibility test on small cases."""
        assert is_irreducible(BinPoly.parse("1+x+x^2"))
        assert is_irreducible(BinPoly.parse("1+x+x^3"))
        assert not is_irreducible(BinPoly.parse("1+x^2"))
        assert not is_irreducible(BinPoly.parse("1"))

    def test_irreducible_counts(self):
        """Test the number of irreducibles per degree."""
        assert [len(irreducibles_of_degree(d)) for d in range(1, 6)] == [2, 1, 2, 3, 6]

    def test_factor_seven(self):
        """Test x^7 - 1 = (1+x)(1+x+x^3)(1+x^2+x^3)."""
        fact = factor_xc_minus_1(7)
        assert [str(p) for p, _ in fact.base] == ["1+x", "1+x+x^3", "1+x^2+x^3"]
        assert fact.multiplicity == 1
        assert fact.expand() == BinPoly.x_power_minus_one(7)

    def test_factor_even_c(self):
        """Test that even c gives repeated factors of multiplicity 2^s."""
        fact = factor_xc_minus_1(12)
        assert fact.multiplicity == 4
        assert [str(p) for p, _ in fact.base] == ["1+x", "1+x+x^2"]
        assert fact.expand() == BinPoly.x_power_minus_one(12)
        assert len(fact.prime_powers()) == 8

    def test_factor_power_of_two(self):
        """Test that x^8 - 1 is a single prime power."""
        fact = factor_xc_minus_1(8)
        assert fact.is_prime_power()
        assert fact.base == ((BinPoly.parse("1+x"), 8),)

    def test_factor_beyond_sieve(self):
        """Test factors of degree 9, found by distinct- and equal-degree splitting."""
        fact = factor_xc_minus_1(73)
        degrees = sorted(p.degree for p, _ in fact.base)
        assert degrees == [1] + [9] * 8
        assert all(is_irreducible(p) for p, _ in fact.base)
        assert fact.expand() == BinPoly.x_power_minus_one(73)

    @pytest.mark.parametrize("c", range(1, 65))
    def test_factorization_expands_back(self, c):
        """Test that the factors multiply back to x^c - 1 and are irreducible."""
        fact = factor_xc_minus_1(c)
        assert fact.expand() == BinPoly.x_power_minus_one(c)
        assert all(is_irreducible(p) for p, _ in fact.base)

    def test_factor_invalid(self):
        """Test that c < 1 is rejected."""
        with pytest.raises(PolynomialError):
            factor_xc_minus_1(0)


class TestF4:
    """Test GF(4) arithmetic."""

    def test_field_tables(self):
        """Test w^2 = w + 1 and conjugation."""
        w, wbar = 2, 3
        assert f4_mul(w, w) == wbar
        assert f4_mul(w, wbar) == 1
        assert f4_conj(w) == wbar
        assert f4_conj(1) == 1

    def test_trace_inner(self):
        """Test the trace inner product lands in GF(2) and matches the symplectic form."""
        # X on qubit 0 against Z on qubit 0 anticommute
        assert f4_trace_inner([2], [1]) == 1
        assert f4_trace_inner([2, 1], [2, 1]) == 0

    def test_parse_and_multiply(self):
        """Test parsing GF(4) polynomials and multiplying them."""
        p = F4Poly.parse("1+wx")
        assert str(p) == "1+wx"
        assert str(p * p) == "1+Wx^2"
        assert p.x_part() == BinPoly.parse("x")
        assert p.z_part() == BinPoly.parse("1")

    def test_gcd(self):
        """Test the monic gcd over GF(4)."""
        a = F4Poly.parse("1+wx") * F4Poly.parse("1+x")
        b = F4Poly.parse("1+x") * F4Poly.parse("1+x+x^3")
        assert f4_gcd(a, b) == F4Poly.parse("1+x")

    def test_trace_inner_of_vector_with_itself_vanishes(self):
        """Test that every Pauli string commutes with itself."""
        rng = np.random.default_rng(41)
        for _ in range(200):
            u = rng.integers(0, 4, size=int(rng.integers(1, 30))).tolist()
            assert f4_trace_inner(u, u) == 0

    def test_trace_inner_is_symplectic_product(self):
        """Test that the trace product of (a|b) strings is a.b' + b.a' over GF(2)."""
        rng = np.random.default_rng(43)
        for _ in range(200):
            n = int(rng.integers(1, 20))
            u, v = rng.integers(0, 4, size=(2, n))
            expected = int(((u >> 1) @ (v & 1) + (u & 1) @ (v >> 1)) % 2)
            assert f4_trace_inner(u.tolist(), v.tolist()) == expected
