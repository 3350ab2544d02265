"""Test theoretical distance bounds and their premises."""

import math

from hyperbicycle.bounds import (
    ceil_div,
    floor_div,
    generator_distance_at_least_two,
    theoretical_bounds,
)
from hyperbicycle.classical import circulant
from hyperbicycle.constructions import repeated_cyclic_inputs, spec_from_matrices
from hyperbicycle.gf2 import BinMat
from hyperbicycle.poly import BinPoly

RING3 = circulant(3, BinPoly.parse("1+x"))


class TestHelpers:
    """Test rounding and the generator-distance premise."""

    def test_rounding_keeps_infinity(self):
        """Test floor and ceiling division, including infinite distances."""
        assert floor_div(7, 3) == 2
        assert ceil_div(7, 3) == 3
        assert math.isinf(floor_div(math.inf, 2))

    def test_generator_distance(self):
        """Test detection of unit vectors in a row space."""
        assert generator_distance_at_least_two(RING3)
        assert not generator_distance_at_least_two(BinMat.from_rows(["100", "011"]))
        assert generator_distance_at_least_two(BinMat.zeros(2, 3))


class TestTheoreticalBounds:
    """Test bound reports on codes with known distance."""

    def test_toric_code(self):
        """Test that c = 1 pins the toric code at D = 3."""
        report = theoretical_bounds(spec_from_matrices(RING3, RING3))
        lo, hi, sources = report.css_interval()
        assert (lo, hi) == (3, 3)
        assert set(sources) == {"lower", "upper"}
        assert report.generic_lower == 3

    def test_repeated_code_with_c_two(self):
        """Test that c = 2 with symmetric kernels gives D = d exactly."""
        spec = repeated_cyclic_inputs(BinPoly.parse("1+x^3"), 3, BinPoly.parse("1+x^3"), 3, 2)
        report = theoretical_bounds(spec)
        assert report.premises.repeated
        assert report.premises.c_even
        assert report.repeated_exact == (2, 2)
        assert report.css_interval()[:2] == (2, 2)
        assert report.notes

    def test_repeated_bracket(self):
        """Test the [d/c, d] bracket for three repeated simplex codes."""
        spec = repeated_cyclic_inputs(BinPoly.parse("1+x+x^3"), 7, BinPoly.parse("1+x+x^3"), 7, 3)
        report = theoretical_bounds(spec)
        assert report.d_lo == report.d_hi == 12
        assert report.repeated_bracket == (4, 12)
        assert report.repeated_exact is None
        assert report.css_interval()[:2] == (4, 12)

    def test_noncss_interval(self):
        """Test that the non-CSS interval uses the untransposed tiled codes."""
        report = theoretical_bounds(spec_from_matrices(RING3, RING3))
        lo, hi, _ = report.noncss_interval()
        assert lo == 3
        assert hi == 3
