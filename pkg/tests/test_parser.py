"""Test matrix, spec and code-file parsing."""

import json
import tempfile
from pathlib import Path

import pytest

from hyperbicycle.classical import circulant
from hyperbicycle.errors import ParseError
from hyperbicycle.exporters import alist_text
from hyperbicycle.gf2 import BinMat
from hyperbicycle.models import CodeSpecModel
from hyperbicycle.parser import (
    load_code_file,
    load_spec,
    parse_alist,
    parse_dense01,
    parse_spec,
    read_matrix,
    spec_from_model,
)
from hyperbicycle.poly import BinPoly

HAMMING_H = BinMat.from_rows(["1010101", "0110011", "0001111"])


def test_dense01_basic():
    """Test a dense01 matrix with comments and blank lines."""
    m = parse_dense01("# Hamming\n\n3 7\n1010101\n0110011\n0001111\n")
    assert m == HAMMING_H


def test_dense01_empty_matrix():
    """Test a matrix with zero rows."""
    m = parse_dense01("0 5\n")
    assert m.shape == (0, 5)


def test_dense01_row_length_error():
    """Test that a short row is reported with its line number."""
    with pytest.raises(ParseError, match="line 3: row has 2 entries, expected 3"):
        parse_dense01("2 3\n101\n01\n")


def test_dense01_bad_character():
    """Test that characters other than 0 and 1 are rejected."""
    with pytest.raises(ParseError, match="line 2: unexpected character"):
        parse_dense01("1 3\n1a1\n")


def test_dense01_missing_rows():
    """Test that the header row count is enforced."""
    with pytest.raises(ParseError, match="expected 2 rows, found 1"):
        parse_dense01("2 2\n11\n")


def test_dense01_bad_header():
    """Test that the header must be two integers."""
    with pytest.raises(ParseError, match="line 1"):
        parse_dense01("3\n101\n")


def test_alist_reads_exported_text():
    """Test parsing the alist text written for a circulant."""
    H = circulant(7, BinPoly.parse("1+x+x^3"))
    assert parse_alist(alist_text(H)) == H


def test_alist_inconsistent_sections():
    """Test that the row section must agree with the column section."""
    text = "2 1\n1 2\n1 1\n2\n1\n1\n1\n"
    with pytest.raises(ParseError, match="line 7: row 1 disagrees"):
        parse_alist(text)


def test_alist_weight_mismatch():
    """Test that a column listing the wrong number of rows is rejected."""
    text = "2 1\n1 2\n1 1\n2\n0\n1\n1 2\n"
    with pytest.raises(ParseError, match="line 5: column 1 lists 0 rows"):
        parse_alist(text)


def test_read_matrix_by_suffix():
    """Test that the file suffix selects the format."""
    with tempfile.TemporaryDirectory() as temp_dir:
        alist_path = Path(temp_dir) / "h.alist"
        alist_path.write_text(alist_text(HAMMING_H))
        assert read_matrix(alist_path) == HAMMING_H

        bad = Path(temp_dir) / "h.txt"
        bad.write_text("1 2\n12\n")
        with pytest.raises(ParseError, match="h.txt"):
            read_matrix(bad)


def test_read_matrix_missing_file():
    """Test that a missing file becomes a ParseError."""
    with pytest.raises(ParseError, match="Reading"):
        read_matrix("nonexistent.txt")


def test_spec_invalid_json():
    """Test that JSON syntax errors carry the line number."""
    with pytest.raises(ParseError, match="line 2: invalid JSON"):
        parse_spec('{\n  "family": ,\n}')


def test_spec_unknown_family():
    """Test that an unknown family is reported at its line."""
    with pytest.raises(ParseError, match="line 2: family"):
        parse_spec('{\n  "family": "toric"\n}')


def test_spec_missing_fields():
    """Test that family-specific required fields are named."""
    with pytest.raises(ParseError, match="needs field"):
        parse_spec('{\n  "family": "generalized-bicycle",\n  "f1": "1+x"\n}')


def test_spec_circulant_blocks():
    """Test blocks cut from one big circulant."""
    model = parse_spec('{"family": "hyperbicycle", "c": 2, "a": {"circulant": "1+x", "size": 6}}')
    spec = spec_from_model(model)
    assert spec.c == 2
    assert spec.a[0].shape == (3, 3)
    assert spec.b == spec.a


def test_spec_circulant_size_not_multiple():
    """Test that the circulant size must be a multiple of c."""
    model = parse_spec('{"family": "hyperbicycle", "c": 2, "a": {"circulant": "1+x", "size": 5}}')
    with pytest.raises(ParseError, match="not a multiple"):
        spec_from_model(model)


def test_spec_file_blocks():
    """Test blocks loaded from files next to the spec."""
    with tempfile.TemporaryDirectory() as temp_dir:
        base = Path(temp_dir)
        (base / "a.txt").write_text("3 3\n110\n011\n101\n")
        spec_path = base / "spec.json"
        spec_path.write_text(json.dumps({"family": "hyperbicycle", "c": 1, "a": [{"file": "a.txt"}]}))
        spec = spec_from_model(load_spec(spec_path), base)
        assert spec.a[0] == circulant(3, BinPoly.parse("1+x"))
        assert spec.n_qubits == 18


def test_spec_without_blocks():
    """Test that polynomial families do not describe hyperbicycle blocks."""
    model = CodeSpecModel(family="generalized-bicycle", f1="1+x^3", f2="x+x^2", n=5)
    with pytest.raises(ParseError, match="does not describe"):
        spec_from_model(model)


def test_code_file_errors():
    """Test invalid code files."""
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "code.json"
        path.write_text("{\n  oops\n}")
        with pytest.raises(ParseError, match="line 2: invalid JSON"):
            load_code_file(path)

        path.write_text(json.dumps({"kind": "css", "n": 2}))
        with pytest.raises(ParseError, match="Loading"):
            load_code_file(path)
