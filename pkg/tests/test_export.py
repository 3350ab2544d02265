"""Test exporters for check matrices, code files and report tables."""

import json
import tempfile
from pathlib import Path

import pandas as pd
import pytest
import yaml

from hyperbicycle.api import QuantumCode
from hyperbicycle.classical import circulant
from hyperbicycle.constructions import hypergraph_product, symmetric_pair_noncss
from hyperbicycle.exporters import (
    AlistExporter,
    CSVExporter,
    Dense01Exporter,
    JSONExporter,
    YAMLExporter,
    get_exporter,
    write_table_csv,
    write_witness,
)
from hyperbicycle.gf2 import BinVec
from hyperbicycle.parser import load_code_file, parse_alist, parse_dense01
from hyperbicycle.poly import BinPoly

RING3 = circulant(3, BinPoly.parse("1+x"))


@pytest.fixture
def toric():
    return QuantumCode(hypergraph_product(RING3, RING3))


def test_get_exporter_all_formats(toric):
    """Test getting exporters for all supported formats."""
    expected = {
        "dense01": (Dense01Exporter, ".txt"),
        "alist": (AlistExporter, ".alist"),
        "json": (JSONExporter, ".json"),
        "yaml": (YAMLExporter, ".yaml"),
        "csv": (CSVExporter, ".csv"),
    }
    for name, (cls, ext) in expected.items():
        exporter = get_exporter(toric, name)
        assert isinstance(exporter, cls)
        assert exporter.get_file_extension() == ext


def test_get_exporter_case_insensitive(toric):
    """Test that format names are case insensitive."""
    assert isinstance(get_exporter(toric, "JSON"), JSONExporter)


def test_get_exporter_unsupported(toric):
    """Test error handling for unsupported formats."""
    with pytest.raises(ValueError, match="Unsupported format 'pdf'"):
        get_exporter(toric, "pdf")


def test_invalid_matrix_name(toric):
    """Test that asking for an unknown matrix fails."""
    exporter = get_exporter(toric, "dense01")
    with pytest.raises(ValueError, match="Invalid matrix names"):
        exporter.export_matrix("h", Path("unused.txt"))


def test_dense01_export(toric):
    """Test one dense01 file per check matrix."""
    with tempfile.TemporaryDirectory() as temp_dir:
        written = toric.export(Path(temp_dir) / "toric", "dense01")
        assert [p.name for p in written] == ["toric_gx.txt", "toric_gz.txt"]
        text = written[0].read_text()
        assert text.startswith("# gx of a hypergraph-product code")
        assert parse_dense01(text) == toric.code.gx


def test_alist_export(toric):
    """Test that alist files read back as the same matrices."""
    with tempfile.TemporaryDirectory() as temp_dir:
        written = toric.export(Path(temp_dir) / "toric", "alist")
        assert parse_alist(written[1].read_text()) == toric.code.gz


def test_json_export_structure(toric):
    """Test the JSON code document."""
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "toric.json"
        assert toric.export(path, "json") == [path]
        data = json.loads(path.read_text())
        assert data["kind"] == "css"
        assert data["n"] == 18
        assert data["split"] == [9, 9]
        assert set(data["matrices"]) == {"gx", "gz"}
        assert len(data["matrices"]["gx"]) == 9
        assert "toolVersion" in data
        assert "schemaVersion" in data


def test_json_code_file_loads(toric):
    """Test that an exported JSON code file loads as the same code."""
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "toric.json"
        toric.export(path, "json")
        code, spec = load_code_file(path)
        assert code.gx == toric.code.gx
        assert code.split == (9, 9)
        assert spec is None


def test_yaml_noncss_code():
    """Test a non-CSS code written as YAML."""
    qc = QuantumCode(symmetric_pair_noncss(BinPoly.parse("x+x^4"), BinPoly.parse("x^2+x^3"), 5))
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "five.yaml"
        qc.export(path, "yaml")
        data = yaml.safe_load(path.read_text())
        assert data["kind"] == "noncss"
        assert list(data["matrices"]) == ["h"]
        code, _ = load_code_file(path)
        assert code.h == qc.code.h


def test_csv_export(toric):
    """Test CSV grids with qubit column labels."""
    with tempfile.TemporaryDirectory() as temp_dir:
        written = toric.export(Path(temp_dir) / "toric", "csv")
        df = pd.read_csv(written[0])
        assert df.shape == (9, 18)
        assert list(df.columns[:2]) == ["q0", "q1"]
        assert int(df.to_numpy().sum()) == toric.code.gx.to_dense().sum()


def test_write_witness():
    """Test a witness file with its sublattice comment."""
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "sub" / "witness.txt"
        write_witness(BinVec.from_str("111000"), path, (3, 3))
        text = path.read_text()
        assert text.startswith("# sublattices: 3 3")
        assert str(parse_dense01(text)) == "111000"


def test_write_table_csv():
    """Test writing report rows."""
    with tempfile.TemporaryDirectory() as temp_dir:
        path = Path(temp_dir) / "table.csv"
        write_table_csv([{"name": "a", "n": 1}, {"name": "b", "n": 2}], path)
        df = pd.read_csv(path)
        assert list(df["name"]) == ["a", "b"]
