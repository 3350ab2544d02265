"""Test the command-line interface."""

import json
import tempfile
from pathlib import Path

import pandas as pd
from typer.testing import CliRunner

from hyperbicycle.cli import app

runner = CliRunner()

TORIC_SPEC = {"family": "hyperbicycle", "name": "toric-3", "c": 1, "a": [["110", "011", "101"]]}


def write_spec(directory: str, data: dict | None = None) -> str:
    path = Path(directory) / "spec.json"
    path.write_text(json.dumps(data or TORIC_SPEC, indent=2))
    return str(path)


class TestCLIHelp:
    """Test CLI help and version commands."""

    def test_main_help(self):
        """Test main CLI help."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "Construct and analyze" in result.stdout
        for cmd in ("construct", "analyze", "distance", "verify-paper", "layout"):
            assert cmd in result.stdout

    def test_version_command(self):
        """Test version command."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "hyperbicycle" in result.stdout
        assert "Version Info" in result.stdout

    def test_command_help(self):
        """Test individual command help."""
        commands = ["construct", "analyze", "distance", "classical", "verify-paper", "layout", "export"]

        for cmd in commands:
            result = runner.invoke(app, [cmd, "--help"])
            assert result.exit_code == 0
            assert "Examples:" in result.stdout


class TestConstructCommand:
    """Test the construct command."""

    def test_construct_bicycle(self):
        """Test building a bicycle code from flags."""
        with tempfile.TemporaryDirectory() as temp_dir:
            result = runner.invoke(
                app,
                [
                    "construct",
                    "--family", "generalized-bicycle",
                    "--f1", "1+x^3",
                    "--f2", "x+x^2",
                    "--n", "5",
                    "--out", temp_dir,
                ],
            )
            assert result.exit_code == 0
            assert "Constructed" in result.stdout
            for name in ("code_gx.txt", "code_gz.alist", "code.json"):
                assert (Path(temp_dir) / name).exists()

    def test_construct_from_spec(self):
        """Test building from a spec file with a custom name."""
        with tempfile.TemporaryDirectory() as temp_dir:
            spec = write_spec(temp_dir)
            result = runner.invoke(app, ["construct", "--spec", spec, "--out", temp_dir, "--name", "toric"])
            assert result.exit_code == 0
            data = json.loads((Path(temp_dir) / "toric.json").read_text())
            assert data["n"] == 18

    def test_construct_missing_field(self):
        """Test that a family without its required fields fails."""
        result = runner.invoke(app, ["construct", "--family", "generalized-bicycle", "--f1", "1+x"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout

    def test_construct_commensurate(self):
        """Test that gcd(c, chi) != 1 is reported."""
        with tempfile.TemporaryDirectory() as temp_dir:
            spec = write_spec(
                temp_dir,
                {"family": "hyperbicycle", "c": 4, "chi": 2, "a": {"circulant": "1+x", "size": 8}},
            )
            result = runner.invoke(app, ["construct", "--spec", spec, "--out", temp_dir])
            assert result.exit_code == 1
            assert "commensurate" in result.stdout


class TestAnalyzeCommand:
    """Test the analyze and distance commands."""

    def test_analyze_spec(self):
        """Test a report with every K method and a JSON output file."""
        with tempfile.TemporaryDirectory() as temp_dir:
            spec = write_spec(temp_dir)
            out = Path(temp_dir) / "report.json"
            result = runner.invoke(app, ["analyze", spec, "-b", "5000", "--output", str(out)])
            assert result.exit_code == 0
            assert "K (class sum)" in result.stdout
            assert "Report written" in result.stdout
            data = json.loads(out.read_text())
            assert data["k"] == 2
            assert data["distance"]["interval"] == "3"
            assert all(data["crossChecks"].values())

    def test_analyze_matrix_files(self):
        """Test analyzing check matrices written by construct."""
        with tempfile.TemporaryDirectory() as temp_dir:
            spec = write_spec(temp_dir)
            runner.invoke(app, ["construct", "--spec", spec, "--out", temp_dir])
            result = runner.invoke(
                app,
                [
                    "analyze",
                    "--gx", str(Path(temp_dir) / "code_gx.txt"),
                    "--gz", str(Path(temp_dir) / "code_gz.alist"),
                    "--no-distance",
                ],
            )
            assert result.exit_code == 0
            assert "K (rank)" in result.stdout

    def test_analyze_missing_file(self):
        """Test analyze with a nonexistent input."""
        result = runner.invoke(app, ["analyze", "nonexistent.json"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout

    def test_distance_with_witness(self):
        """Test the [[n,k,d]] line and the witness file."""
        with tempfile.TemporaryDirectory() as temp_dir:
            spec = write_spec(temp_dir)
            witness = Path(temp_dir) / "logical.txt"
            result = runner.invoke(
                app, ["--seed", "7", "distance", spec, "-b", "5000", "--witness", str(witness)]
            )
            assert result.exit_code == 0
            assert "[[18,2,3]]" in result.stdout
            assert witness.read_text().startswith("# sublattices: 9 9")


class TestClassicalCommand:
    """Test the classical command."""

    def test_polynomial(self):
        """Test a cyclic code and its transpose."""
        result = runner.invoke(app, ["classical", "--poly", "1+x+x^3", "--n", "7", "--transposed"])
        assert result.exit_code == 0
        assert result.stdout.count("[7,3,4]") == 2

    def test_needs_input(self):
        """Test that a matrix or a polynomial is required."""
        result = runner.invoke(app, ["classical"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout


class TestCatalogCommands:
    """Test catalog listing and verification."""

    def test_catalog_list(self):
        """Test the catalog table."""
        result = runner.invoke(app, ["catalog"])
        assert result.exit_code == 0
        assert "toric-3" in result.stdout

    def test_global_quiet_flag(self):
        """Test that --quiet is accepted before a command."""
        result = runner.invoke(app, ["--quiet", "catalog"])
        assert result.exit_code == 0
        assert "toric-3" in result.stdout

    def test_catalog_entry(self):
        """Test one catalog entry in detail."""
        result = runner.invoke(app, ["catalog", "repeated-294"])
        assert result.exit_code == 0
        assert "Catalog Entry" in result.stdout
        assert "bracket" in result.stdout

    def test_catalog_unknown(self):
        """Test an unknown entry."""
        result = runner.invoke(app, ["catalog", "nope"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout

    def test_verify_paper_entry(self):
        """Test verifying one entry and writing the CSV table."""
        with tempfile.TemporaryDirectory() as temp_dir:
            csv = Path(temp_dir) / "results.csv"
            result = runner.invoke(app, ["verify-paper", "--entry", "toric-3", "--csv", str(csv)])
            assert result.exit_code == 0
            assert "All 1 entries match" in result.stdout
            df = pd.read_csv(csv)
            assert list(df["name"]) == ["toric-3"]
            assert bool(df["distanceOk"].iloc[0])

    def test_verify_paper_deviation_entry(self):
        """Test that an entry with a rebuilt K passes and records both values."""
        with tempfile.TemporaryDirectory() as temp_dir:
            csv = Path(temp_dir) / "results.csv"
            result = runner.invoke(app, ["verify-paper", "--entry", "trace-dual-60", "--csv", str(csv)])
            assert result.exit_code == 0
            assert "All 1 entries match" in result.stdout
            row = pd.read_csv(csv).iloc[0]
            assert (row["kExpected"], row["kReproduced"], row["kComputed"]) == (40, 44, 44)

    def test_verify_paper_bad_tier(self):
        """Test that unknown tiers are rejected."""
        result = runner.invoke(app, ["verify-paper", "--tier", "medium"])
        assert result.exit_code == 1
        assert "Error:" in result.stdout


class TestLayoutAndExport:
    """Test the layout and export commands."""

    def test_layout_text(self):
        """Test the text layout on stdout."""
        with tempfile.TemporaryDirectory() as temp_dir:
            result = runner.invoke(app, ["layout", write_spec(temp_dir)])
            assert result.exit_code == 0
            assert "K=2" in result.stdout
            assert "left sublattice" in result.stdout

    def test_layout_svg_file(self):
        """Test writing an SVG layout."""
        with tempfile.TemporaryDirectory() as temp_dir:
            out = Path(temp_dir) / "layout.svg"
            result = runner.invoke(app, ["layout", write_spec(temp_dir), "--out", "svg", "-o", str(out)])
            assert result.exit_code == 0
            assert out.read_text().startswith("<svg")

    def test_layout_rejects_bad_format(self):
        """Test an unknown layout format."""
        with tempfile.TemporaryDirectory() as temp_dir:
            result = runner.invoke(app, ["layout", write_spec(temp_dir), "--out", "png"])
            assert result.exit_code == 1
            assert "Error:" in result.stdout

    def test_export_conversions(self):
        """Test spec to JSON code file, then code file to alist."""
        with tempfile.TemporaryDirectory() as temp_dir:
            code_json = Path(temp_dir) / "code.json"
            result = runner.invoke(app, ["export", write_spec(temp_dir), "-o", str(code_json)])
            assert result.exit_code == 0
            assert "Exported [[18,2]]" in result.stdout

            base = Path(temp_dir) / "converted"
            result = runner.invoke(app, ["export", str(code_json), "-f", "alist", "-o", str(base)])
            assert result.exit_code == 0
            assert (Path(temp_dir) / "converted_gx.alist").exists()

    def test_export_unsupported_format(self):
        """Test an unsupported export format."""
        with tempfile.TemporaryDirectory() as temp_dir:
            result = runner.invoke(app, ["export", write_spec(temp_dir), "-f", "pdf"])
            assert result.exit_code == 1
            assert "Unsupported format" in result.stdout
