"""Test Pydantic validation of spec documents and report models."""

import math

import pytest
from pydantic import ValidationError

from hyperbicycle.classical import ClassicalParams
from hyperbicycle.models import FAMILIES, CatalogCheck, CirculantBlock, CodeSpecModel, FileBlock
from hyperbicycle.models.report import ClassicalModel, finite


def test_every_family_is_listed():
    """Test the family names offered by the CLI."""
    assert "hyperbicycle" in FAMILIES
    assert "haah" in FAMILIES
    assert len(FAMILIES) == 7


def test_block_forms():
    """Test the three ways of giving blocks."""
    rows = CodeSpecModel(family="hyperbicycle", c=1, a=[["10", "01"]])
    assert rows.a == [["10", "01"]]

    files = CodeSpecModel.model_validate({"family": "hyperbicycle", "c": 1, "a": [{"file": "a.txt"}]})
    assert isinstance(files.a[0], FileBlock)

    circ = CodeSpecModel.model_validate(
        {"family": "hyperbicycle", "c": 2, "a": {"circulant": "1+x", "size": 6}}
    )
    assert isinstance(circ.a, CirculantBlock)


def test_extra_fields_rejected():
    """Test that unknown keys are an error."""
    with pytest.raises(ValidationError):
        CodeSpecModel.model_validate({"family": "haah", "variant": 1, "L": 2, "extra": 1})


def test_field_ranges():
    """Test the numeric limits of spec fields."""
    with pytest.raises(ValidationError):
        CodeSpecModel(family="haah", variant=5, L=2)
    with pytest.raises(ValidationError):
        CodeSpecModel(family="haah", variant=1, L=1)
    with pytest.raises(ValidationError):
        CodeSpecModel(family="hyperbicycle", c=0, a=[["1"]])


def test_required_fields_per_family():
    """Test the family-specific required fields."""
    with pytest.raises(ValidationError, match="needs field"):
        CodeSpecModel(family="repeated-cyclic", h1="1+x", n1=3)


def test_infinite_distance_serializes_as_null():
    """Test that k = 0 codes dump null distances."""
    assert finite(math.inf) is None
    assert finite(3.0) == 3
    model = ClassicalModel.from_params(ClassicalParams(4, 0, math.inf, math.inf, None, "empty"))
    data = model.to_dict()
    assert data["dLo"] is None
    assert data["method"] == "empty"


def test_catalog_check_status():
    """Test the ok flag of a verification row."""
    row = CatalogCheck(
        name="toric-3",
        tier="exact",
        citation="",
        n_expected=18,
        n_computed=18,
        k_expected=2,
        k_computed=2,
        k_methods_agree=True,
        d_expected="3",
    )
    assert row.ok
    row.distance_ok = False
    assert not row.ok
    assert "kMethodsAgree" in row.to_dict()


def test_catalog_check_deviation_and_error():
    """Test that a rebuilt K replaces the listed one and that a build error fails the row."""
    row = CatalogCheck(
        name="trace-dual-60",
        tier="exact",
        citation="",
        n_expected=60,
        n_computed=60,
        k_expected=40,
        k_reproduced=44,
        k_computed=44,
        deviation="not reachable",
        d_expected="4",
    )
    assert row.ok
    assert row.k_target == 44
    assert row.to_dict()["kReproduced"] == 44

    failed = CatalogCheck(
        name="broken", tier="exact", citation="", n_expected=5, k_expected=1, d_expected="3", error="boom"
    )
    assert failed.n_computed is None
    assert not failed.ok
