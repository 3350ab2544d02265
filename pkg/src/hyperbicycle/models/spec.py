"""Input models: JSON code specs as accepted by `construct --spec` and `analyze --spec`."""

from __future__ import annotations

from typing import Literal, get_args

from pydantic import BaseModel, ConfigDict, Field, model_validator

Family = Literal[
    "hyperbicycle",
    "noncss-hyperbicycle",
    "generalized-bicycle",
    "symmetric-bicycle",
    "hypergraph-product",
    "haah",
    "repeated-cyclic",
]

FAMILIES: tuple[str, ...] = get_args(Family)


class FileBlock(BaseModel):
    """A block read from a dense01 or alist file, relative to the spec file."""

    model_config = ConfigDict(extra="forbid")

    file: str


class CirculantBlock(BaseModel):
    """All c blocks at once, cut from one circulant of the given size."""

    model_config = ConfigDict(extra="forbid")

    circulant: str
    size: int = Field(ge=1)


BlockEntry = list[str] | FileBlock
Blocks = list[BlockEntry] | CirculantBlock


class CodeSpecModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: Family
    name: str = ""

    # hyperbicycle and its non-CSS variant
    c: int | None = Field(default=None, ge=1)
    chi: int = 1
    a: Blocks | None = None
    b: Blocks | None = None

    # polynomial families
    f1: str | None = None
    f2: str | None = None
    n: int | None = Field(default=None, ge=1)

    # hypergraph product (matrices or polynomials with n) and repeated-cyclic (polynomials)
    h1: BlockEntry | str | None = None
    h2: BlockEntry | str | None = None
    n1: int | None = Field(default=None, ge=1)
    n2: int | None = Field(default=None, ge=1)

    # haah
    variant: int | None = Field(default=None, ge=1, le=4)
    L: int | None = Field(default=None, ge=2)

    @model_validator(mode="after")
    def _required_fields(self) -> CodeSpecModel:
        required: dict[str, tuple[str, ...]] = {
            "hyperbicycle": ("c", "a"),
            "noncss-hyperbicycle": ("c", "a"),
            "generalized-bicycle": ("f1", "f2", "n"),
            "symmetric-bicycle": ("f1", "f2", "n"),
            "hypergraph-product": ("h1", "h2"),
            "haah": ("variant", "L"),
            "repeated-cyclic": ("h1", "n1", "h2", "n2", "c"),
        }
        missing = [f for f in required[self.family] if getattr(self, f) is None]
        if missing:
            raise ValueError(f"family '{self.family}' needs field(s): {', '.join(missing)}")
        return self
