"""Reading matrices, polynomials, JSON code specs and serialized codes from disk."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np
import yaml
from pydantic import ValidationError

from .constructions import CssCode, HyperbicycleSpec, NonCssCode, circulant_split
from .errors import DimensionError, ParseError, PolynomialError
from .gf2 import BinMat
from .logging import get_logger
from .models import CirculantBlock, CodeFile, CodeSpecModel, FileBlock
from .poly import BinPoly

log = get_logger(__name__)


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped text) for every line that is not blank or a comment."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((number, line))
    return out


def _ints(number: int, line: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as e:
        raise ParseError(f"line {number}: expected integers for {what}, got {line!r}") from e


def parse_dense01(text: str) -> BinMat:
    """Parse a dense01 matrix.

    The first content line holds ``rows cols``; each following line is one row written as
    a 0/1 string. Blank lines and ``#`` comments are skipped.

    Args:
        text: File contents

    Returns:
        The parsed matrix

    Raises:
        ParseError: On a malformed header, a row of the wrong length or a stray character
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("line 1: empty dense01 input")
    number, header = lines[0]
    dims = _ints(number, header, "the 'rows cols' header")
    if len(dims) != 2 or min(dims) < 0:
        raise ParseError(f"line {number}: header must be 'rows cols', got {header!r}")
    rows, cols = dims
    body = lines[1:]
    if len(body) != rows:
        last = body[-1][0] if body else number
        raise ParseError(f"line {last}: expected {rows} rows, found {len(body)}")
    dense = np.zeros((rows, cols), dtype=np.uint8)
    for i, (number, line) in enumerate(body):
        if len(line) != cols:
            raise ParseError(f"line {number}: row has {len(line)} entries, expected {cols}")
        bad = set(line) - {"0", "1"}
        if bad:
            raise ParseError(f"line {number}: unexpected character(s) {''.join(sorted(bad))!r}")
        dense[i] = np.frombuffer(line.encode(), dtype=np.uint8) - ord("0")
    return BinMat.from_dense(dense)


def parse_alist(text: str) -> BinMat:
    """Parse a MacKay alist matrix.

    Layout: ``N M`` (columns, rows), the two maximum weights, the N column weights, the M
    row weights, then N lines of 1-based row indices and M lines of 1-based column
    indices. Zero entries are padding. The row section must agree with the column
    section.
    """
    lines = _content_lines(text)
    if len(lines) < 4:
        raise ParseError(f"line {len(text.splitlines()) or 1}: alist input is truncated")
    (n0, l0), (n1, l1), (n2, l2), (n3, l3) = lines[:4]
    dims = _ints(n0, l0, "'N M'")
    if len(dims) != 2:
        raise ParseError(f"line {n0}: expected 'N M', got {l0!r}")
    n_cols, m_rows = dims
    _ints(n1, l1, "maximum weights")
    col_weights = _ints(n2, l2, "column weights")
    row_weights = _ints(n3, l3, "row weights")
    if len(col_weights) != n_cols:
        raise ParseError(f"line {n2}: {len(col_weights)} column weights for N={n_cols}")
    if len(row_weights) != m_rows:
        raise ParseError(f"line {n3}: {len(row_weights)} row weights for M={m_rows}")
    body = lines[4:]
    if len(body) < n_cols + m_rows:
        raise ParseError(
            f"line {body[-1][0] if body else n3}: expected {n_cols + m_rows} index lines, "
            f"found {len(body)}"
        )

    dense = np.zeros((m_rows, n_cols), dtype=np.uint8)
    for j, (number, line) in enumerate(body[:n_cols]):
        idx = [i for i in _ints(number, line, "row indices") if i]
        if len(idx) != col_weights[j]:
            raise ParseError(f"line {number}: column {j + 1} lists {len(idx)} rows, weight says {col_weights[j]}")
        if any(i < 1 or i > m_rows for i in idx):
            raise ParseError(f"line {number}: row index out of range 1..{m_rows}")
        dense[np.array(idx) - 1, j] = 1

    for i, (number, line) in enumerate(body[n_cols : n_cols + m_rows]):
        idx = sorted(j for j in _ints(number, line, "column indices") if j)
        if idx != sorted(int(j) + 1 for j in np.flatnonzero(dense[i])):
            raise ParseError(f"line {number}: row {i + 1} disagrees with the column section")
    return BinMat.from_dense(dense)


def read_matrix(path: str | Path) -> BinMat:
    """Read a matrix file; ``.alist`` files are alist, anything else dense01."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Reading {path} failed: {e}") from e
    try:
        return parse_alist(text) if path.suffix == ".alist" else parse_dense01(text)
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from e


def parse_polynomial(text: str, field: str = "polynomial") -> BinPoly:
    try:
        return BinPoly.parse(text)
    except PolynomialError as e:
        raise PolynomialError(f"{field}: {e}") from e


# -- JSON specs --


def _error_line(text: str, loc: tuple[Any, ...]) -> int:
    """Best-effort line of the first key named in a validation error location."""
    for key in loc:
        if isinstance(key, str):
            for number, line in enumerate(text.splitlines(), start=1):
                if f'"{key}"' in line:
                    return number
    return 1


def parse_spec(text: str) -> CodeSpecModel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}: invalid JSON: {e.msg}") from e
    try:
        return CodeSpecModel.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        line = _error_line(text, tuple(first["loc"]))
        where = ".".join(str(p) for p in first["loc"]) or "spec"
        raise ParseError(f"line {line}: {where}: {first['msg']}") from e


def load_spec(path: str | Path) -> CodeSpecModel:
    path = Path(path)
    try:
        return parse_spec(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ParseError(f"Reading {path} failed: {e}") from e
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from e


def resolve_block(entry: list[str] | FileBlock, base_dir: Path) -> BinMat:
    if isinstance(entry, FileBlock):
        return read_matrix(base_dir / entry.file)
    try:
        return BinMat.from_rows(entry)
    except (ValueError, DimensionError) as e:
        raise ParseError(f"Block parsing failed: {e}") from e


def resolve_blocks(
    blocks: list[list[str] | FileBlock] | CirculantBlock, c: int, base_dir: Path
) -> tuple[BinMat, ...]:
    """The c blocks of one side of a hyperbicycle spec."""
    if isinstance(blocks, CirculantBlock):
        if blocks.size % c:
            raise ParseError(f"circulant size {blocks.size} is not a multiple of c={c}")
        p = parse_polynomial(blocks.circulant, "circulant")
        return tuple(circulant_split(blocks.size // c, c, p))
    return tuple(resolve_block(entry, base_dir) for entry in blocks)


def spec_from_model(model: CodeSpecModel, base_dir: str | Path = ".") -> HyperbicycleSpec:
    """Hyperbicycle inputs from a spec; b defaults to a when omitted."""
    if model.c is None or model.a is None:
        raise ParseError(f"family '{model.family}' does not describe hyperbicycle blocks")
    base = Path(base_dir)
    a = resolve_blocks(model.a, model.c, base)
    b = resolve_blocks(model.b, model.c, base) if model.b is not None else a
    return HyperbicycleSpec(a, b, model.c, model.chi, model.name)


# -- serialized codes --


def code_from_file_model(model: CodeFile) -> tuple[CssCode | NonCssCode, HyperbicycleSpec | None]:
    """The code of a serialized document plus the hyperbicycle inputs it was built from."""
    spec = spec_from_model(model.spec) if model.spec is not None else None
    try:
        if model.kind == "css":
            gx = BinMat.from_rows(model.matrices["gx"], model.n)
            gz = BinMat.from_rows(model.matrices["gz"], model.n)
            split = tuple(model.split) if model.split else None
            return CssCode(gx, gz, dict(model.provenance), split), spec  # type: ignore[arg-type]
        h = BinMat.from_rows(model.matrices["h"], 2 * model.n)
        return NonCssCode(h, dict(model.provenance)), spec
    except KeyError as e:
        raise ParseError(f"Code file is missing matrix {e}") from e


def load_code_file(path: str | Path) -> tuple[CssCode | NonCssCode, HyperbicycleSpec | None]:
    """Load a code written by the json or yaml exporter."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
        data = yaml.safe_load(text) if path.suffix in (".yaml", ".yml") else json.loads(text)
        model = CodeFile.model_validate(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}: invalid JSON: {e.msg}") from e
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else 1
        raise ParseError(f"{path}: line {line}: invalid YAML: {e}") from e
    except (OSError, ValidationError) as e:
        raise ParseError(f"Loading {path} failed: {e}") from e
    log.debug("loaded %s code with N=%d from %s", model.kind, model.n, path)
    return code_from_file_model(model)


def model_from_spec(spec: HyperbicycleSpec, family: str = "hyperbicycle") -> CodeSpecModel:
    """Explicit-block spec document for `spec`, the inverse of `spec_from_model`."""

    def rows(m: BinMat) -> list[str]:
        return str(m).split("\n") if m.rows else []

    return CodeSpecModel(
        family=family,  # type: ignore[arg-type]
        name=spec.name,
        c=spec.c,
        chi=spec.chi,
        a=[rows(m) for m in spec.a],
        b=[rows(m) for m in spec.b],
    )
