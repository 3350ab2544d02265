"""Planar pictures of square-block hyperbicycle codes.

Qubits of the left sublattice sit on an r2 x (c n1) grid (row = copy of H1, column =
column of H1) and those of the right sublattice on a (c n2) x r1 grid. The picture
marks the support of one X and one Z stabilizer generator, the blocks across which
the periodic boundary is shifted by chi, and a shaded region of K qubits each of
which is touched by exactly one X-type logical operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from html import escape

from .constructions import HyperbicycleSpec, hyperbicycle
from .errors import ConstructionError
from .gf2 import BinMat
from .logging import get_logger
from .logicals import logical_operators

log = get_logger(__name__)

X_COLOR = "#d62728"
Z_COLOR = "#1f77b4"
BOTH_COLOR = "#2ca02c"
SHADE_COLOR = "#d9d9d9"


@dataclass(frozen=True)
class Sublattice:
    name: str
    rows: int
    cols: int
    offset: int
    block: int
    block_axis: str

    def index(self, r: int, col: int) -> int:
        return self.offset + r * self.cols + col


@dataclass(frozen=True)
class Layout:
    spec: HyperbicycleSpec
    left: Sublattice
    right: Sublattice
    x_support: frozenset[int]
    z_support: frozenset[int]
    shaded: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.shaded)

    def cell(self, q: int) -> str:
        """'*' both generators, 'X'/'Z' one generator, '#' logical region, '.' otherwise."""
        in_x, in_z = q in self.x_support, q in self.z_support
        if in_x and in_z:
            return "*"
        if in_x:
            return "X"
        if in_z:
            return "Z"
        return "#" if q in self.shaded else "."


def _support(m: BinMat, row: int) -> frozenset[int]:
    return frozenset(m.row(row).support()) if m.rows else frozenset()


def _pivots(m: BinMat) -> frozenset[int]:
    return frozenset(m.echelon()[1]) if m.rows else frozenset()


def build_layout(spec: HyperbicycleSpec) -> Layout:
    """Lay out a square-block spec.

    Raises:
        ConstructionError: If the blocks are not square
    """
    if not spec.is_square():
        raise ConstructionError(
            "layout needs square blocks (r1 = n1, r2 = n2); codes with rectangular "
            "blocks would need two separate rectangles, which are not drawn"
        )
    code = hyperbicycle(spec)
    c = spec.c
    left = Sublattice("left", spec.r2, c * spec.n1, 0, spec.n1, "cols")
    right = Sublattice("right", c * spec.n2, spec.r1, left.rows * left.cols, spec.n2, "rows")
    shaded: frozenset[int] = frozenset()
    if code.k > 0:
        # reduced echelon rows each own one pivot qubit that no other row touches
        xbar = logical_operators(code, spec).xbar.echelon()[0]
        shaded = _pivots(xbar)
    layout = Layout(spec, left, right, _support(code.gx, 0), _support(code.gz, 0), shaded)
    log.debug("layout c=%d chi=%d with %d shaded qubits", c, spec.chi, layout.k)
    return layout


def _boundary_note(layout: Layout) -> str:
    spec = layout.spec
    if spec.chi == 1:
        return f"periodic boundary across {spec.c} blocks, no shift"
    return f"periodic boundary across {spec.c} blocks, shifted by chi={spec.chi} blocks"


def render_text(layout: Layout) -> str:
    """Plain-text picture; '|' and '-' separate the c blocks, '>' marks the shifted seam."""
    spec = layout.spec
    out = [
        f"hyperbicycle c={spec.c} chi={spec.chi}  N={spec.n_qubits}  K={layout.k}",
        "legend: X = X generator, Z = Z generator, * = both, # = logical region",
        _boundary_note(layout),
        "",
        f"left sublattice ({layout.left.rows} x {layout.left.cols})",
    ]
    lat = layout.left
    for r in range(lat.rows):
        chunks = [
            "".join(layout.cell(lat.index(r, b * lat.block + j)) for j in range(lat.block))
            for b in range(spec.c)
        ]
        out.append("|".join(chunks) + (" >" if spec.chi != 1 else ""))
    out += ["", f"right sublattice ({layout.right.rows} x {layout.right.cols})"]
    lat = layout.right
    for r in range(lat.rows):
        if r and r % lat.block == 0:
            out.append("-" * lat.cols)
        out.append("".join(layout.cell(lat.index(r, col)) for col in range(lat.cols)))
    if spec.chi != 1:
        out.append("v" * lat.cols)
    return "\n".join(out) + "\n"


def _svg_cells(layout: Layout, lat: Sublattice, x0: int, y0: int, size: int) -> list[str]:
    fills = {"X": X_COLOR, "Z": Z_COLOR, "*": BOTH_COLOR, "#": SHADE_COLOR, ".": "white"}
    classes = {"X": "x-gen", "Z": "z-gen", "*": "overlap", "#": "logical", ".": "qubit"}
    parts = []
    for r in range(lat.rows):
        for col in range(lat.cols):
            mark = layout.cell(lat.index(r, col))
            parts.append(
                f'<rect class="{classes[mark]}" x="{x0 + col * size}" y="{y0 + r * size}" '
                f'width="{size}" height="{size}" fill="{fills[mark]}" stroke="#999"/>'
            )
    bound = lat.cols if lat.block_axis == "cols" else lat.rows
    for b in range(1, bound // lat.block):
        if lat.block_axis == "cols":
            x = x0 + b * lat.block * size
            parts.append(
                f'<line class="block" x1="{x}" y1="{y0}" x2="{x}" y2="{y0 + lat.rows * size}" '
                'stroke="black" stroke-width="2"/>'
            )
        else:
            y = y0 + b * lat.block * size
            parts.append(
                f'<line class="block" x1="{x0}" y1="{y}" x2="{x0 + lat.cols * size}" y2="{y}" '
                'stroke="black" stroke-width="2"/>'
            )
    return parts


def render_svg(layout: Layout, cell: int = 16) -> str:
    """SVG picture with the same content as `render_text`; classes name each cell's role."""
    spec = layout.spec
    margin, gap = 30, 40
    left, right = layout.left, layout.right
    width = 2 * margin + left.cols * cell + gap + right.cols * cell
    height = 2 * margin + max(left.rows, right.rows) * cell + 20
    x_right = margin + left.cols * cell + gap
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(f'hyperbicycle c={spec.c} chi={spec.chi} N={spec.n_qubits} K={layout.k}')}</title>",
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="3" '
        'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="black"/></marker></defs>',
    ]
    parts += _svg_cells(layout, left, margin, margin, cell)
    parts += _svg_cells(layout, right, x_right, margin, cell)
    if spec.chi != 1:
        y = margin + left.rows * cell + 10
        x_end = margin + left.cols * cell
        shift = spec.chi * left.block * cell
        parts.append(
            f'<line class="boundary-shift" x1="{x_end}" y1="{y}" x2="{x_end - shift}" y2="{y}" '
            'stroke="black" marker-end="url(#arrow)"/>'
        )
    parts.append(
        f'<text x="{margin}" y="{height - 8}" font-family="monospace" font-size="11">'
        f"{escape(_boundary_note(layout))}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
