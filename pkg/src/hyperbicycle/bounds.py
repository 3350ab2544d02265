"""Distance bounds of hyperbicycle codes from the parameters of their tiled classical
codes.

All distances enter as intervals. Lower bounds are computed from the lower ends and
upper bounds from the (witnessed) upper ends, so every emitted bound stays valid when
a classical distance is only bracketed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .classical import INF, ClassicalParams, classical_params, subset_distance
from .constructions import HyperbicycleSpec, tiled_matrices
from .gf2 import BinMat, mat_sum
from .logging import get_logger
from .poly import BinPoly
from .symmetry import SymmetryDecomp, symmetry_decompose

log = get_logger(__name__)

ONE_PLUS_X = BinPoly(0b11)


def floor_div(d: float, c: int) -> float:
    return d if math.isinf(d) else float(math.floor(d / c))


def ceil_div(d: float, c: int) -> float:
    return d if math.isinf(d) else float(math.ceil(d / c))


def generator_distance_at_least_two(m: BinMat) -> bool:
    """True when no unit vector lies in the row space of `m`."""
    if m.cols == 0:
        return True
    ref, _ = m.echelon()
    if ref.rows == 0:
        return True
    return all(row_weight > 0 for row_weight in ref.reduce(BinMat.identity(m.cols)).row_weights())


@dataclass(frozen=True)
class ClassUpper:
    """D <= min(first, second) for one symmetry class."""

    p: BinPoly
    pair: str
    first: tuple[float, float]
    second: tuple[float, float]

    @property
    def value(self) -> float:
        return min(self.first[1], self.second[1])


@dataclass(frozen=True)
class Premises:
    square: bool
    symmetric_kernels: bool
    nonempty: bool
    generators_all: bool
    generators_ab: bool
    c_even: bool

    @property
    def repeated(self) -> bool:
        """Square blocks whose tiled codes hold only block-symmetric words, k_i > 0."""
        return self.square and self.symmetric_kernels and self.nonempty


@dataclass(frozen=True)
class BoundsReport:
    c: int
    tiled: dict[str, ClassicalParams]
    d_lo: float
    d_hi: float
    generic_lower: float
    class_uppers: tuple[ClassUpper, ...]
    premises: Premises
    repeated_bracket: tuple[float, float] | None = None
    repeated_exact: tuple[float, float] | None = None
    repeated_even: tuple[float, float] | None = None
    noncss_lower: float = 0.0
    noncss_even_lower: float | None = None
    notes: list[str] = field(default_factory=list)

    def css_interval(self) -> tuple[float, float, dict[str, str]]:
        """Tightest (lower, upper) implied for the CSS code, with the bound behind each end."""
        lo, lo_src = self.generic_lower, "generic-lower"
        hi, hi_src = INF, "none"
        for up in self.class_uppers:
            if up.value < hi:
                hi, hi_src = up.value, f"class-upper:{up.p}"
        for name, pair in (
            ("repeated-bracket", self.repeated_bracket),
            ("repeated-even", self.repeated_even),
            ("repeated-exact", self.repeated_exact),
        ):
            if pair is None:
                continue
            if pair[0] > lo:
                lo, lo_src = pair[0], name
            if pair[1] < hi:
                hi, hi_src = pair[1], name
        return lo, hi, {"lower": lo_src, "upper": hi_src}

    def noncss_interval(self) -> tuple[float, float, dict[str, str]]:
        lo, lo_src = self.noncss_lower, "noncss-lower"
        if self.noncss_even_lower is not None and self.noncss_even_lower > lo:
            lo, lo_src = self.noncss_even_lower, "noncss-even"
        hi, hi_src = INF, "none"
        for up in self.class_uppers:
            if up.value < hi:
                hi, hi_src = up.value, f"class-upper:{up.p}"
        return lo, hi, {"lower": lo_src, "upper": hi_src}


def _premises(spec: HyperbicycleSpec, dec: SymmetryDecomp) -> Premises:
    sym = dec.class_of(ONE_PLUS_X)
    symmetric = sym is not None and sym.k1 == dec.k1 and sym.k2 == dec.k2
    sum_a = mat_sum(spec.a, spec.r1, spec.n1)
    sum_b = mat_sum(spec.b, spec.r2, spec.n2)
    ab = generator_distance_at_least_two(sum_a) and generator_distance_at_least_two(sum_b)
    transposes = generator_distance_at_least_two(sum_a.T) and generator_distance_at_least_two(
        sum_b.T
    )
    return Premises(
        square=spec.is_square(),
        symmetric_kernels=symmetric,
        nonempty=dec.k1 > 0 and dec.k2 > 0,
        generators_all=ab and transposes,
        generators_ab=ab,
        c_even=spec.c % 2 == 0,
    )


def theoretical_bounds(
    spec: HyperbicycleSpec,
    enum_cap: int | None = None,
    seed: int | None = None,
    tiled_params: dict[str, ClassicalParams] | None = None,
) -> BoundsReport:
    """Every bound whose premises hold, together with the premise evaluation."""
    t = tiled_matrices(spec)
    c = spec.c
    mats = {"h1": t.h1, "h2": t.h2, "h1_tilde": t.h1_tilde, "h2_tilde": t.h2_tilde}
    params = tiled_params or {
        name: classical_params(m, enum_cap=enum_cap, seed=seed) for name, m in mats.items()
    }
    d_lo = min(p.d_lo for p in params.values())
    d_hi = min(p.d_hi for p in params.values())
    dec = symmetry_decompose(spec, t)

    layouts = {
        "h1": (False, True),
        "h2": (False, False),
        "h1_tilde": (True, True),
        "h2_tilde": (True, False),
    }

    def subset(name: str, p: BinPoly) -> tuple[float, float]:
        transposed, block_first = layouts[name]
        return subset_distance(
            mats[name],
            c,
            p,
            enum_cap=enum_cap,
            seed=seed,
            transposed=transposed,
            block_first=block_first,
            lower=params[name].d_lo,
        )

    uppers = []
    for cl in dec.classes:
        if cl.residual:
            continue
        if cl.k1 > 0 and cl.k2_tilde > 0:
            uppers.append(ClassUpper(cl.p, "d1,d2~", subset("h1", cl.p), subset("h2_tilde", cl.p)))
        if cl.k2 > 0 and cl.k1_tilde > 0:
            uppers.append(ClassUpper(cl.p, "d2,d1~", subset("h2", cl.p), subset("h1_tilde", cl.p)))

    prem = _premises(spec, dec)
    notes = []
    bracket = exact = even = None
    if prem.repeated:
        bracket = (floor_div(d_lo, c), d_hi)
        if prem.generators_all and c == 2:
            exact = (d_lo, d_hi)
            notes.append("c = 2 with symmetric kernels: D equals d")
        if prem.generators_all and prem.c_even:
            even = (ceil_div(2 * d_lo, c), d_hi)

    nd_lo = min(params["h1"].d_lo, params["h2"].d_lo)
    noncss_even = None
    if prem.square and prem.symmetric_kernels and prem.c_even and prem.generators_ab:
        noncss_even = ceil_div(2 * nd_lo, c)

    report = BoundsReport(
        c=c,
        tiled=params,
        d_lo=d_lo,
        d_hi=d_hi,
        generic_lower=floor_div(d_lo, c),
        class_uppers=tuple(uppers),
        premises=prem,
        repeated_bracket=bracket,
        repeated_exact=exact,
        repeated_even=even,
        noncss_lower=floor_div(nd_lo, c),
        noncss_even_lower=noncss_even,
        notes=notes,
    )
    log.debug("bounds for c=%d: css interval %s", c, report.css_interval()[:2])
    return report
