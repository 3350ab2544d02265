"""Symmetry-class decomposition of quasi-cyclic codes and the dimension formulas.

A code vector of a tiled matrix lives on c blocks; the block shift I_1 turns each code
into a module over GF(2)[x]/(x^c - 1). For every prime power p = p_alpha^m dividing
x^c - 1 we count the dimension that first appears at annihilator p, which feeds the
logical-qubit count

    K = 2 sum_p k1(p) k2(p) / k0(p) - k1 s2 - k2 s1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .classical import class_operator
from .constructions import CssCode, HyperbicycleSpec, NonCssCode, TiledMatrices, hyperbicycle, tiled_matrices
from .errors import ConstructionError, DecompositionError
from .gf2 import BinMat, vstack
from .logging import get_logger
from .poly import BinPoly, factor_xc_minus_1

log = get_logger(__name__)


@dataclass(frozen=True)
class SymmetryClass:
    p: BinPoly
    k0: int
    k1: int
    k2: int
    k1_tilde: int
    k2_tilde: int
    residual: bool = False


@dataclass(frozen=True)
class _Layout:
    """How the c-factor sits inside the kernel coordinates of one tiled matrix."""

    matrix: BinMat
    block: int
    block_first: bool
    transposed: bool


def _layouts(spec: HyperbicycleSpec, t: TiledMatrices) -> dict[str, _Layout]:
    return {
        "k1": _Layout(t.h1, spec.n1, True, False),
        "k2": _Layout(t.h2, spec.n2, False, False),
        "k1_tilde": _Layout(t.h1_tilde, spec.r1, True, True),
        "k2_tilde": _Layout(t.h2_tilde, spec.r2, False, True),
    }


def annihilated_dimension(layout: _Layout, q: BinPoly, c: int) -> int:
    """dim(ker H intersected with ker q(I_1) lifted to the kernel coordinates)."""
    op = class_operator(q, c, layout.block, layout.transposed, layout.block_first)
    return layout.matrix.cols - vstack(layout.matrix, op).rank()


@dataclass(frozen=True)
class SymmetryDecomp:
    c: int
    classes: tuple[SymmetryClass, ...]
    k1: int
    k2: int
    k1_tilde: int
    k2_tilde: int
    s1: int
    s2: int

    def totals_complete(self) -> bool:
        return all(
            sum(getattr(cl, name) for cl in self.classes) == getattr(self, name)
            for name in ("k1", "k2", "k1_tilde", "k2_tilde")
        )

    def transposed_identity_holds(self) -> bool:
        """k_i(p) - k~_i(p) = s_i k0(p) for every class."""
        return all(
            cl.k1 - cl.k1_tilde == self.s1 * cl.k0 and cl.k2 - cl.k2_tilde == self.s2 * cl.k0
            for cl in self.classes
            if not cl.residual
        )

    def pair_sum(self, first: str, second: str) -> int:
        """sum_p first(p) * second(p) / k0(p), checked for integrality."""
        total = 0
        for cl in self.classes:
            num = getattr(cl, first) * getattr(cl, second)
            if num % cl.k0:
                raise DecompositionError(
                    f"class {cl.p}: {first}*{second} = {num} is not divisible by k0 = {cl.k0}"
                )
            total += num // cl.k0
        return total

    def class_of(self, p: BinPoly) -> SymmetryClass | None:
        return next((cl for cl in self.classes if cl.p == p), None)


def symmetry_decompose(spec: HyperbicycleSpec, tiled: TiledMatrices | None = None) -> SymmetryDecomp:
    t = tiled or tiled_matrices(spec)
    c = spec.c
    fact = factor_xc_minus_1(c)
    layouts = _layouts(spec, t)
    totals = {name: lay.matrix.cols - lay.matrix.rank() for name, lay in layouts.items()}

    classes: list[SymmetryClass] = []
    for p_alpha, mult in fact.base:
        previous = dict.fromkeys(layouts, 0)
        for m in range(1, mult + 1):
            q = p_alpha**m
            dims = {name: annihilated_dimension(lay, q, c) for name, lay in layouts.items()}
            classes.append(
                SymmetryClass(q, p_alpha.degree, *(dims[n] - previous[n] for n in layouts))
            )
            previous = dims
    if not fact.is_prime_power():
        residual = {n: totals[n] - sum(getattr(cl, n) for cl in classes) for n in layouts}
        if any(residual.values()):
            log.warning("nonzero residual class for c=%d: %s", c, residual)
        classes.append(
            SymmetryClass(
                BinPoly.x_power_minus_one(c), 1, *(residual[n] for n in layouts), residual=True
            )
        )
    return SymmetryDecomp(
        c,
        tuple(classes),
        totals["k1"],
        totals["k2"],
        totals["k1_tilde"],
        totals["k2_tilde"],
        spec.s1,
        spec.s2,
    )


@dataclass(frozen=True)
class Kreport:
    n: int
    k_rank: int
    rank_gx: int
    rank_gz: int
    k_class_sum: int | None = None
    k_symmetric_form: int | None = None
    decomposition: SymmetryDecomp | None = None

    @property
    def mismatch(self) -> bool:
        others = [k for k in (self.k_class_sum, self.k_symmetric_form) if k is not None]
        return any(k != self.k_rank for k in others)


def class_sum_k(dec: SymmetryDecomp) -> int:
    return 2 * dec.pair_sum("k1", "k2") - dec.k1 * dec.s2 - dec.k2 * dec.s1


def symmetric_form_k(dec: SymmetryDecomp) -> int:
    return dec.pair_sum("k1", "k2_tilde") + dec.pair_sum("k2", "k1_tilde")


def count_logical_qubits(code: CssCode, spec: HyperbicycleSpec | None = None) -> Kreport:
    """K from ranks, plus the class-sum and symmetric-form values when a spec is given."""
    k_rank = code.k
    if k_rank < 0:
        raise DecompositionError(f"negative K from ranks: {k_rank}")
    if spec is None:
        return Kreport(code.n, k_rank, code.rank_gx, code.rank_gz)
    dec = symmetry_decompose(spec)
    report = Kreport(
        code.n,
        k_rank,
        code.rank_gx,
        code.rank_gz,
        class_sum_k(dec),
        symmetric_form_k(dec),
        dec,
    )
    if report.mismatch:
        log.warning(
            "K mismatch: rank %d, class sum %s, symmetric form %s",
            k_rank,
            report.k_class_sum,
            report.k_symmetric_form,
        )
    return report


@dataclass(frozen=True)
class RankCheck:
    predicted_gx: int
    predicted_gz: int
    computed_gx: int
    computed_gz: int

    @property
    def ok(self) -> bool:
        return self.predicted_gx == self.computed_gx and self.predicted_gz == self.computed_gz


def rank_formula_check(spec: HyperbicycleSpec, code: CssCode | None = None) -> RankCheck:
    """rank G_Z = n1 n2 c - sum k1 k2 / k0 and rank G_X = r1 r2 c - sum k~1 k~2 / k0."""
    dec = symmetry_decompose(spec)
    code = code or hyperbicycle(spec)
    predicted_gz = spec.n1 * spec.n2 * spec.c - dec.pair_sum("k1", "k2")
    predicted_gx = spec.r1 * spec.r2 * spec.c - dec.pair_sum("k1_tilde", "k2_tilde")
    return RankCheck(predicted_gx, predicted_gz, code.rank_gx, code.rank_gz)


@dataclass(frozen=True)
class NonCssK:
    k_classes: int
    k_rank: int

    @cached_property
    def ok(self) -> bool:
        return self.k_classes == self.k_rank


def noncss_K(code: NonCssCode, spec: HyperbicycleSpec) -> NonCssK:
    """K = sum_p k1(p) k2(p) / k0(p) for the symmetric non-CSS hyperbicycle."""
    if not spec.is_square():
        raise ConstructionError("the non-CSS count needs square blocks")
    t = tiled_matrices(spec)
    if t.h1 != t.h1_tilde or t.h2 != t.h2_tilde:
        raise ConstructionError("the non-CSS count needs H1 = H1~ and H2 = H2~")
    dec = symmetry_decompose(spec, t)
    return NonCssK(dec.pair_sum("k1", "k2"), code.k)
