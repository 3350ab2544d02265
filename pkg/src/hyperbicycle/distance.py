"""Distance intervals for CSS and non-CSS codes.

Every result is an interval ``[d_lo, d_hi]``. The lower end is proved by an exhaustive
meet-in-the-middle search over all operators of weight at most ``2h``; the upper end is
the weight of an explicit logical operator, found by that same search, by the
sublattice candidates of a hyperbicycle spec, or by randomized information-set
search. Witnesses are re-verified before a result is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classical import INF, circulant
from .config import get_settings
from .constructions import CssCode, HyperbicycleSpec, NonCssCode, tiled_matrices
from .errors import CrossCheckError
from .gf2 import BinMat, BinVec, hstack
from .logging import get_logger
from .logicals import noncss_logicals, quotient_basis, symplectic_swap
from .poly import BinPoly
from .search import (
    Letter,
    half_weight_for_budget,
    information_set_search,
    light_vectors,
    meet_in_the_middle,
    path_to_vectors,
)

log = get_logger(__name__)


@dataclass(frozen=True)
class SideResult:
    """Distance interval for one operator type (X or Z for CSS codes, XZ otherwise)."""

    kind: str
    d_lo: float
    d_hi: float
    witness: BinVec | None = None
    lower_method: str = "meet-in-the-middle"
    upper_method: str = "meet-in-the-middle"

    @property
    def exact(self) -> bool:
        return self.d_lo == self.d_hi


@dataclass(frozen=True)
class DistanceResult:
    """Distance interval plus evidence.

    For CSS codes `witness` has length N and `witness_kind` says whether it is an X- or
    Z-type operator. For non-CSS codes it has length 2N and holds (a|b).
    """

    n: int
    k: int
    d_lo: float
    d_hi: float
    witness: BinVec | None
    witness_kind: str | None
    sides: tuple[SideResult, ...] = ()
    split: tuple[int, int] | None = None
    methods: dict[str, str] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.d_lo == self.d_hi

    @property
    def applicable(self) -> bool:
        return self.k > 0

    def side(self, kind: str) -> SideResult | None:
        return next((s for s in self.sides if s.kind == kind), None)

    def interval_str(self) -> str:
        if not self.applicable:
            return "n/a"
        if self.exact:
            return str(int(self.d_lo))
        hi = "?" if self.d_hi == INF else str(int(self.d_hi))
        return f"{int(self.d_lo)}..{hi}"


def or_weight(v: BinVec) -> int:
    """Number of qubits touched by a (a|b) vector."""
    n = v.len // 2
    dense = v.to_dense()
    return int(np.count_nonzero(dense[:n] | dense[n:]))


# -- witness checks --


def is_css_logical(code: CssCode, v: BinVec, kind: str) -> bool:
    """Z-type: G_X v = 0 and v outside rowspace(G_Z); X-type mirrored."""
    checks, stabilizers = (code.gx, code.gz) if kind == "Z" else (code.gz, code.gx)
    return checks.apply(v).weight == 0 and not stabilizers.row_space_contains(v)


def is_noncss_logical(code: NonCssCode, v: BinVec) -> bool:
    return symplectic_swap(code.h).apply(v).weight == 0 and not code.h.row_space_contains(v)


# -- shared search driver --


def _css_letters(checks: BinMat, logicals: BinMat) -> list[list[Letter]]:
    return [
        [(s, lg, 1)]
        for s, lg in zip(checks.column_ints(), logicals.column_ints(), strict=True)
    ]


def _noncss_letters(code: NonCssCode, logicals: BinMat) -> list[list[Letter]]:
    n = code.n
    a_cols, b_cols = code.a.column_ints(), code.b.column_ints()
    la_cols = logicals.columns_slice(0, n).column_ints()
    lb_cols = logicals.columns_slice(n, 2 * n).column_ints()
    return [
        [
            (b_cols[j], lb_cols[j], 1),
            (a_cols[j], la_cols[j], 2),
            (a_cols[j] ^ b_cols[j], la_cols[j] ^ lb_cols[j], 3),
        ]
        for j in range(n)
    ]


def _half_weight(n: int, alphabet: int, budget: int, half_weight: int | None) -> int:
    if half_weight is not None:
        return half_weight
    return half_weight_for_budget(n, alphabet, budget)


def _best_candidate(
    candidates: list[BinVec], logicals: BinMat, weight=lambda v: v.weight
) -> BinVec | None:
    best = None
    for v in candidates:
        if logicals.apply(v).weight and (best is None or weight(v) < weight(best)):
            best = v
    return best


def _css_side(
    code: CssCode,
    kind: str,
    budget: int,
    rand_iters: int,
    seed: int,
    workers: int,
    half_weight: int | None,
    candidates: list[BinVec],
) -> SideResult:
    checks, stabilizers = (code.gx, code.gz) if kind == "Z" else (code.gz, code.gx)
    kernel = checks.kernel_basis()
    # operators of this kind are detected by the opposite kind of logical
    logicals = quotient_basis(stabilizers.kernel_basis(), checks)
    n = code.n
    h = _half_weight(n, 1, budget, half_weight)
    mitm = meet_in_the_middle(_css_letters(checks, logicals), h)
    if mitm.weight is not None and mitm.witness is not None:
        vec, _ = path_to_vectors(mitm.witness, n)
        return SideResult(kind, mitm.weight, mitm.weight, vec)

    lo = float(mitm.proven_clean_below)
    best, method = None, "none"
    cand = _best_candidate(candidates, logicals)
    if cand is not None:
        best, method = cand, "sublattice"
    hit = information_set_search(kernel, logicals, rand_iters, seed, workers, reducer=stabilizers)
    if hit is not None and (best is None or hit.vector.weight < best.weight):
        best, method = hit.vector, "information-set"
    hi = float(best.weight) if best is not None else INF
    return SideResult(kind, lo, max(lo, hi), best, "meet-in-the-middle", method)


def _finish(
    code_n: int, k: int, sides: list[SideResult], split: tuple[int, int] | None
) -> DistanceResult:
    d_lo = min(s.d_lo for s in sides)
    best = min(sides, key=lambda s: s.d_hi)
    methods = {f"{s.kind}.lower": s.lower_method for s in sides} | {
        f"{s.kind}.upper": s.upper_method for s in sides
    }
    return DistanceResult(
        code_n,
        k,
        d_lo,
        best.d_hi,
        best.witness,
        best.kind,
        tuple(sides),
        split,
        methods,
    )


def css_distance(
    code: CssCode,
    budget: int | None = None,
    rand_iters: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    half_weight: int | None = None,
    spec: HyperbicycleSpec | None = None,
) -> DistanceResult:
    """D = min(d_X, d_Z) of a CSS code, as an interval with a verified witness."""
    settings = get_settings()
    budget = settings.enum_budget if budget is None else budget
    rand_iters = settings.rand_iters if rand_iters is None else rand_iters
    seed = settings.seed if seed is None else seed
    workers = settings.workers if workers is None else workers

    if code.k == 0:
        return DistanceResult(code.n, 0, INF, INF, None, None, split=code.split)

    sides = []
    for kind in ("X", "Z"):
        cands: list[BinVec] = []
        if spec is not None and spec.n_qubits == code.n:
            cands = _expand_candidates(code, spec, kind, seed)
        side = _css_side(code, kind, budget, rand_iters, seed, workers, half_weight, cands)
        if side.witness is not None and not is_css_logical(code, side.witness, kind):
            raise CrossCheckError(f"{kind}-type witness of weight {side.d_hi} is not a logical operator")
        log.info("d_%s in [%s, %s]", kind, side.d_lo, side.d_hi)
        sides.append(side)
    return _finish(code.n, code.k, sides, code.split)


def _expand_candidates(code: CssCode, spec: HyperbicycleSpec, kind: str, seed: int) -> list[BinVec]:
    """Sublattice vectors built from the lightest words of the relevant tiled codes."""
    t = tiled_matrices(spec)
    c, n = spec.c, code.n
    split0 = spec.r2 * c * spec.n1
    if kind == "Z":
        parts = [
            (light_vectors(t.h1.kernel_basis(), 32, seed), 0, spec.r2, True),
            (light_vectors(t.h2.kernel_basis(), 32, seed), split0, spec.r1, False),
        ]
    else:
        parts = [
            (light_vectors(t.h2_tilde.kernel_basis(), 32, seed), 0, spec.n1, False),
            (light_vectors(t.h1_tilde.kernel_basis(), 32, seed), split0, spec.n2, True),
        ]
    out = []
    for words, offset, copies, outer in parts:
        for w in words:
            support = np.array(w.support(), dtype=np.int64)
            for j in range(copies):
                idx = offset + (j * w.len + support if outer else support * copies + j)
                dense = np.zeros(n, dtype=np.uint8)
                dense[idx] = 1
                out.append(BinVec.from_dense(dense))
    return out


def noncss_distance(
    code: NonCssCode,
    budget: int | None = None,
    rand_iters: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
    half_weight: int | None = None,
    spec: HyperbicycleSpec | None = None,
) -> DistanceResult:
    """Minimum OR-weight of a (a|b) commuting with all stabilizers but outside the group."""
    settings = get_settings()
    budget = settings.enum_budget if budget is None else budget
    rand_iters = settings.rand_iters if rand_iters is None else rand_iters
    seed = settings.seed if seed is None else seed
    workers = settings.workers if workers is None else workers

    n = code.n
    if code.k == 0:
        return DistanceResult(n, 0, INF, INF, None, None)
    logicals = noncss_logicals(code)
    h = _half_weight(n, 3, budget, half_weight)
    mitm = meet_in_the_middle(_noncss_letters(code, logicals), h)
    if mitm.weight is not None and mitm.witness is not None:
        a, b = path_to_vectors(mitm.witness, n)
        vec = BinVec.from_dense(np.concatenate([a.to_dense(), b.to_dense()]))
        side = SideResult("XZ", mitm.weight, mitm.weight, vec)
    else:
        lo = float(mitm.proven_clean_below)
        swapped = symplectic_swap(logicals)
        best, method = None, "none"
        if spec is not None and spec.c * spec.n1 * spec.n2 == n:
            best = _best_candidate(_noncss_candidates(spec, seed), swapped, or_weight)
            method = "sublattice" if best is not None else method
        hit = information_set_search(
            normalizer_kernel(code), swapped, rand_iters, seed, workers, reducer=code.h
        )
        if hit is not None and (best is None or or_weight(hit.vector) < or_weight(best)):
            best, method = hit.vector, "information-set"
        hi = float(or_weight(best)) if best is not None else INF
        side = SideResult("XZ", lo, max(lo, hi), best, "meet-in-the-middle", method)
    if side.witness is not None and not is_noncss_logical(code, side.witness):
        raise CrossCheckError(f"witness of weight {side.d_hi} is not a logical operator")
    log.info("D in [%s, %s]", side.d_lo, side.d_hi)
    return _finish(n, code.k, [side], None)


def normalizer_kernel(code: NonCssCode) -> BinMat:
    return symplectic_swap(code.h).kernel_basis()


def _noncss_candidates(spec: HyperbicycleSpec, seed: int) -> list[BinVec]:
    """X-type (w x e | 0) with w in ker H2 and Z-type (0 | e x w) with w in ker H1."""
    t = tiled_matrices(spec)
    n = spec.c * spec.n1 * spec.n2
    out = []
    for w in light_vectors(t.h2.kernel_basis(), 32, seed):
        support = np.array(w.support(), dtype=np.int64)
        for j in range(spec.r1):
            dense = np.zeros(2 * n, dtype=np.uint8)
            dense[support * spec.r1 + j] = 1
            out.append(BinVec.from_dense(dense))
    for w in light_vectors(t.h1.kernel_basis(), 32, seed):
        support = np.array(w.support(), dtype=np.int64)
        for j in range(spec.r2):
            dense = np.zeros(2 * n, dtype=np.uint8)
            dense[n + j * w.len + support] = 1
            out.append(BinVec.from_dense(dense))
    return out


# -- dual-distance bound --


@dataclass(frozen=True)
class DualDistance:
    """Minimum symbol weight of the symplectic dual of a set of (a|b) generators."""

    d_lo: float
    d_hi: float
    witness: BinVec | None
    note: str = "lower bound on D; not tight for degenerate codes"

    @property
    def exact(self) -> bool:
        return self.d_lo == self.d_hi


def symplectic_dual_distance(
    h: BinMat, budget: int | None = None, rand_iters: int | None = None, seed: int | None = None
) -> DualDistance:
    """Lightest nonzero (u|v) with zero symplectic product against every row of `h`."""
    settings = get_settings()
    budget = settings.enum_budget if budget is None else budget
    rand_iters = settings.rand_iters if rand_iters is None else rand_iters
    seed = settings.seed if seed is None else seed
    n = h.cols // 2
    kernel = symplectic_swap(h).kernel_basis()
    if kernel.rows == 0:
        return DualDistance(INF, INF, None)
    a_cols = h.columns_slice(0, n).column_ints()
    b_cols = h.columns_slice(n, 2 * n).column_ints()
    letters = [
        [(b_cols[j], 0, 1), (a_cols[j], 0, 2), (a_cols[j] ^ b_cols[j], 0, 3)] for j in range(n)
    ]
    mitm = meet_in_the_middle(letters, half_weight_for_budget(n, 3, budget), distinct=True)
    if mitm.weight is not None and mitm.witness is not None:
        a, b = path_to_vectors(mitm.witness, n)
        vec = BinVec.from_dense(np.concatenate([a.to_dense(), b.to_dense()]))
        return DualDistance(mitm.weight, mitm.weight, vec)
    hit = information_set_search(kernel, None, rand_iters, seed)
    if hit is None:
        return DualDistance(mitm.proven_clean_below, INF, None)
    return DualDistance(mitm.proven_clean_below, max(mitm.proven_clean_below, or_weight(hit.vector)), hit.vector)


def f4_dual_distance_bound(f1: BinPoly, f2: BinPoly, n: int, **kwargs) -> DualDistance:
    """Dual distance of the additive cyclic code generated by w*f1(x) + f2(x) on n symbols."""
    return symplectic_dual_distance(hstack(circulant(n, f1), circulant(n, f2)), **kwargs)

