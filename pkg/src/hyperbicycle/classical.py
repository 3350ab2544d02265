"""Classical binary codes: circulants, cyclic codes, [n, k, d] parameters, subset
distances and random regular LDPC matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import get_settings
from .errors import ConstructionError, PolynomialError
from .gf2 import BinMat, BinVec, circshift_perm, kron
from .logging import get_logger
from .poly import BinPoly, factor_xc_minus_1
from .search import (
    enumerate_span,
    half_weight_for_budget,
    information_set_search,
    meet_in_the_middle,
    popcount_rows,
    sample_span,
)

log = get_logger(__name__)

INF = math.inf


def circulant(n: int, p: BinPoly) -> BinMat:
    """n x n circulant: row 0 holds p's coefficients, each later row is a right shift."""
    coeffs = np.zeros(n, dtype=np.uint8)
    for e in p.exponents:
        coeffs[e % n] ^= 1
    dense = np.stack([np.roll(coeffs, k) for k in range(n)]) if n else np.zeros((0, 0), np.uint8)
    return BinMat.from_dense(dense)


@dataclass(frozen=True)
class CyclicCodeSpec:
    """Cyclic code of length n with generator g and check polynomial h = (x^n - 1)/g."""

    n: int
    g: BinPoly
    h: BinPoly

    @classmethod
    def from_generator(cls, n: int, g: BinPoly) -> CyclicCodeSpec:
        q, r = divmod(BinPoly.x_power_minus_one(n), g)
        if not r.is_zero():
            raise PolynomialError(f"{g} does not divide x^{n}-1")
        return cls(n, g, q)

    @classmethod
    def from_check(cls, n: int, h: BinPoly) -> CyclicCodeSpec:
        spec = cls.from_generator(n, h)
        return cls(n, spec.h, h)

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    def check_matrix(self) -> BinMat:
        """The circulant of the check polynomial; its kernel has dimension deg h."""
        return circulant(self.n, self.h)


@dataclass(frozen=True)
class ClassicalParams:
    """[n, k, d] with d given as an interval; d is infinite when k == 0."""

    n: int
    k: int
    d_lo: float
    d_hi: float
    witness: BinVec | None = None
    method: str = "enumeration"

    @property
    def exact(self) -> bool:
        return self.d_lo == self.d_hi

    @property
    def d(self) -> float | None:
        return self.d_lo if self.exact else None

    def __str__(self) -> str:
        d = _fmt(self.d_lo) if self.exact else f"{_fmt(self.d_lo)}..{_fmt(self.d_hi)}"
        return f"[{self.n},{self.k},{d}]"


def _fmt(x: float) -> str:
    return "inf" if x == INF else str(int(x))


def classical_params(
    H: BinMat,
    enum_cap: int | None = None,
    rand_iters: int | None = None,
    seed: int | None = None,
    budget: int | None = None,
) -> ClassicalParams:
    """Parameters of the code ker H.

    The distance is exact when the dimension is at most `enum_cap`; otherwise the upper
    end comes from randomized search and the lower end from meet-in-the-middle
    enumeration within `budget`.
    """
    settings = get_settings()
    enum_cap = settings.enum_cap if enum_cap is None else enum_cap
    rand_iters = settings.rand_iters if rand_iters is None else rand_iters
    seed = settings.seed if seed is None else seed
    budget = settings.enum_budget if budget is None else budget

    n = H.cols
    basis = H.kernel_basis()
    k = basis.rows
    if k == 0:
        return ClassicalParams(n, 0, INF, INF, method="empty")
    if k <= enum_cap:
        w, vec = _span_min_weight(basis)
        return ClassicalParams(n, k, w, w, BinVec(n, vec), "enumeration")

    log.debug("k=%d above enumeration cap %d; using bounded search", k, enum_cap)
    h = half_weight_for_budget(n, 1, budget)
    letters = [[(col, 0, 1)] for col in H.column_ints()]
    mitm = meet_in_the_middle(letters, h, distinct=True)
    if mitm.weight is not None and mitm.witness is not None:
        vec = BinVec.from_support(n, [p for p, _ in mitm.witness])
        return ClassicalParams(n, k, mitm.weight, mitm.weight, vec, "meet-in-the-middle")
    hit = information_set_search(basis, None, rand_iters, seed)
    if hit is None:
        return ClassicalParams(n, k, mitm.proven_clean_below, n, None, "bounded")
    return ClassicalParams(n, k, mitm.proven_clean_below, hit.weight, hit.vector, "bounded")


def _span_min_weight(basis: BinMat) -> tuple[int, np.ndarray]:
    best_w, best = None, None
    for block_index, block in enumerate(enumerate_span(basis.bits)):
        w = popcount_rows(block)
        if block_index == 0:
            w[0] = np.iinfo(np.int64).max
        j = int(np.argmin(w))
        if best_w is None or w[j] < best_w:
            best_w, best = int(w[j]), block[j].copy()
    assert best is not None and best_w is not None
    return best_w, best


def transposed_params(H: BinMat, **kwargs) -> ClassicalParams:
    """Parameters of ker H^T."""
    return classical_params(H.T, **kwargs)


# -- symmetry classes of quasi-cyclic codes --


def block_shift(c: int, m: int, transposed: bool = False, block_first: bool = True) -> BinMat:
    """The block shift I_1 (or its transpose) lifted to c*m coordinates.

    With `block_first` the c-factor is the outer Kronecker factor (I_1 x E_m), otherwise
    the inner one (E_m x I_1).
    """
    shift = circshift_perm(c, 1)
    if transposed:
        shift = shift.T
    ident = BinMat.identity(m)
    return kron(shift, ident) if block_first else kron(ident, shift)


def class_operator(
    p: BinPoly, c: int, m: int, transposed: bool = False, block_first: bool = True
) -> BinMat:
    """p(I_1) lifted by a Kronecker product with E_m."""
    shift = circshift_perm(c, 1)
    if transposed:
        shift = shift.T
    value = p.evaluate(shift)
    ident = BinMat.identity(m)
    return kron(value, ident) if block_first else kron(ident, value)


def primary_cofactor(c: int, p_alpha: BinPoly) -> BinPoly:
    """(x^c - 1) / p_alpha^e, which kills every primary component except p_alpha's."""
    fact = factor_xc_minus_1(c)
    out = BinPoly(1)
    for q, mult in fact.base:
        if q != p_alpha:
            out = out * q**mult
    return out


def _check_class(c: int, p: BinPoly) -> tuple[BinPoly, int]:
    """Return (p_alpha, m) for p = p_alpha^m dividing x^c - 1."""
    fact = factor_xc_minus_1(c)
    for q, mult in fact.base:
        for m in range(1, mult + 1):
            if q**m == p:
                return q, m
    raise PolynomialError(f"{p} is not a prime-power divisor of x^{c}-1")


def subset_distance(
    H: BinMat,
    c: int,
    p: BinPoly,
    enum_cap: int | None = None,
    draws: int = 4096,
    seed: int | None = None,
    transposed: bool = False,
    block_first: bool = True,
    lower: float = 1,
) -> tuple[float, float]:
    """Lightest code vector whose p_alpha-primary part has annihilator exactly p = p_alpha^m.

    Returns an interval; it is exact when the code dimension is at most `enum_cap`.
    Above the cap the upper end comes from random sampling and the lower end is
    `lower`, typically the ordinary distance of the code.
    """
    settings = get_settings()
    enum_cap = settings.enum_cap if enum_cap is None else enum_cap
    seed = settings.seed if seed is None else seed
    if H.cols % c:
        raise ConstructionError(f"{H.cols} columns are not a multiple of c={c}")
    m_block = H.cols // c
    if p == BinPoly.x_power_minus_one(c) and not factor_xc_minus_1(c).is_prime_power():
        # the residual class of x^c - 1 is always empty
        return INF, INF
    p_alpha, m = _check_class(c, p)
    cof = primary_cofactor(c, p_alpha)
    inner = class_operator(p_alpha ** (m - 1) * cof, c, m_block, transposed, block_first)
    outer = class_operator(p_alpha**m * cof, c, m_block, transposed, block_first)

    basis = H.kernel_basis()
    if basis.rows == 0:
        return INF, INF
    nw = basis.bits.shape[1]
    img_in = (basis @ inner.T).bits
    img_out = (basis @ outer.T).bits
    aug = np.hstack([basis.bits, img_in, img_out])

    def accept(rows: np.ndarray) -> np.ndarray:
        return rows[:, nw : 2 * nw].any(axis=1) & ~rows[:, 2 * nw :].any(axis=1)

    if basis.rows <= enum_cap:
        best = INF
        for block in enumerate_span(aug):
            ok = accept(block)
            if ok.any():
                best = min(best, int(popcount_rows(block[ok, :nw]).min()))
        return best, best
    found = sample_span(aug, draws, seed, accept, weight_words=nw)
    return (lower, INF) if found is None else (lower, max(lower, found[0]))


# -- random regular LDPC --


def random_regular_ldpc(h: int, v: int, n_cols: int, seed: int) -> BinMat:
    """Full-row-rank parity-check matrix with column weights <= h and row weights <= v.

    Edge stubs are matched by a seeded permutation; repeated edges cancel, and rows that
    are linear combinations of earlier rows are dropped.
    """
    if h >= v:
        raise ConstructionError(f"column weight h={h} must be below row weight v={v}")
    if (h * n_cols) % v:
        raise ConstructionError(f"h*n_cols={h * n_cols} is not divisible by v={v}")
    n_rows = h * n_cols // v
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n_rows), v)
    dense = np.zeros((n_rows, n_cols), dtype=np.uint8)
    for _ in range(64):
        perm = rng.permutation(stubs)
        edges = perm.reshape(n_cols, h)
        if all(len(set(row)) == h for row in edges):
            break
    for col, rows in enumerate(edges):
        for r in rows:
            dense[r, col] ^= 1
    kept: list[np.ndarray] = []
    rank = 0
    for row in dense:
        trial = BinMat.from_dense(np.array([*kept, row]))
        if trial.rank() > rank:
            kept.append(row)
            rank += 1
    return BinMat.from_dense(np.array(kept)) if kept else BinMat.zeros(0, n_cols)
