"""Logical operators: bases of the commutant modulo the stabilizer group, paired so
that the symplectic Gram matrix is the identity."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .classical import block_shift
from .constructions import CssCode, HyperbicycleSpec, NonCssCode, tiled_matrices
from .errors import ConstructionError, DimensionError
from .gf2 import BinMat, BinVec, hstack, vstack
from .logging import get_logger

log = get_logger(__name__)


def quotient_basis(kernel: BinMat, stabilizers: BinMat) -> BinMat:
    """Rows spanning span(kernel) modulo rowspace(stabilizers), in reduced echelon form."""
    ref, _ = stabilizers.echelon()
    residues = ref.reduce(kernel)
    return residues.echelon()[0]


def select_independent(candidates: Iterable[BinVec], stabilizers: BinMat, limit: int) -> list[BinVec]:
    """Greedily keep candidates that are independent modulo rowspace(stabilizers)."""
    ref, _ = stabilizers.echelon()
    acc = BinMat.zeros(0, stabilizers.cols)
    chosen: list[BinVec] = []
    for v in candidates:
        r = ref.reduce(BinMat.from_vectors([v], stabilizers.cols))
        if acc.rows:
            r = acc.reduce(r)
        if r.is_zero():
            continue
        chosen.append(v)
        acc = vstack(acc, r).echelon()[0]
        if len(chosen) == limit:
            break
    return chosen


# -- closed-form candidates on one sublattice --


@dataclass(frozen=True)
class _Candidate:
    vector: BinVec
    seed: BinVec
    shift: BinMat


def _embed(n: int, index: np.ndarray) -> BinVec:
    dense = np.zeros(n, dtype=np.uint8)
    dense[index] = 1
    return BinVec.from_dense(dense)


def _outer_candidates(
    n: int, offset: int, w_basis: BinMat, copies: int, shift: BinMat
) -> list[_Candidate]:
    """Vectors e_j x w placed at `offset`, w ranging over `w_basis`."""
    out = []
    for i in range(w_basis.rows):
        w = w_basis.row(i)
        support = np.array(w.support(), dtype=np.int64)
        for j in range(copies):
            out.append(_Candidate(_embed(n, offset + j * w.len + support), w, shift))
    return out


def _inner_candidates(
    n: int, offset: int, w_basis: BinMat, copies: int, shift: BinMat
) -> list[_Candidate]:
    """Vectors w x e_j placed at `offset`."""
    out = []
    for i in range(w_basis.rows):
        w = w_basis.row(i)
        support = np.array(w.support(), dtype=np.int64)
        for j in range(copies):
            out.append(_Candidate(_embed(n, offset + support * copies + j), w, shift))
    return out


def closed_form_candidates(
    code: CssCode, spec: HyperbicycleSpec
) -> tuple[list[_Candidate], list[_Candidate]]:
    """(X-type, Z-type) candidates built from one tiled code on one sublattice."""
    t = tiled_matrices(spec)
    c, n = spec.c, code.n
    split0 = spec.r2 * c * spec.n1
    x_type = _inner_candidates(
        n, 0, t.h2_tilde.kernel_basis(), spec.n1, block_shift(c, spec.r2, True, False)
    ) + _outer_candidates(
        n, split0, t.h1_tilde.kernel_basis(), spec.n2, block_shift(c, spec.r1, True, True)
    )
    z_type = _outer_candidates(
        n, 0, t.h1.kernel_basis(), spec.r2, block_shift(c, spec.n1, False, True)
    ) + _inner_candidates(
        n, split0, t.h2.kernel_basis(), spec.r1, block_shift(c, spec.n2, False, False)
    )
    return x_type, z_type


@dataclass(frozen=True)
class LogicalBasis:
    """K X-type rows and K Z-type rows with xbar @ zbar^T = identity."""

    xbar: BinMat
    zbar: BinMat
    closed_form: bool = False
    repetition: bool | None = None

    @property
    def k(self) -> int:
        return self.xbar.rows

    def gram(self) -> BinMat:
        return self.xbar @ self.zbar.T

    def pairing(self) -> list[int]:
        """pairing[j] is the index of the Z-type row anticommuting with X-type row j."""
        gram = self.gram().to_dense()
        out = []
        for j, row in enumerate(gram):
            hits = np.flatnonzero(row)
            if hits.size != 1:
                raise ConstructionError(f"X-type logical {j} anticommutes with {hits.size} partners")
            out.append(int(hits[0]))
        return out

    def is_symplectic(self) -> bool:
        return self.gram() == BinMat.identity(self.k)


def _pair(xs: BinMat, zs: BinMat) -> BinMat:
    """Recombine `zs` so that xs @ result^T is the identity."""
    m = xs @ zs.T
    return m.inverse().T @ zs


def logical_operators(code: CssCode, spec: HyperbicycleSpec | None = None) -> LogicalBasis:
    """Paired logical operators of a CSS code.

    With a hyperbicycle spec, the X-type rows are taken from the sublattice form
    (w x e, 0) / (0, e x w) whenever those span the whole quotient; the block
    repetition of the classical words behind them is then checked as well.
    """
    k = code.k
    if k <= 0:
        raise ConstructionError("code encodes no logical qubits")
    x_raw = quotient_basis(code.gz.kernel_basis(), code.gx)
    z_raw = quotient_basis(code.gx.kernel_basis(), code.gz)
    if x_raw.rows != k or z_raw.rows != k:
        raise DimensionError(f"quotient dimensions {x_raw.rows}/{z_raw.rows} differ from K={k}")

    if spec is not None and spec.n_qubits == code.n:
        x_cands, _ = closed_form_candidates(code, spec)
        chosen = select_independent((cand.vector for cand in x_cands), code.gx, k)
        if len(chosen) == k:
            used = {v.to_int() for v in chosen}
            repetition = all(
                cand.shift.apply(cand.seed) == cand.seed
                for cand in x_cands
                if cand.vector.to_int() in used
            )
            xs = BinMat.from_vectors(chosen, code.n)
            log.debug("closed-form logical rows found for K=%d (repetition=%s)", k, repetition)
            return LogicalBasis(xs, _pair(xs, z_raw), True, repetition)
        log.debug("closed-form candidates span %d of %d logicals; using generic basis", len(chosen), k)
    return LogicalBasis(x_raw, _pair(x_raw, z_raw))


# -- non-CSS --


def symplectic_swap(h: BinMat) -> BinMat:
    """(A|B) -> (B|A), so that plain dot products compute the symplectic form."""
    n = h.cols // 2
    return hstack(h.columns_slice(n, 2 * n), h.columns_slice(0, n))


def normalizer_basis(code: NonCssCode) -> BinMat:
    """All (a|b) commuting with every stabilizer."""
    return symplectic_swap(code.h).kernel_basis()


def noncss_logicals(code: NonCssCode) -> BinMat:
    """2K rows in symplectic pairs: row j anticommutes only with row K + j."""
    if code.k <= 0:
        raise ConstructionError("code encodes no logical qubits")
    rest = quotient_basis(normalizer_basis(code), code.h).to_dense().astype(np.uint8)
    n = code.n
    swap = np.concatenate([np.arange(n, 2 * n), np.arange(n)])

    def omega(u: np.ndarray, v: np.ndarray) -> int:
        return int(np.dot(u, v[swap]) & 1)

    vecs = [row for row in rest]
    firsts, seconds = [], []
    while vecs:
        u = vecs.pop(0)
        idx = next((i for i, v in enumerate(vecs) if omega(u, v)), None)
        if idx is None:
            raise ConstructionError("logical basis is degenerate under the symplectic form")
        v = vecs.pop(idx)
        firsts.append(u)
        seconds.append(v)
        vecs = [w ^ (omega(w, v) * u) ^ (omega(w, u) * v) for w in vecs]
    return BinMat.from_dense(np.array(firsts + seconds, dtype=np.uint8))
