"""Code families: hypergraph product, generalized bicycle, two-sublattice tensor
products (Haah), the CSS and non-CSS hyperbicycle codes, and the mapping
between non-CSS codes and their CSS doubles."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from .classical import circulant
from .errors import CommensurateCaseError, ConstructionError, DimensionError
from .gf2 import BinMat, circshift_perm, hstack, kron, kron_all, mat_sum, skew_perm
from .logging import get_logger
from .poly import BinPoly, F4Poly, f4_mul, poly_gcd

log = get_logger(__name__)


@dataclass(frozen=True)
class HyperbicycleSpec:
    """Inputs of a hyperbicycle code: c blocks a_i (r1 x n1), c blocks b_i (r2 x n2),
    and the boundary shift chi (coprime to c)."""

    a: tuple[BinMat, ...]
    b: tuple[BinMat, ...]
    c: int
    chi: int = 1
    name: str = ""

    def __post_init__(self):
        if self.c < 1:
            raise ConstructionError(f"c must be positive, got {self.c}")
        if math.gcd(self.c, self.chi) != 1:
            raise CommensurateCaseError(self.c, self.chi)
        if len(self.a) != self.c or len(self.b) != self.c:
            raise DimensionError(
                f"need c={self.c} blocks each, got {len(self.a)} a-blocks and {len(self.b)} b-blocks"
            )
        if len({m.shape for m in self.a}) != 1 or len({m.shape for m in self.b}) != 1:
            raise DimensionError("all a_i (and all b_i) must share dimensions")

    @property
    def r1(self) -> int:
        return self.a[0].rows

    @property
    def n1(self) -> int:
        return self.a[0].cols

    @property
    def r2(self) -> int:
        return self.b[0].rows

    @property
    def n2(self) -> int:
        return self.b[0].cols

    @property
    def s1(self) -> int:
        return self.n1 - self.r1

    @property
    def s2(self) -> int:
        return self.n2 - self.r2

    @property
    def n_qubits(self) -> int:
        return self.c * (self.r1 * self.n2 + self.r2 * self.n1)

    def is_square(self) -> bool:
        return self.r1 == self.n1 and self.r2 == self.n2


@dataclass(frozen=True, eq=False)
class CssCode:
    """CSS code with X-checks `gx` and Z-checks `gz`."""

    gx: BinMat
    gz: BinMat
    provenance: dict[str, Any] = field(default_factory=dict)
    split: tuple[int, int] | None = None

    def __post_init__(self):
        if self.gx.cols != self.gz.cols:
            raise DimensionError(f"gx has {self.gx.cols} columns, gz has {self.gz.cols}")
        if not (self.gx @ self.gz.T).is_zero():
            raise ConstructionError("X and Z checks do not commute (gx gz^T != 0)")

    @property
    def n(self) -> int:
        return self.gx.cols

    @cached_property
    def rank_gx(self) -> int:
        return self.gx.rank()

    @cached_property
    def rank_gz(self) -> int:
        return self.gz.rank()

    @property
    def k(self) -> int:
        return self.n - self.rank_gx - self.rank_gz

    @property
    def family(self) -> str:
        return str(self.provenance.get("family", "custom"))


@dataclass(frozen=True, eq=False)
class NonCssCode:
    """Stabilizer code H = (A|B) on n qubits; A is the X-part and B the Z-part."""

    h: BinMat
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.h.cols % 2:
            raise DimensionError(f"H needs an even number of columns, got {self.h.cols}")
        a, b = self.a, self.b
        if not ((a @ b.T) + (b @ a.T)).is_zero():
            raise ConstructionError("stabilizers do not commute (A B^T + B A^T != 0)")

    @property
    def n(self) -> int:
        return self.h.cols // 2

    @property
    def a(self) -> BinMat:
        return self.h.columns_slice(0, self.n)

    @property
    def b(self) -> BinMat:
        return self.h.columns_slice(self.n, 2 * self.n)

    @cached_property
    def rank(self) -> int:
        return self.h.rank()

    @property
    def k(self) -> int:
        return self.n - self.rank

    @property
    def family(self) -> str:
        return str(self.provenance.get("family", "custom"))


# -- basic families --


def hypergraph_product(H1: BinMat, H2: BinMat, provenance: dict[str, Any] | None = None) -> CssCode:
    r1, n1 = H1.shape
    r2, n2 = H2.shape
    gx = hstack(kron(BinMat.identity(r2), H1), kron(H2, BinMat.identity(r1)))
    gz = hstack(kron(H2.T, BinMat.identity(n1)), kron(BinMat.identity(n2), H1.T))
    prov = provenance or {"family": "hypergraph-product"}
    return CssCode(gx, gz, prov, split=(r2 * n1, n2 * r1))


def two_sublattice(A: BinMat, B: BinMat, provenance: dict[str, Any] | None = None) -> CssCode:
    """G_X = (A, B), G_Z = (B^T, A^T); requires commuting square A and B."""
    if A.rows != A.cols or A.shape != B.shape:
        raise DimensionError(f"A {A.shape} and B {B.shape} must be square and equal in size")
    if not ((A @ B) + (B @ A)).is_zero():
        raise ConstructionError("A and B do not commute")
    gx = hstack(A, B)
    gz = hstack(B.T, A.T)
    return CssCode(gx, gz, provenance or {"family": "two-sublattice"}, split=(A.cols, B.cols))


def generalized_bicycle(f1: BinPoly, f2: BinPoly, n: int) -> CssCode:
    prov = {"family": "generalized-bicycle", "f1": str(f1), "f2": str(f2), "n": n}
    return two_sublattice(circulant(n, f1), circulant(n, f2), prov)


@dataclass(frozen=True)
class BicycleK:
    k: int
    p: BinPoly
    r: BinPoly
    k_rank: int
    k_single_generator: int

    @property
    def consistent(self) -> bool:
        return self.k == self.k_rank == self.k_single_generator


def bicycle_K(f1: BinPoly, f2: BinPoly, n: int) -> BicycleK:
    """K of the generalized bicycle code from gcds, cross-checked against ranks."""
    xn = BinPoly.x_power_minus_one(n)
    f1r, f2r = f1.reduce_cyclic(n), f2.reduce_cyclic(n)
    p = poly_gcd(f1r, xn)
    r = poly_gcd((xn * f2r) // p, xn)
    k_formula = 2 * p.degree + 2 * r.degree - 2 * n
    k_single = 2 * poly_gcd(f1r, f2r, xn).degree
    k_rank = generalized_bicycle(f1, f2, n).k
    return BicycleK(k_formula, p, r, k_rank, k_single)


def trace_dual_basis(rho: F4Poly, n: int) -> BinMat:
    """GF(2) basis, as rows (omega part | 1 part), of the trace dual of the GF(4)-linear
    cyclic code generated by `rho` on n positions."""
    gens = []
    for scale in (1, 2):
        for shift in range(n):
            coeffs = [0] * n
            for e, sym in enumerate(rho.coefficients):
                coeffs[(e + shift) % n] ^= f4_mul(scale, sym)
            gens.append(coeffs)
    arr = np.array(gens, dtype=np.uint8)
    omega_part, one_part = (arr >> 1) & 1, arr & 1
    # trace product of (a|b) with a generator is omega_g . b + one_g . a
    return BinMat.from_dense(np.hstack([one_part, omega_part])).kernel_basis()


@dataclass(frozen=True)
class TraceDualPair:
    """Circulant pair (f1, f2) whose additive span omega*f1 + f2 lies in a trace dual.

    `span_dim` equals `dual_dim` only when the dual is generated by one element over
    GF(2)[x]; otherwise the pair spans the largest cyclic submodule found.
    """

    f1: BinPoly
    f2: BinPoly
    n: int
    dual_dim: int
    span_dim: int

    @property
    def generates_dual(self) -> bool:
        return self.span_dim == self.dual_dim

    @property
    def k(self) -> int:
        """K of the generalized bicycle code of the pair."""
        return 2 * (self.n - self.span_dim)


def _span_dim(a: int, b: int, xn: BinPoly, n: int) -> int:
    return n - poly_gcd(BinPoly(a), BinPoly(b), xn).degree


def trace_dual_pair(rho: F4Poly, n: int, seed: int = 0, exhaustive_dim: int = 16) -> TraceDualPair:
    """Pick the trace-dual element whose cyclic shifts span the most.

    Every dual element is tried when the dual has dimension at most `exhaustive_dim`,
    a seeded sample of 4096 otherwise. The span of g = omega*f1 + f2 has dimension
    n - deg gcd(f1, f2, x^n - 1).
    """
    basis = trace_dual_basis(rho, n)
    xn = BinPoly.x_power_minus_one(n)
    rows = []
    for i in range(basis.rows):
        support = basis.row(i).support()
        a = sum(1 << j for j in support if j < n)
        b = sum(1 << (j - n) for j in support if j >= n)
        rows.append((a, b))
    dim = len(rows)

    def candidates() -> Iterator[tuple[int, int]]:
        if dim <= exhaustive_dim:
            a = b = 0
            for step in range(1, 2**dim):
                # Gray code: flip the basis row at the lowest set bit of step
                da, db = rows[(step & -step).bit_length() - 1]
                a, b = a ^ da, b ^ db
                yield a, b
        else:
            rng = np.random.default_rng(seed)
            for _ in range(4096):
                pick = rng.integers(0, 2, size=dim)
                a = b = 0
                for flag, (da, db) in zip(pick, rows, strict=True):
                    if flag:
                        a, b = a ^ da, b ^ db
                yield a, b

    best, best_dim = (0, 0), 0
    for a, b in candidates():
        span = _span_dim(a, b, xn, n)
        if span > best_dim:
            best, best_dim = (a, b), span
            if span == dim:
                break
    if best_dim < dim:
        log.info("trace dual of %s (dim %d) is not cyclic; best span %d", rho, dim, best_dim)
    return TraceDualPair(BinPoly(best[0]), BinPoly(best[1]), n, dim, best_dim)


# -- tensor products and Haah codes --

HAAH_TERMS: dict[int, tuple[tuple[tuple[int, int, int], ...], tuple[tuple[int, int, int], ...]]] = {
    1: (
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    2: (
        ((1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)),
        ((0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1)),
    ),
    3: (
        ((1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)),
    ),
    4: (
        ((0, 1, 1), (1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)),
    ),
}


def tensor_sum(terms: Sequence[Sequence[int]], H: BinMat) -> BinMat:
    """Sum of Kronecker products where a 1 selects H and a 0 the identity."""
    ident = BinMat.identity(H.rows)
    size = H.rows ** len(terms[0])
    return mat_sum((kron_all(*(H if t else ident for t in term)) for term in terms), size, size)


def haah_code(variant: int, L: int, h: BinPoly | None = None) -> CssCode:
    """Tensor-product two-sublattice code of the given variant with H_1 = circulant(L, 1+x)."""
    if variant not in HAAH_TERMS:
        raise ConstructionError(f"unknown variant {variant}; expected 1..4")
    if L < 2:
        raise ConstructionError(f"L must be at least 2, got {L}")
    h = h or BinPoly.parse("1+x")
    H1 = circulant(L, h)
    terms_a, terms_b = HAAH_TERMS[variant]
    A, B = tensor_sum(terms_a, H1), tensor_sum(terms_b, H1)
    prov = {"family": "haah", "variant": variant, "L": L, "h": str(h)}
    return two_sublattice(A, B, prov)


# -- hyperbicycle --


def _shift_terms(c: int, chi: int) -> tuple[list[BinMat], list[BinMat]]:
    """I_i^(chi) = S I_i and its tilde partner S^T I_i^T."""
    S = skew_perm(c, chi)
    shifted = [S @ circshift_perm(c, i) for i in range(c)]
    tilde = [S.T @ circshift_perm(c, i).T for i in range(c)]
    return shifted, tilde


@dataclass(frozen=True)
class TiledMatrices:
    h1: BinMat
    h2: BinMat
    h1_tilde: BinMat
    h2_tilde: BinMat


def tiled_matrices(spec: HyperbicycleSpec) -> TiledMatrices:
    c = spec.c
    shifted, tilde = _shift_terms(c, spec.chi)
    h1 = mat_sum((kron(shifted[i], spec.a[i]) for i in range(c)), c * spec.r1, c * spec.n1)
    h2 = mat_sum((kron(spec.b[i], shifted[i]) for i in range(c)), spec.r2 * c, spec.n2 * c)
    h1t = mat_sum((kron(tilde[i], spec.a[i].T) for i in range(c)), c * spec.n1, c * spec.r1)
    h2t = mat_sum((kron(spec.b[i].T, tilde[i]) for i in range(c)), spec.n2 * c, spec.r2 * c)
    return TiledMatrices(h1, h2, h1t, h2t)


def _spec_provenance(spec: HyperbicycleSpec, family: str) -> dict[str, Any]:
    prov: dict[str, Any] = {"family": family, "c": spec.c, "chi": spec.chi}
    if spec.name:
        prov["name"] = spec.name
    return prov


def hyperbicycle(spec: HyperbicycleSpec) -> CssCode:
    t = tiled_matrices(spec)
    e_a, e_b = BinMat.identity(spec.r1), BinMat.identity(spec.r2)
    et_a, et_b = BinMat.identity(spec.n1), BinMat.identity(spec.n2)
    gx = hstack(kron(e_b, t.h1), kron(t.h2, e_a))
    gz = hstack(kron(t.h2_tilde, et_a), kron(et_b, t.h1_tilde))
    code = CssCode(
        gx,
        gz,
        _spec_provenance(spec, "hyperbicycle"),
        split=(spec.r2 * spec.c * spec.n1, spec.n2 * spec.c * spec.r1),
    )
    if code.n != spec.n_qubits:
        raise ConstructionError(f"built {code.n} qubits, expected {spec.n_qubits}")
    log.debug("hyperbicycle c=%d chi=%d: N=%d", spec.c, spec.chi, code.n)
    return code


def noncss_hyperbicycle(spec: HyperbicycleSpec) -> NonCssCode:
    """H = (E_b x H1 | H2 x E_a) for square blocks whose tiled matrices equal their
    tilde partners."""
    if not spec.is_square():
        raise ConstructionError("the non-CSS hyperbicycle needs square blocks")
    t = tiled_matrices(spec)
    if t.h1 != t.h1_tilde or t.h2 != t.h2_tilde:
        raise ConstructionError("the non-CSS hyperbicycle needs H1 = H1~ and H2 = H2~")
    h = hstack(kron(BinMat.identity(spec.r2), t.h1), kron(t.h2, BinMat.identity(spec.r1)))
    return NonCssCode(h, _spec_provenance(spec, "noncss-hyperbicycle"))


# -- CSS <-> non-CSS --


def noncss_to_css(code: NonCssCode) -> CssCode:
    """H = (A|B) becomes G_X = (A, B), G_Z = (B, A) on twice as many qubits."""
    a, b = code.a, code.b
    prov = {**code.provenance, "doubled": True}
    return CssCode(hstack(a, b), hstack(b, a), prov, split=(code.n, code.n))


def css_to_noncss(code: CssCode) -> NonCssCode:
    if code.n % 2:
        raise DimensionError("a CSS double has an even number of qubits")
    n = code.n // 2
    a, b = code.gx.columns_slice(0, n), code.gx.columns_slice(n, 2 * n)
    if code.gz != hstack(b, a):
        raise DimensionError("code is not of the form G_X = (A, B), G_Z = (B, A)")
    prov = {k: v for k, v in code.provenance.items() if k != "doubled"}
    return NonCssCode(code.gx, prov)


def symmetric_pair_noncss(f1: BinPoly, f2: BinPoly, n: int) -> NonCssCode:
    """H = (circ f1 | circ f2) for symmetric circulants, where the CSS double coincides
    with the generalized bicycle code of (f1, f2)."""
    A, B = circulant(n, f1), circulant(n, f2)
    if not (A.is_symmetric() and B.is_symmetric()):
        raise ConstructionError(f"circulants of {f1} and {f2} on n={n} are not symmetric")
    prov = {"family": "symmetric-bicycle", "f1": str(f1), "f2": str(f2), "n": n}
    return NonCssCode(hstack(A, B), prov)


def symmetric_shift(h: BinPoly, n: int) -> int | None:
    """Smallest k such that circulant(n, x^k h) is symmetric."""
    for k in range(n):
        if circulant(n, h.shift(k)).is_symmetric():
            return k
    return None


# -- hyperbicycle input recipes --


def circulant_split(n_small: int, c: int, p: BinPoly) -> list[BinMat]:
    """Blocks a_i with a_i[x, y] = p_{(i*n_small + y - x) mod (c*n_small)}.

    For chi = 1 the tiled matrix of these blocks is exactly circulant(c*n_small, p).
    """
    big = c * n_small
    coeffs = np.zeros(big, dtype=np.uint8)
    for e in p.exponents:
        coeffs[e % big] ^= 1
    xs = np.arange(n_small).reshape(-1, 1)
    ys = np.arange(n_small).reshape(1, -1)
    return [BinMat.from_dense(coeffs[(i * n_small + ys - xs) % big]) for i in range(c)]


def repeated_cyclic_inputs(
    h1: BinPoly, n1: int, h2: BinPoly, n2: int, c: int, chi: int = 1, name: str = ""
) -> HyperbicycleSpec:
    for h, n in ((h1, n1), (h2, n2)):
        if not h.divides(BinPoly.x_power_minus_one(n)):
            raise ConstructionError(f"{h} does not divide x^{n}-1")
    return HyperbicycleSpec(
        tuple(circulant_split(n1, c, h1)), tuple(circulant_split(n2, c, h2)), c, chi, name
    )


def split_inputs(p: BinPoly, n_small: int, c: int, chi: int, name: str = "") -> HyperbicycleSpec:
    """b_i = a_i from one big circulant, without the divisibility requirement."""
    blocks = tuple(circulant_split(n_small, c, p))
    return HyperbicycleSpec(blocks, blocks, c, chi, name)


def single_term_hyperbicycle(a: BinMat, i_a: int, i_b: int, c: int, chi: int = 1) -> HyperbicycleSpec:
    if not (0 <= i_a < c and 0 <= i_b < c):
        raise ConstructionError(f"block indices ({i_a}, {i_b}) out of range for c={c}")
    za, zb = BinMat.zeros(*a.shape), BinMat.zeros(a.cols, a.rows)
    a_blocks = tuple(a if i == i_a else za for i in range(c))
    b_blocks = tuple(a.T if i == i_b else zb for i in range(c))
    return HyperbicycleSpec(a_blocks, b_blocks, c, chi)


def single_term_expected(a: BinMat, c: int) -> tuple[int, int]:
    """(N, K) = (c((n-k)^2 + n^2), c k^2) for a full-rank a."""
    n = a.cols
    k = n - a.rank()
    return c * ((n - k) ** 2 + n**2), c * k * k


def spec_from_matrices(H1: BinMat, H2: BinMat) -> HyperbicycleSpec:
    """The c = 1 spec equivalent to the hypergraph product of (H1, H2)."""
    return HyperbicycleSpec((H1,), (H2,), 1, 1)


def spec_from_polynomials(f1: BinPoly, f2: BinPoly, n: int) -> HyperbicycleSpec:
    """1 x 1 blocks reproducing the generalized bicycle code of (f1, f2)."""
    fr1, fr2 = f1.reduce_cyclic(n), f2.reduce_cyclic(n)
    a = tuple(BinMat.from_dense([[(fr1.value >> i) & 1]]) for i in range(n))
    b = tuple(BinMat.from_dense([[(fr2.value >> i) & 1]]) for i in range(n))
    return HyperbicycleSpec(a, b, n, 1)
