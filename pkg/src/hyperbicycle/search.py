"""Low-weight vector search shared by the classical and quantum distance routines.

Three tools live here:

* `enumerate_span` walks every element of a row span in vectorized blocks.
* `meet_in_the_middle` is an exhaustive search: every operator of weight at most ``2h``
  splits into two halves of weight at most ``h`` with equal syndromes, so bucketing all
  halves by syndrome and pairing halves of different logical class finds the lightest
  nontrivial operator whenever its weight is at most ``2h``.
* `information_set_search` is the seeded randomized upper bound.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf2 import BinMat, BinVec
from .logging import get_logger

log = get_logger(__name__)

# A letter is (syndrome, logical class, symbol code). Symbol code bit 0 marks the first
# part of the operator (X-part, or the only part for classical/CSS searches), bit 1 the
# second part (Z-part).
Letter = tuple[int, int, int]
Path = tuple[tuple[int, int], ...]


def enumerate_span(basis: np.ndarray, chunk_bits: int = 16) -> Iterator[np.ndarray]:
    """Yield every element of the row span of packed `basis` in blocks; the first row of
    the first block is the zero vector."""
    k, words = basis.shape
    low = min(k, chunk_bits)
    table = np.zeros((1 << low, words), dtype=np.uint64)
    for i in range(low):
        table[1 << i : 1 << (i + 1)] = table[: 1 << i] ^ basis[i]
    high = basis[low:]
    offset = np.zeros(words, dtype=np.uint64)
    for g in range(1 << (k - low)):
        if g:
            offset ^= high[(g & -g).bit_length() - 1]
        yield table ^ offset


def popcount_rows(bits: np.ndarray) -> np.ndarray:
    return np.bitwise_count(bits).sum(axis=1, dtype=np.int64)


# -- meet in the middle --


@dataclass(frozen=True)
class MitmResult:
    half_weight: int
    entries: int
    weight: int | None
    witness: Path | None

    @property
    def proven_clean_below(self) -> int:
        """Smallest weight not excluded: no operator of smaller weight exists."""
        return self.weight if self.weight is not None else 2 * self.half_weight + 1


def half_set_size(n_positions: int, alphabet: int, h: int) -> int:
    return sum(math.comb(n_positions, w) * alphabet**w for w in range(h + 1))


def half_weight_for_budget(n_positions: int, alphabet: int, budget: int) -> int:
    """Largest h whose half-set fits in `budget` entries (never above n_positions)."""
    h = 0
    while h < n_positions and half_set_size(n_positions, alphabet, h + 1) <= budget:
        h += 1
    return h


def _halves(letters: Sequence[Sequence[Letter]], h: int) -> Iterator[tuple[int, int, Path]]:
    n = len(letters)

    def rec(start: int, depth: int, synd: int, logic: int, path: Path):
        yield synd, logic, path
        if depth == h:
            return
        for pos in range(start, n):
            for s, lg, code in letters[pos]:
                yield from rec(pos + 1, depth + 1, synd ^ s, logic ^ lg, (*path, (pos, code)))

    yield from rec(0, 0, 0, 0, ())


def meet_in_the_middle(
    letters: Sequence[Sequence[Letter]], half_weight: int, distinct: bool = False
) -> MitmResult:
    """Exhaustive search for the lightest operator with zero syndrome and nonzero class.

    With `distinct` set, every half counts as its own class, which turns the search into
    a classical minimum-distance search (any two different halves with equal syndrome
    sum to a nonzero codeword).
    """
    buckets: dict[int, list] = {}
    entries = 0
    for synd, logic, path in _halves(letters, half_weight):
        key = entries if distinct else logic
        entries += 1
        w = len(path)
        slot = buckets.get(synd)
        if slot is None:
            buckets[synd] = [key, w, path, None, None, None]
        elif key == slot[0]:
            if w < slot[1]:
                slot[1], slot[2] = w, path
        elif w < slot[1]:
            slot[3:6] = slot[0:3]
            slot[0:3] = [key, w, path]
        elif slot[3] is None or w < slot[4]:
            slot[3:6] = [key, w, path]
    best: tuple[int, Path] | None = None
    for slot in buckets.values():
        if slot[3] is None:
            continue
        total = slot[1] + slot[4]
        if best is None or total < best[0]:
            best = (total, combine_paths(slot[2], slot[5]))
    log.debug("meet-in-the-middle: h=%d, %d half entries, %d buckets", half_weight, entries, len(buckets))
    if best is None:
        return MitmResult(half_weight, entries, None, None)
    return MitmResult(half_weight, entries, best[0], best[1])


def combine_paths(a: Path, b: Path) -> Path:
    codes: dict[int, int] = {}
    for pos, code in (*a, *b):
        codes[pos] = codes.get(pos, 0) ^ code
    return tuple(sorted((p, c) for p, c in codes.items() if c))


def path_to_vectors(path: Path, n: int) -> tuple[BinVec, BinVec]:
    """Split a symbol path into its (first part, second part) vectors."""
    first = [p for p, c in path if c & 1]
    second = [p for p, c in path if c & 2]
    return BinVec.from_support(n, first), BinVec.from_support(n, second)


# -- randomized information-set search --


@dataclass(frozen=True)
class SearchHit:
    weight: int
    iteration: int
    vector: BinVec


def _accepted(parities: np.ndarray | None, rows: int) -> np.ndarray:
    if parities is None:
        return np.ones(rows, dtype=bool)
    return parities.any(axis=1)


def _iteration(
    kernel: BinMat, logicals: BinMat | None, seed: int, it: int
) -> SearchHit | None:
    """One information-set draw: echelonize the kernel under a random column order and
    look at single rows and pairwise sums."""
    rng = np.random.default_rng([seed, it])
    n = kernel.cols
    perm = rng.permutation(n)
    dense = kernel.to_dense()[:, perm]
    reduced, _ = BinMat.from_dense(dense).echelon()
    inverse = np.argsort(perm)
    rows = BinMat.from_dense(reduced.to_dense()[:, inverse])
    bits = rows.bits
    parities = None
    if logicals is not None:
        parities = (rows @ logicals.T).to_dense().astype(bool)
    best: tuple[int, np.ndarray] | None = None
    weights = popcount_rows(bits)
    ok = _accepted(parities, rows.rows)
    if ok.any():
        i = int(np.flatnonzero(ok)[np.argmin(weights[ok])])
        best = (int(weights[i]), bits[i])
    for i in range(rows.rows - 1):
        sums = bits[i] ^ bits[i + 1 :]
        w = popcount_rows(sums)
        if parities is not None:
            mask = (parities[i] ^ parities[i + 1 :]).any(axis=1)
        else:
            mask = w > 0
        if not mask.any():
            continue
        j = int(np.flatnonzero(mask)[np.argmin(w[mask])])
        if best is None or w[j] < best[0]:
            best = (int(w[j]), sums[j])
    if best is None:
        return None
    return SearchHit(best[0], it, BinVec(n, best[1].copy()))


def _run_block(args: tuple[BinMat, BinMat | None, int, range]) -> SearchHit | None:
    kernel, logicals, seed, iterations = args
    best: SearchHit | None = None
    for it in iterations:
        hit = _iteration(kernel, logicals, seed, it)
        if hit is not None and (best is None or (hit.weight, hit.iteration) < (best.weight, best.iteration)):
            best = hit
    return best


def information_set_search(
    kernel: BinMat,
    logicals: BinMat | None,
    iterations: int,
    seed: int,
    workers: int = 1,
    reducer: BinMat | None = None,
) -> SearchHit | None:
    """Seeded randomized search for a light vector in the row span of `kernel`.

    A candidate is accepted when it has odd overlap with some row of `logicals` (or, with
    no logicals, when it is nonzero). Each iteration draws from its own seed stream, so
    the result does not depend on how iterations are split across `workers`. The winner
    is then greedily lightened by adding rows of `reducer`, which must not change its
    class.
    """
    if kernel.rows == 0 or iterations <= 0:
        return None
    blocks = _split(iterations, max(workers, 1))
    jobs = [(kernel, logicals, seed, block) for block in blocks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(_run_block, jobs))
    else:
        hits = [_run_block(job) for job in jobs]
    found = [h for h in hits if h is not None]
    if not found:
        return None
    best = min(found, key=lambda h: (h.weight, h.iteration))
    if reducer is not None and reducer.rows:
        vec = greedy_reduce(best.vector, reducer)
        best = SearchHit(vec.weight, best.iteration, vec)
    log.debug("information-set search: %d iterations, best weight %d", iterations, best.weight)
    return best


def _split(total: int, parts: int) -> list[range]:
    step = math.ceil(total / parts)
    return [range(s, min(s + step, total)) for s in range(0, total, step)]


def greedy_reduce(v: BinVec, rows: BinMat) -> BinVec:
    """Add rows of `rows` while that lowers the weight."""
    bits = v.bits.copy()
    weight = int(np.bitwise_count(bits).sum())
    improved = True
    while improved:
        improved = False
        cand = bits ^ rows.bits
        w = popcount_rows(cand)
        j = int(np.argmin(w))
        if w[j] < weight:
            bits, weight = cand[j].copy(), int(w[j])
            improved = True
    return BinVec(v.len, bits)


def sample_span(
    basis: np.ndarray,
    draws: int,
    seed: int,
    accept: Callable[[np.ndarray], np.ndarray],
    weight_words: int | None = None,
) -> tuple[int, np.ndarray] | None:
    """Random sums of packed basis rows; returns the lightest accepted (weight, row).

    Only the first `weight_words` words of a row count towards its weight.
    """
    if basis.shape[0] == 0:
        return None
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, 2, size=(draws, basis.shape[0]), dtype=np.uint8).astype(bool)
    sums = np.zeros((draws, basis.shape[1]), dtype=np.uint64)
    for i in range(basis.shape[0]):
        sums[coeffs[:, i]] ^= basis[i]
    ok = accept(sums)
    if not ok.any():
        return None
    w = popcount_rows(sums[:, :weight_words])
    idx = np.flatnonzero(ok)
    j = int(idx[np.argmin(w[idx])])
    return int(w[j]), sums[j]


def light_vectors(basis: BinMat, limit: int, seed: int, iterations: int = 16) -> list[BinVec]:
    """A pool of light nonzero vectors from the row span of `basis`, lightest first.

    Small spans are enumerated outright; larger ones are sampled through echelon forms
    under random column orders, keeping single rows and pairwise sums.
    """
    if basis.rows == 0 or limit <= 0:
        return []
    pool: dict[bytes, np.ndarray] = {}
    if basis.rows <= 16:
        for block in enumerate_span(basis.bits):
            for row in block:
                if row.any():
                    pool[row.tobytes()] = row.copy()
    else:
        for it in range(iterations):
            rng = np.random.default_rng([seed, it])
            perm = rng.permutation(basis.cols)
            reduced, _ = BinMat.from_dense(basis.to_dense()[:, perm]).echelon()
            bits = BinMat.from_dense(reduced.to_dense()[:, np.argsort(perm)]).bits
            for i in range(bits.shape[0]):
                pool.setdefault(bits[i].tobytes(), bits[i].copy())
                sums = bits[i] ^ bits[i + 1 :]
                if sums.shape[0] == 0:
                    continue
                j = int(np.argmin(popcount_rows(sums)))
                pool.setdefault(sums[j].tobytes(), sums[j].copy())
    rows = sorted(pool.values(), key=lambda r: (int(np.bitwise_count(r).sum()), r.tobytes()))
    return [BinVec(basis.cols, r) for r in rows[:limit]]
