"""Polynomials over GF(2) and GF(4).

Binary polynomials are Python ints used as bitsets (bit ``i`` is the coefficient of
``x^i``), so addition is XOR and multiplication is carry-less shifting.

GF(4) symbols are 2-bit ints ``u + 2v`` standing for ``u + v*w`` with ``w^2 = w + 1``:
0, 1, w (=2) and w-bar (=3). Bit 0 is the Z-part and bit 1 is the X-part of the
matching Pauli, so addition is XOR and the trace inner product is the binary
symplectic form.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache, total_ordering

import numpy as np

from .errors import DimensionError, PolynomialError
from .gf2 import BinMat, circshift_perm

# -- GF(2) --


def _deg(a: int) -> int:
    return a.bit_length() - 1


def _mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise PolynomialError("division by the zero polynomial")
    q = 0
    db = _deg(b)
    while a and _deg(a) >= db:
        shift = _deg(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def _powmod(a: int, e: int, m: int) -> int:
    result = 1
    a = _divmod(a, m)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, a), m)[1]
        a = _divmod(_mul(a, a), m)[1]
        e >>= 1
    return _divmod(result, m)[1]


@total_ordering
@dataclass(frozen=True)
class BinPoly:
    """A polynomial over GF(2); `value` bit i is the coefficient of x^i."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise PolynomialError("coefficient bitset must be non-negative")

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int]) -> BinPoly:
        value = 0
        for i, c in enumerate(coefficients):
            if c & 1:
                value |= 1 << i
        return cls(value)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> BinPoly:
        value = 0
        for e in exponents:
            value ^= 1 << e
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> BinPoly:
        """Parse ``1+x+x^3``-style text; ``0`` is the zero polynomial."""
        return cls(_parse_terms(text, allow_f4=False)[0])

    @classmethod
    def x_power_minus_one(cls, n: int) -> BinPoly:
        return cls((1 << n) | 1) if n > 0 else cls(0)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return _deg(self.value)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.degree + 1))

    @property
    def exponents(self) -> list[int]:
        return [i for i in range(self.degree + 1) if (self.value >> i) & 1]

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: BinPoly) -> BinPoly:
        return BinPoly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: BinPoly) -> BinPoly:
        return BinPoly(_mul(self.value, other.value))

    def __divmod__(self, other: BinPoly) -> tuple[BinPoly, BinPoly]:
        q, r = _divmod(self.value, other.value)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: BinPoly) -> BinPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: BinPoly) -> BinPoly:
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> BinPoly:
        out = BinPoly(1)
        for _ in range(e):
            out = out * self
        return out

    def __lt__(self, other: BinPoly) -> bool:
        return (self.degree, self.value) < (other.degree, other.value)

    def divides(self, other: BinPoly) -> bool:
        return (other % self).is_zero()

    def shift(self, k: int) -> BinPoly:
        """Multiply by x^k."""
        return BinPoly(self.value << k)

    def reduce_cyclic(self, n: int) -> BinPoly:
        """Reduce modulo x^n - 1 by folding exponents."""
        return BinPoly.from_exponents(e % n for e in self.exponents)

    def reciprocal(self) -> BinPoly:
        """x^deg * p(1/x)."""
        return BinPoly.from_coefficients(reversed(self.coefficients))

    def cyclic_reciprocal(self, n: int) -> BinPoly:
        """p(x^-1) modulo x^n - 1; its circulant is the transpose of p's."""
        return BinPoly.from_exponents((-e) % n for e in self.reduce_cyclic(n).exponents)

    def evaluate(self, m: BinMat) -> BinMat:
        """p(M) by Horner's rule."""
        if m.rows != m.cols:
            raise DimensionError(f"cannot evaluate a polynomial at a {m.rows}x{m.cols} matrix")
        ident = BinMat.identity(m.rows)
        out = BinMat.zeros(m.rows, m.cols)
        for c in reversed(self.coefficients):
            out = out @ m
            if c:
                out = out + ident
        return out

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for e in self.exponents:
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"BinPoly({self})"


def poly_mul(a: BinPoly, b: BinPoly) -> BinPoly:
    return a * b


def poly_divmod(a: BinPoly, b: BinPoly) -> tuple[BinPoly, BinPoly]:
    return divmod(a, b)


def poly_mod(a: BinPoly, b: BinPoly) -> BinPoly:
    return a % b


def poly_gcd(*polys: BinPoly) -> BinPoly:
    """Monic gcd of any number of binary polynomials (every nonzero one is monic)."""
    g = 0
    for p in polys:
        g = _gcd(g, p.value)
    return BinPoly(g)


def is_palindromic(h: BinPoly) -> bool:
    if h.is_zero():
        raise PolynomialError("palindromic test needs a nonzero polynomial")
    return h.coefficients == tuple(reversed(h.coefficients))


# -- irreducibles and factorization --


def is_irreducible(p: BinPoly) -> bool:
    """Rabin's test: p of degree d is irreducible iff x^(2^d) = x mod p and no smaller
    prime-index power works."""
    d = p.degree
    if d < 1:
        return False
    if d == 1:
        return True
    for q in _prime_factors(d):
        t = _powmod(2, 1 << (d // q), p.value) ^ 2
        if _gcd(p.value, t) != 1:
            return False
    return _powmod(2, 1 << d, p.value) == _divmod(2, p.value)[1]


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def irreducibles_of_degree(d: int) -> tuple[BinPoly, ...]:
    """All irreducible binary polynomials of degree d, by sieving against lower degrees."""
    if d < 1:
        return ()
    lower = [q for k in range(1, d // 2 + 1) for q in irreducibles_of_degree(k)]
    found = []
    for value in range(1 << d, 1 << (d + 1)):
        if not value & 1 and d > 1:
            continue
        if all(_divmod(value, q.value)[1] for q in lower):
            found.append(BinPoly(value))
    return tuple(found)


SIEVE_MAX_DEGREE = 8


def _split_equal_degree(f: int, e: int) -> list[int]:
    """Split a squarefree product of degree-e irreducibles (characteristic-2 trace map).

    Trial elements are taken in increasing order so the result is deterministic.
    """
    if _deg(f) == e:
        return [f]
    a = 2
    while True:
        t, power = 0, _divmod(a, f)[1]
        for _ in range(e):
            t ^= power
            power = _divmod(_mul(power, power), f)[1]
        g = _gcd(f, t)
        if 0 < _deg(g) < _deg(f):
            q = _divmod(f, g)[0]
            return _split_equal_degree(g, e) + _split_equal_degree(q, e)
        a += 1


def _factor_squarefree(f: int) -> list[int]:
    """Irreducible factors of a squarefree binary polynomial."""
    factors: list[int] = []
    rest = f
    d = 1
    while _deg(rest) >= 2 * d:
        if d <= SIEVE_MAX_DEGREE:
            for q in irreducibles_of_degree(d):
                quo, rem = _divmod(rest, q.value)
                if rem == 0:
                    factors.append(q.value)
                    rest = quo
        else:
            # distinct-degree part: product of all factors of degree d
            h = _gcd(rest, _powmod(2, 1 << d, rest) ^ 2)
            if _deg(h) > 0:
                factors.extend(_split_equal_degree(h, d))
                rest = _divmod(rest, h)[0]
        d += 1
    if _deg(rest) > 0:
        factors.append(rest)
    return factors


@dataclass(frozen=True)
class Factorization:
    """x^c - 1 = prod p_alpha^multiplicity, every multiplicity equal to 2^s."""

    c: int
    base: tuple[tuple[BinPoly, int], ...]

    def expand(self) -> BinPoly:
        out = BinPoly(1)
        for p, m in self.base:
            out = out * p**m
        return out

    @property
    def multiplicity(self) -> int:
        return self.base[0][1] if self.base else 1

    def prime_powers(self) -> list[tuple[BinPoly, int]]:
        """All (p_alpha, m) with 1 <= m <= multiplicity, in factor order."""
        return [(p, m) for p, mult in self.base for m in range(1, mult + 1)]

    def is_prime_power(self) -> bool:
        return len(self.base) == 1


@lru_cache(maxsize=256)
def factor_xc_minus_1(c: int) -> Factorization:
    if c < 1:
        raise PolynomialError(f"c must be positive, got {c}")
    odd, s = c, 0
    while odd % 2 == 0:
        odd //= 2
        s += 1
    factors = sorted(BinPoly(v) for v in _factor_squarefree((1 << odd) | 1))
    return Factorization(c=c, base=tuple((p, 1 << s) for p in factors))


# -- GF(4) --

_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
_F4_INV = (0, 1, 3, 2)
F4_NAMES = {0: "0", 1: "1", 2: "w", 3: "W"}


def f4_mul(a: int, b: int) -> int:
    return _F4_MUL[a][b]


def f4_conj(a: int) -> int:
    """Frobenius conjugation w <-> w-bar."""
    return _F4_MUL[a][a]


def f4_trace_inner(u: Sequence[int], v: Sequence[int]) -> int:
    """Trace inner product sum(u_i * conj(v_i) + conj(u_i) * v_i), which lands in GF(2)."""
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    total = 0
    for a, b in zip(u, v, strict=True):
        total ^= f4_mul(a, f4_conj(b)) ^ f4_mul(f4_conj(a), b)
    if total not in (0, 1):
        raise PolynomialError(f"trace inner product left GF(2): {total}")
    return total


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class F4Poly:
    """A polynomial over GF(4), coefficients lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (0, 1, 2, 3) for c in self.coefficients):
            raise PolynomialError(f"invalid GF(4) symbols: {self.coefficients}")
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def parse(cls, text: str) -> F4Poly:
        """Parse text like ``w+x+Wx^2``; each term is an optional symbol times a power."""
        return cls(_parse_terms(text, allow_f4=True)[1])

    @classmethod
    def from_binary(cls, p: BinPoly, scale: int = 1) -> F4Poly:
        return cls(tuple(f4_mul(scale, c) for c in p.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: F4Poly) -> F4Poly:
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return F4Poly(tuple(x ^ y for x, y in zip(a, b, strict=True)))

    __sub__ = __add__

    def __mul__(self, other: F4Poly) -> F4Poly:
        if self.is_zero() or other.is_zero():
            return F4Poly(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] ^= f4_mul(a, b)
        return F4Poly(tuple(out))

    def __divmod__(self, other: F4Poly) -> tuple[F4Poly, F4Poly]:
        if other.is_zero():
            raise PolynomialError("division by the zero polynomial")
        rem = list(self.coefficients)
        lead_inv = _F4_INV[other.coefficients[-1]]
        q = [0] * max(len(rem) - len(other.coefficients) + 1, 0)
        while len(rem) >= len(other.coefficients) and rem:
            shift = len(rem) - len(other.coefficients)
            factor = f4_mul(rem[-1], lead_inv)
            q[shift] = factor
            for j, b in enumerate(other.coefficients):
                rem[shift + j] ^= f4_mul(factor, b)
            rem = list(_trim(rem))
        return F4Poly(tuple(q)), F4Poly(tuple(rem))

    def __mod__(self, other: F4Poly) -> F4Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: F4Poly) -> F4Poly:
        return divmod(self, other)[0]

    def monic(self) -> F4Poly:
        if self.is_zero():
            return self
        inv = _F4_INV[self.coefficients[-1]]
        return F4Poly(tuple(f4_mul(inv, c) for c in self.coefficients))

    def conjugate(self) -> F4Poly:
        return F4Poly(tuple(f4_conj(c) for c in self.coefficients))

    def x_part(self) -> BinPoly:
        """Binary polynomial of the w-components (X-part)."""
        return BinPoly.from_coefficients((c >> 1) & 1 for c in self.coefficients)

    def z_part(self) -> BinPoly:
        """Binary polynomial of the 1-components (Z-part)."""
        return BinPoly.from_coefficients(c & 1 for c in self.coefficients)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e, c in enumerate(self.coefficients):
            if not c:
                continue
            power = "" if e == 0 else "x" if e == 1 else f"x^{e}"
            sym = F4_NAMES[c]
            terms.append(sym if not power else power if sym == "1" else f"{sym}{power}")
        return "+".join(terms)


def f4_gcd(a: F4Poly, b: F4Poly) -> F4Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def f4_symbols_to_pauli(symbols: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Split a GF(4) vector into its (X-part, Z-part) bit vectors."""
    arr = np.asarray(symbols, dtype=np.uint8)
    return (arr >> 1) & 1, arr & 1


# -- text syntax --

_TERM = re.compile(r"^(?P<sym>[01wW]?)(?P<x>x(\^(?P<exp>\d+))?)?$")


def _parse_terms(text: str, allow_f4: bool) -> tuple[int, tuple[int, ...]]:
    cleaned = re.sub(r"\s+", "", text)
    if not cleaned:
        raise PolynomialError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in cleaned.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (not m.group("sym") and not m.group("x")):
            raise PolynomialError(f"cannot parse term {term!r} in {text!r}")
        sym_text = m.group("sym") or "1"
        if sym_text in "wW" and not allow_f4:
            raise PolynomialError(f"GF(4) symbol in binary polynomial {text!r}")
        sym = {"0": 0, "1": 1, "w": 2, "W": 3}[sym_text]
        exp = 0
        if m.group("x"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        coeffs[exp] = coeffs.get(exp, 0) ^ sym
    top = max(coeffs) if coeffs else 0
    symbols = tuple(coeffs.get(i, 0) for i in range(top + 1))
    value = 0
    for i, s in enumerate(symbols):
        if s & 1:
            value |= 1 << i
    return value, symbols


def cyclic_shift_matrix(c: int) -> BinMat:
    """The block-shift operator I_1."""
    return circshift_perm(c, 1)
