"""GF(2) polynomial arithmetic modulo the CRC32 generator.

Residues are plain ints in normal bit order: bit i is the coefficient of
x^i.  Reflection belongs to the CRC byte-convention layer, not here.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# x^32 + x^26 + x^23 + x^22 + x^16 + x^12 + x^11 + x^10 + x^8 + x^7 + x^5
# + x^4 + x^2 + x + 1
GENERATOR_WORD = 0x104C11DB7
GENERATOR_EXPONENTS = (32, 26, 23, 22, 16, 12, 11, 10, 8, 7, 5, 4, 2, 1, 0)

# below this bound x^n is computed by n multiply-by-x steps; above it by
# square-and-multiply (the search tooling wants the dense low range fast)
ITERATIVE_BOUND = 1 << 20

MASK32 = 0xFFFFFFFF


class SparsePoly:
    """A GF(2) polynomial as a strictly descending tuple of exponents.

    Construction canonicalizes: exponents are sorted descending and
    duplicate pairs cancel (GF(2) addition).  The empty tuple is the zero
    polynomial.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int] = ()):
        counts: dict[int, int] = {}
        for e in exponents:
            e = int(e)
            if e < 0:
                raise ValueError("exponents must be non-negative")
            counts[e] = counts.get(e, 0) ^ 1
        self.exponents: tuple[int, ...] = tuple(
            sorted((e for e, odd in counts.items() if odd), reverse=True)
        )

    @property
    def degree(self) -> int:
        """Leading exponent; -1 for the zero polynomial."""
        return self.exponents[0] if self.exponents else -1

    @property
    def term_count(self) -> int:
        return len(self.exponents)

    def is_zero(self) -> bool:
        return not self.exponents

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.exponents == other.exponents
        return NotImplemented

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"SparsePoly({list(self.exponents)})"

    def __str__(self):
        return format_poly(self)


GENERATOR = SparsePoly(GENERATOR_EXPONENTS)


def parse_poly(text: str) -> SparsePoly:
    """Parse the CLI text form: comma-separated descending exponents."""
    text = text.strip()
    if not text:
        return SparsePoly()
    try:
        exps = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad polynomial text {text!r}: {exc}") from None
    return SparsePoly(exps)


def format_poly(p: SparsePoly) -> str:
    return ",".join(str(e) for e in p.exponents)


def reciprocal(p: SparsePoly) -> SparsePoly:
    """Mirror a polynomial: exponent e becomes degree - e.

    Published Chorba polynomial lists are conventionally written from the
    stream side, i.e. as the reciprocal of the form divisible by the
    generator; this maps between the two orientations (it is an
    involution when the constant term is present).
    """
    if p.is_zero():
        return p
    d = p.degree
    return SparsePoly(d - e for e in p.exponents)


def gf2_mulmod(a: int, b: int) -> int:
    """Carry-less 32x32-bit multiply reduced mod the generator."""
    a &= MASK32
    b &= MASK32
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> 32:
            a ^= GENERATOR_WORD
    return acc


def _xpow_iterative(n: int) -> int:
    r = 1
    for _ in range(n):
        r <<= 1
        if r >> 32:
            r ^= GENERATOR_WORD
    return r


def xpow_mod(n: int) -> int:
    """x^n mod G(x), normal bit order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= ITERATIVE_BOUND:
        return _xpow_iterative(n)
    result = 1
    base = 2  # x
    while n:
        if n & 1:
            result = gf2_mulmod(result, base)
        base = gf2_mulmod(base, base)
        n >>= 1
    return result


def sparse_mod(p: SparsePoly) -> int:
    """p mod G(x): XOR of x^e mod G over the exponents of p."""
    acc = 0
    for e in p.exponents:
        acc ^= xpow_mod(e)
    return acc


def is_zero_polynomial(p: SparsePoly) -> bool:
    """True iff p is non-empty and divisible by the generator."""
    return bool(p.exponents) and sparse_mod(p) == 0


def scale_poly(p: SparsePoly, k: int) -> SparsePoly:
    """Square p k times: every exponent multiplied by 2^k.

    Squaring preserves divisibility by G, so scaling maps zero
    polynomials to zero polynomials ("scaled by 8" = k=3).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return SparsePoly(e << k for e in p.exponents)


def dense_mod_oracle(coefficient_bits: Sequence[int]) -> int:
    """Schoolbook long division by G(x): bit at a time, no tables.

    Input is the full coefficient sequence, most significant first.
    Independent cross-check for xpow_mod and the CRC engines.
    """
    r = 0
    for bit in coefficient_bits:
        r = (r << 1) | (bit & 1)
        if r >> 32:
            r ^= GENERATOR_WORD
    return r


def poly_to_bits(p: SparsePoly) -> list[int]:
    """Coefficient sequence of p, most significant first (for the oracle)."""
    if p.is_zero():
        return [0]
    d = p.degree
    bits = [0] * (d + 1)
    for e in p.exponents:
        bits[d - e] = 1
    return bits


def bit_reverse32(v: int) -> int:
    """Reverse the 32 bits of v (normal <-> reflected rendering)."""
    v &= MASK32
    r = 0
    for _ in range(32):
        r = (r << 1) | (v & 1)
        v >>= 1
    return r
