"""Carry-less arithmetic and string hashing in binary finite fields.

Polynomials over GF(2) are plain ints: bit i is the coefficient of x^i
(the usual convention in GF(2) code).  Carry-less multiplication `clmul`
is polynomial multiplication; addition is xor.

The hash families accumulate m1 xor (m2*s1) xor (m3*s2) xor ... as raw
carry-less products (a value of at most 2L-1 bits for L-bit operands) and
only reduce once at the end, by an irreducible degree-L modulus.  The
reduction uses Barrett's method, which is exact whenever the modulus has
no term strictly between x^(L/2) and x^L; every entry of the built-in
modulus table satisfies that constraint.

In `gf_multilinear_hm` the "+" inside each block is field addition, i.e.
bitwise xor (the natural reading of a sum of field elements); it is NOT
integer addition.  Per-block products are then carry-less.

Hashing a length-n string of L-bit characters consumes (n+1)*L random key
bits, versus (n+1)*K for the ring families at word width K.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .keymaterial import KeyBuffer

Gf2Poly = int  # bit i = coefficient of x^i


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-vector polynomials (shift-xor loop).

    Exact for any non-negative operands; two L-bit inputs give a result of
    at most 2L-1 bits.  This is the portable, normative implementation.
    """
    if a < 0 or b < 0:
        raise ValueError("carry-less operands must be non-negative")
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


# Bit strands spaced so column sums in an integer product cannot carry
# across digit boundaries: spacing 4 allows <= 8 overlapping terms
# (operands up to 32 bits), spacing 5 allows <= 13 (up to 64 bits).
_STRAND4 = 0x11111111
_PMASK4 = 0x1111111111111111
_STRAND5 = sum(1 << i for i in range(0, 64, 5))
_PMASK5 = sum(1 << i for i in range(0, 128, 5))


def clmul_via_int(a: int, b: int) -> int:
    """Accelerated carry-less product built on the integer multiplier.

    Splits each operand into bit strands sparse enough that an ordinary
    integer multiplication cannot carry between coefficient positions, then
    keeps one bit per position.  Operands up to 64 bits; bit-identical to
    `clmul` (equivalence-tested exhaustively at small widths and on random
    wide operands).
    """
    if a < 0 or b < 0:
        raise ValueError("carry-less operands must be non-negative")
    if a.bit_length() <= 32 and b.bit_length() <= 32:
        k, strand, pmask = 4, _STRAND4, _PMASK4
    elif a.bit_length() <= 64 and b.bit_length() <= 64:
        k, strand, pmask = 5, _STRAND5, _PMASK5
    else:
        raise ValueError("accelerated path supports operands up to 64 bits")
    r = 0
    for i in range(k):
        ai = a & (strand << i)
        if not ai:
            continue
        for j in range(k):
            bj = b & (strand << j)
            if bj:
                r ^= (ai * bj) & (pmask << (i + j))
    return r


@dataclass(frozen=True)
class IrreduciblePoly:
    """A monic degree-L modulus with all lower terms of degree <= L/2.

    The low-degree-tail constraint is what makes the two-multiplication
    Barrett reduction exact.  Irreducibility itself is checked by
    `is_irreducible` (brute-force factor search) in the test suite for
    widths up to 16; the 32-bit table entry is a published polynomial.
    """

    bits: int
    char_bits: int

    def __post_init__(self):
        L = self.char_bits
        if L < 1:
            raise ValueError("char_bits must be positive")
        if self.bits.bit_length() - 1 != L:
            raise ValueError(f"modulus must be monic of degree exactly {L}")
        tail = self.bits ^ (1 << L)
        if tail.bit_length() - 1 > L // 2:
            raise ValueError(
                f"modulus tail degree {tail.bit_length() - 1} exceeds {L // 2}"
            )


_POLY_TABLE = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    8: 0x11B,  # x^8 + x^4 + x^3 + x + 1
    16: 0x1002B,  # x^16 + x^5 + x^3 + x + 1
    32: 0x1000000C5,  # x^32 + x^7 + x^6 + x^2 + 1
}


def default_poly(char_bits: int) -> IrreduciblePoly:
    """Built-in low-tail irreducible modulus for a supported character width."""
    try:
        bits = _POLY_TABLE[char_bits]
    except KeyError:
        raise ValueError(
            f"no default modulus for {char_bits}-bit characters; "
            f"supported widths: {sorted(_POLY_TABLE)}"
        ) from None
    return IrreduciblePoly(bits=bits, char_bits=char_bits)


def _poly_rem(q: int, divisor: int) -> int:
    # Classical GF(2) long division, top bit down.
    dd = divisor.bit_length() - 1
    while q.bit_length() - 1 >= dd and q:
        q ^= divisor << (q.bit_length() - 1 - dd)
    return q


def poly_mod_reference(q: Gf2Poly, p: IrreduciblePoly) -> int:
    """Remainder of q(x) / p(x) by classical long division.

    The independent oracle for `barrett_reduce`.
    """
    if q < 0:
        raise ValueError("polynomial must be non-negative")
    return _poly_rem(q, p.bits)


def barrett_reduce(q: Gf2Poly, p: IrreduciblePoly) -> int:
    """Remainder of q(x) / p(x) using two carry-less multiplications.

    Requires q below 2^(2L-1) (the width of a product of two L-bit
    operands) and a low-tail modulus; under those conditions the result
    equals classical long division.
    """
    L = p.char_bits
    if not 0 <= q < 1 << (2 * L - 1):
        raise ValueError(f"operand must be below 2^{2 * L - 1}")
    q1 = q >> L
    q2 = clmul(q1, p.bits)
    q3 = q2 >> L
    return (q ^ clmul(q3, p.bits)) & ((1 << L) - 1)


def is_irreducible(bits: int) -> bool:
    """Brute-force irreducibility of a GF(2) polynomial by trial division.

    Tries every possible factor of degree 1 through deg/2; exponential in
    the degree, intended for small moduli.
    """
    deg = bits.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _poly_rem(bits, f) == 0:
                return False
    return True


KeyLike = Union[KeyBuffer, Sequence[int]]
MulFn = Callable[[int, int], int]


def _words_chars(key: KeyLike, s, char_bits: int, needed: int):
    words = key.words if isinstance(key, KeyBuffer) else key
    chars = s.chars if hasattr(s, "chars") else s
    if len(words) < needed:
        raise ValueError(f"need {needed} key words, have {len(words)}")
    limit = 1 << char_bits
    if chars and (max(chars) >= limit or min(chars) < 0):
        raise ValueError(f"character out of range for {char_bits}-bit characters")
    return words, chars


def gf_multilinear(key: KeyLike, s, p: IrreduciblePoly, *, mul: MulFn = clmul) -> int:
    """Multilinear hash over GF(2^L): xor-fold of carry-less products, reduced once."""
    words, chars = _words_chars(key, s, p.char_bits, len(s) + 1)
    acc = words[0]
    for i, c in enumerate(chars):
        acc ^= mul(words[i + 1], c)
    return barrett_reduce(acc, p)


def gf_multilinear_hm(key: KeyLike, s, p: IrreduciblePoly, *, mul: MulFn = clmul) -> int:
    """Half-multiplication field variant: one carry-less product per character pair.

    Blocks are (m_{2i} xor s_{2i-1}) * (m_{2i+1} xor s_{2i}); the "+" of the
    field is xor.  Odd-length strings are zero-padded to even length.
    """
    chars = s.chars if hasattr(s, "chars") else s
    if len(chars) % 2:
        chars = tuple(chars) + (0,)
    words, chars = _words_chars(key, chars, p.char_bits, len(chars) + 1)
    acc = words[0]
    for i in range(0, len(chars), 2):
        acc ^= mul(words[i + 1] ^ chars[i], words[i + 2] ^ chars[i + 1])
    return barrett_reduce(acc, p)
