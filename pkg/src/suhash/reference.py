"""Independent reference evaluators for every hash family.

Each function recomputes a family's definition along a deliberately
different route from the production code: exact big-integer sums with a
single final reduction, schoolbook coefficient-list polynomial products,
classical long division.  The benchmark harness checks each family
against its reference before timing anything, and the test suite uses
them to cross-check the production paths on random inputs.
"""

from __future__ import annotations

from typing import Sequence

from .baselines import DEFAULT_RABIN_KARP_MULTIPLIER
from .gf2 import IrreduciblePoly, poly_mod_reference


def multilinear_exact(words: Sequence[int], chars: Sequence[int], word_bits: int, shift: int) -> int:
    """Exact big-integer sum, one reduction mod 2^word_bits, then the shift."""
    total = words[0] + sum(words[i + 1] * c for i, c in enumerate(chars))
    return (total % (1 << word_bits)) >> shift


def multilinear_hm_exact(words: Sequence[int], chars: Sequence[int], word_bits: int, shift: int) -> int:
    """Half-multiplication sum evaluated exactly, reduced once at the end."""
    cs = tuple(chars)
    if len(cs) % 2:
        cs += (0,)
    total = words[0]
    for i in range(0, len(cs), 2):
        total += (words[i + 1] + cs[i]) * (words[i + 2] + cs[i + 1])
    return (total % (1 << word_bits)) >> shift


def clmul_schoolbook(a: int, b: int) -> int:
    """Carry-less product via explicit coefficient convolution mod 2."""
    if a < 0 or b < 0:
        raise ValueError("operands must be non-negative")
    abits = [(a >> i) & 1 for i in range(a.bit_length())]
    bbits = [(b >> i) & 1 for i in range(b.bit_length())]
    out = [0] * (len(abits) + len(bbits))
    for i, ai in enumerate(abits):
        if ai:
            for j, bj in enumerate(bbits):
                out[i + j] ^= bj
    return sum(bit << i for i, bit in enumerate(out))


def gf_multilinear_slow(words: Sequence[int], chars: Sequence[int], p: IrreduciblePoly) -> int:
    acc = words[0]
    for i, c in enumerate(chars):
        acc ^= clmul_schoolbook(words[i + 1], c)
    return poly_mod_reference(acc, p)


def gf_multilinear_hm_slow(words: Sequence[int], chars: Sequence[int], p: IrreduciblePoly) -> int:
    cs = tuple(chars)
    if len(cs) % 2:
        cs += (0,)
    acc = words[0]
    for i in range(0, len(cs), 2):
        acc ^= clmul_schoolbook(words[i + 1] ^ cs[i], words[i + 2] ^ cs[i + 1])
    return poly_mod_reference(acc, p)


def rabin_karp_powsum(chars: Sequence[int], multiplier: int = DEFAULT_RABIN_KARP_MULTIPLIER) -> int:
    """Direct polynomial evaluation sum(c_i * B^(n-i)) instead of the Horner fold."""
    n = len(chars)
    mod = 1 << 32
    return sum(c * pow(multiplier, n - 1 - i, mod) for i, c in enumerate(chars)) % mod


def sax_steps(chars: Sequence[int]) -> int:
    """Shift-add-xor recurrence re-derived step by step with modular arithmetic."""
    mod = 1 << 32
    h = 0
    for c in chars:
        h = h ^ (((h * 32) % mod + h // 4 + c) % mod)
    return h


def nh_exact(words: Sequence[int], chars: Sequence[int], out_bits: int) -> int:
    """NH block products summed exactly, one final reduction."""
    half = 1 << (out_bits // 2)
    cs = tuple(chars)
    if len(cs) % 2:
        cs += (0,)
    total = 0
    for i in range(0, len(cs), 2):
        total += ((words[i] + cs[i]) % half) * ((words[i + 1] + cs[i + 1]) % half)
    return total % (1 << out_bits)


def folklore_exact(words: Sequence[int], chars: Sequence[int], word_bits: int, char_bits: int) -> int:
    mod = 1 << word_bits
    acc = 0
    for i in range(0, len(chars), 2):
        acc ^= ((words[i] + chars[i]) * (words[i + 1] + chars[i + 1])) % mod
    return acc >> char_bits
