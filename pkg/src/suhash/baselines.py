"""Comparison hash functions.

Rabin-Karp and SAX are fast deterministic (keyless) 32-bit string hashes
of the kind found in language runtimes; they carry no distributional
guarantee here beyond determinism.  NH is an almost-universal keyed
family that pairs half-width sums into full-width products; it is NOT
uniform, and its low output bits are not even almost universal.  The
xor-of-products family `folklore_xor` looks like a cheaper cousin of the
half-multiplication scheme but fails universality outright; it is kept so
the certification machinery has a negative control to falsify.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .keymaterial import KeyBuffer

_M32 = (1 << 32) - 1

DEFAULT_RABIN_KARP_MULTIPLIER = 31


def _chars(s) -> Sequence[int]:
    return s.chars if hasattr(s, "chars") else s


def _words(key) -> Sequence[int]:
    return key.words if isinstance(key, KeyBuffer) else key


def rabin_karp(s, multiplier: int = DEFAULT_RABIN_KARP_MULTIPLIER) -> int:
    """Multiplicative fold h = B*h + c over 32-bit wrapping arithmetic."""
    h = 0
    for c in _chars(s):
        h = (multiplier * h + c) & _M32
    return h


def sax(s) -> int:
    """Shift-add-xor fold: h ^= (h << 5) + (h >> 2) + c, wrapping at 32 bits."""
    h = 0
    for c in _chars(s):
        h ^= ((h << 5) + (h >> 2) + c) & _M32
    return h


@dataclass(frozen=True)
class NhParams:
    """NH geometry: characters and key words are half the output width."""

    out_bits: int

    def __post_init__(self):
        if self.out_bits < 2 or self.out_bits % 2:
            raise ValueError("out_bits must be even and at least 2")

    @property
    def half_bits(self) -> int:
        return self.out_bits // 2


def nh(key, s, out_bits: int) -> int:
    """NH: sum of products of half-width wrapped sums.

    Each block contributes ((m_{2i-1} + s_{2i-1}) mod 2^(out/2)) *
    ((m_{2i} + s_{2i}) mod 2^(out/2)); blocks accumulate mod 2^out.
    Odd-length strings are zero-padded.  A length-n (padded) string needs
    n key words.
    """
    params = NhParams(out_bits)
    half_mask = (1 << params.half_bits) - 1
    out_mask = (1 << out_bits) - 1
    chars = tuple(_chars(s))
    if len(chars) % 2:
        chars += (0,)
    words = _words(key)
    if len(words) < len(chars):
        raise ValueError(f"need {len(chars)} key words, have {len(words)}")
    if chars and (max(chars) > half_mask or min(chars) < 0):
        raise ValueError(f"character out of range for {params.half_bits}-bit characters")
    acc = 0
    for i in range(0, len(chars), 2):
        acc = (acc + ((words[i] + chars[i]) & half_mask) * ((words[i + 1] + chars[i + 1]) & half_mask)) & out_mask
    return acc


def folklore_xor(key, s, word_bits: int, char_bits: int) -> int:
    """Xor-of-products family (not universal; kept as a negative control).

    Blocks (m_{2i-1} + s_{2i-1})(m_{2i} + s_{2i}) are wrapped mod
    2^word_bits, xor-folded, and the low char_bits are dropped.  Requires
    an even-length string and n key words.
    """
    chars = tuple(_chars(s))
    if len(chars) % 2:
        raise ValueError("xor-of-products family requires an even-length string")
    words = _words(key)
    if len(words) < len(chars):
        raise ValueError(f"need {len(chars)} key words, have {len(words)}")
    mask = (1 << word_bits) - 1
    limit = 1 << char_bits
    if chars and (max(chars) >= limit or min(chars) < 0):
        raise ValueError(f"character out of range for {char_bits}-bit characters")
    acc = 0
    for i in range(0, len(chars), 2):
        acc ^= ((words[i] + chars[i]) * (words[i + 1] + chars[i + 1])) & mask
    return acc >> char_bits
