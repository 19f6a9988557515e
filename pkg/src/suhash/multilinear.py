"""Multilinear string hashing in the ring of integers modulo 2^word_bits.

The families here compute a scalar-product-style accumulation of random
key words against string characters, wrapping every intermediate result
to the word width, and keep the high bits of the accumulator as the hash
value:

    multilinear       m1 + m2*s1 + m3*s2 + ...         one multiply per char
    multilinear_2by2  same sum, accumulated two terms at a time
    multilinear_hm    m1 + (m2+s1)(m3+s2) + ...        one multiply per TWO chars

With word_bits >= char_bits - 1 these are strongly universal over
fixed-length strings: the hash values of any two distinct strings are
independent and uniform.  Hashing a length-n string needs n+1 key words.

Two output conventions are supported.  ``shift = char_bits - 1`` keeps
``word_bits - char_bits + 1`` output bits (the widest independent output);
``shift = char_bits`` keeps one bit fewer and is the production choice
because the shift amount equals the character width (e.g. take the high
32 bits of a 64-bit accumulator).  The second is a bit-subset of the
first, so independence carries over.

Variable-length strings must not end with a zero character: run
`encode_variable` first, which appends a 1 terminator (and then a 0 pad
if an even length is required).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .keymaterial import KeyBuffer


@dataclass(frozen=True)
class HashParams:
    """Word width, character width and output shift for the ring families."""

    word_bits: int
    char_bits: int
    shift: int

    def __post_init__(self):
        if not self.word_bits >= self.char_bits - 1 >= 0:
            raise ValueError(
                f"need word_bits >= char_bits - 1 >= 0, got "
                f"word_bits={self.word_bits}, char_bits={self.char_bits}"
            )
        if self.shift not in (self.char_bits - 1, self.char_bits):
            raise ValueError(
                f"shift must be char_bits or char_bits - 1, got {self.shift}"
            )
        if self.output_bits < 1:
            raise ValueError("configuration leaves no output bits")

    @property
    def output_bits(self) -> int:
        return self.word_bits - self.shift

    @property
    def word_mask(self) -> int:
        return (1 << self.word_bits) - 1

    @property
    def char_limit(self) -> int:
        return 1 << self.char_bits


# Production configurations: 32-bit hashes of 32-bit characters with 64-bit
# words, and the half-width variant used on 32-bit machines.
PARAMS_64_32 = HashParams(word_bits=64, char_bits=32, shift=32)
PARAMS_32_16 = HashParams(word_bits=32, char_bits=16, shift=16)


@dataclass(frozen=True)
class CharString:
    """A hash input: a sequence of fixed-width unsigned characters."""

    chars: tuple[int, ...]

    @classmethod
    def from_bytes(cls, data: bytes, char_bits: int) -> "CharString":
        """Reinterpret raw bytes as little-endian ``char_bits``-wide characters.

        ``char_bits`` must be a multiple of 8 and ``data`` a whole number of
        characters; no implicit padding is applied.
        """
        if char_bits <= 0 or char_bits % 8:
            raise ValueError("char_bits must be a positive multiple of 8")
        step = char_bits // 8
        if len(data) % step:
            raise ValueError(
                f"byte length {len(data)} is not a multiple of {step}-byte characters"
            )
        chars = tuple(
            int.from_bytes(data[i : i + step], "little") for i in range(0, len(data), step)
        )
        return cls(chars)

    def __len__(self) -> int:
        return len(self.chars)


KeyLike = Union[KeyBuffer, Sequence[int]]
StringLike = Union[CharString, Sequence[int]]


def _key_words(key: KeyLike) -> Sequence[int]:
    return key.words if isinstance(key, KeyBuffer) else key


def _char_seq(s: StringLike) -> Sequence[int]:
    return s.chars if isinstance(s, CharString) else s


def _check(words: Sequence[int], chars: Sequence[int], p: HashParams, needed: int):
    if len(words) < needed:
        raise ValueError(f"need {needed} key words for {len(chars)} characters, have {len(words)}")
    if chars and (max(chars) >= p.char_limit or min(chars) < 0):
        raise ValueError(f"character out of range for {p.char_bits}-bit characters")


def multilinear(key: KeyLike, s: StringLike, p: HashParams) -> int:
    """Hash ``s``: high bits of (m1 + sum of m_{i+1}*s_i) wrapped mod 2^word_bits."""
    words = _key_words(key)
    chars = _char_seq(s)
    _check(words, chars, p, len(chars) + 1)
    mask = p.word_mask
    acc = words[0]
    i = 1
    for c in chars:
        acc = (acc + words[i] * c) & mask
        i += 1
    return acc >> p.shift


def multilinear_2by2(key: KeyLike, s: StringLike, p: HashParams) -> int:
    """`multilinear` with the sum accumulated two terms at a time.

    Bit-identical to `multilinear` on the same input (the wrapped sum is
    reassociated, nothing else).  Odd-length strings are zero-padded
    internally, which never changes the multilinear value.
    """
    words = _key_words(key)
    chars = _char_seq(s)
    if len(chars) % 2:
        chars = tuple(chars) + (0,)
    _check(words, chars, p, len(chars) + 1)
    mask = p.word_mask
    acc = words[0]
    for i in range(0, len(chars), 2):
        acc = (acc + words[i + 1] * chars[i] + words[i + 2] * chars[i + 1]) & mask
    return acc >> p.shift


def multilinear_hm(key: KeyLike, s: StringLike, p: HashParams) -> int:
    """Half-multiplication variant: one product per character pair.

    Computes the high bits of m1 + sum of (m_{2i} + s_{2i-1})(m_{2i+1} + s_{2i}),
    every sum and product wrapping mod 2^word_bits.  Odd-length strings are
    zero-padded to even length before evaluation.
    """
    words = _key_words(key)
    chars = _char_seq(s)
    if len(chars) % 2:
        chars = tuple(chars) + (0,)
    _check(words, chars, p, len(chars) + 1)
    mask = p.word_mask
    acc = words[0]
    for i in range(0, len(chars), 2):
        acc = (acc + ((words[i + 1] + chars[i]) & mask) * ((words[i + 2] + chars[i + 1]) & mask)) & mask
    return acc >> p.shift


def encode_variable(s: StringLike, pad_to_even: bool = False) -> CharString:
    """Terminate a variable-length string so it never ends with zero.

    Appends one character of value 1; if ``pad_to_even`` and the result has
    odd length, appends one zero character after the terminator (the pad
    must come after the 1, never before).
    """
    chars = tuple(_char_seq(s)) + (1,)
    if pad_to_even and len(chars) % 2:
        chars += (0,)
    return CharString(chars)


def reference_multilinear(
    key: KeyLike, s: StringLike, word_bits: int, char_bits: int, shift: int
) -> int:
    """Small-width evaluator reducing modulo 2^word_bits after every step.

    Same mathematical definition as `multilinear` for any word width up to
    32 bits; kept separate so exhaustive certification has an evaluator
    written along a second route.
    """
    if word_bits > 32:
        raise ValueError("reference evaluator supports word_bits <= 32")
    p = HashParams(word_bits=word_bits, char_bits=char_bits, shift=shift)
    words = _key_words(key)
    chars = _char_seq(s)
    _check(words, chars, p, len(chars) + 1)
    modulus = 1 << word_bits
    acc = words[0] % modulus
    for i, c in enumerate(chars):
        acc = (acc + (words[i + 1] * c) % modulus) % modulus
    return acc // (1 << shift)
