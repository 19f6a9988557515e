"""Random key words for multilinear-style hash families.

Words come from a counter-based generator (a SplitMix64-style finalizer
applied to ``seed + index``), so the word at any position depends only on
the seed and the position.  A longer buffer generated from the same seed
is therefore always a bit-exact extension of a shorter one, which makes
late extension cheap when a string turns out to be longer than planned.

Buffers serialize to a fixed little-endian format (see `save_keys`);
words are stored at 64-bit granularity regardless of their width.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import BinaryIO

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

MAGIC = b"MLHK"
VERSION = 1
HEADER_SIZE = 24  # magic(4) version(1) word_bits(1) reserved(2) seed(8) count(8)
_HEADER = struct.Struct("<4sBBHQQ")


class KeyFormatError(ValueError):
    """A serialized key buffer could not be parsed."""


def _mix64(x: int) -> int:
    # SplitMix64 finalizer: an invertible 64-bit bit mixer.
    z = x & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def raw_word(seed: int, index: int) -> int:
    """Full 64-bit word at position ``index`` of the stream keyed by ``seed``."""
    return _mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


@dataclass(frozen=True)
class KeySpec:
    """Shape and provenance of a key buffer: word width, count, generator seed."""

    word_bits: int
    word_count: int
    seed: int

    def __post_init__(self):
        if not 1 <= self.word_bits <= 64:
            raise ValueError(f"word_bits must be in 1..64, got {self.word_bits}")
        if self.word_count < 1:
            raise ValueError("word_count must be at least 1")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must be a 64-bit unsigned value")


@dataclass(frozen=True)
class KeyBuffer:
    """Immutable sequence of `word_bits`-wide random words plus its spec.

    Safe to share across threads; every operation that changes key material
    returns a new buffer.
    """

    spec: KeySpec
    words: tuple[int, ...]

    def __post_init__(self):
        if len(self.words) != self.spec.word_count:
            raise ValueError(
                f"expected {self.spec.word_count} words, got {len(self.words)}"
            )
        limit = 1 << self.spec.word_bits
        for w in self.words:
            if not 0 <= w < limit:
                raise ValueError(f"word {w:#x} out of range for {self.spec.word_bits}-bit words")

    def __len__(self) -> int:
        return len(self.words)


def generate_keys(seed: int, count: int, word_bits: int) -> KeyBuffer:
    """Deterministically generate ``count`` words of ``word_bits`` bits each.

    The same (seed, count, word_bits) always reproduces the same buffer,
    and the words of a shorter buffer are a prefix of any longer buffer
    with the same seed.
    """
    spec = KeySpec(word_bits=word_bits, word_count=count, seed=seed)
    mask = (1 << word_bits) - 1
    words = tuple(raw_word(seed, i) & mask for i in range(count))
    return KeyBuffer(spec, words)


def extend_keys(buffer: KeyBuffer, new_count: int) -> KeyBuffer:
    """Grow a buffer to ``new_count`` words; the old words stay bit-identical.

    Shrinking is rejected.  The extension is regenerated from the recorded
    seed, so a buffer whose words do not match its seed is rejected too.
    """
    old = buffer.spec.word_count
    if new_count < old:
        raise ValueError(f"cannot shrink key buffer from {old} to {new_count} words")
    if new_count == old:
        return buffer
    grown = generate_keys(buffer.spec.seed, new_count, buffer.spec.word_bits)
    if grown.words[:old] != buffer.words:
        raise ValueError("buffer words do not match their recorded seed; cannot extend")
    return grown


def save_keys(buffer: KeyBuffer, sink: BinaryIO) -> int:
    """Write a buffer to ``sink``; returns the number of bytes written.

    Layout (little-endian): magic ``MLHK``, version byte, word-width byte,
    two reserved zero bytes, 8-byte seed, 8-byte word count, then one
    8-byte slot per word.
    """
    spec = buffer.spec
    header = _HEADER.pack(MAGIC, VERSION, spec.word_bits, 0, spec.seed, spec.word_count)
    payload = struct.pack(f"<{spec.word_count}Q", *buffer.words)
    sink.write(header)
    sink.write(payload)
    return len(header) + len(payload)


def _read_exact(source: BinaryIO, n: int) -> bytes:
    data = source.read(n)
    if len(data) != n:
        raise KeyFormatError(f"truncated key stream: wanted {n} bytes, got {len(data)}")
    return data


def load_keys(source: BinaryIO) -> KeyBuffer:
    """Read a buffer written by `save_keys`; the round trip is bit-exact."""
    magic, version, word_bits, reserved, seed, count = _HEADER.unpack(
        _read_exact(source, HEADER_SIZE)
    )
    if magic != MAGIC:
        raise KeyFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise KeyFormatError(f"unsupported version {version}")
    if reserved != 0:
        raise KeyFormatError("reserved header bytes must be zero")
    if not 1 <= word_bits <= 64:
        raise KeyFormatError(f"word_bits must be in 1..64, got {word_bits}")
    if count < 1:
        raise KeyFormatError("word_count must be at least 1")
    words = struct.unpack(f"<{count}Q", _read_exact(source, 8 * count))
    limit = 1 << word_bits
    for w in words:
        if w >= limit:
            raise KeyFormatError(f"stored word {w:#x} exceeds {word_bits}-bit width")
    return KeyBuffer(KeySpec(word_bits=word_bits, word_count=count, seed=seed), tuple(words))
