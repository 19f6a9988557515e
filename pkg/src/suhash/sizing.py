"""Random-bit economics of multilinear hashing.

How many random key bits does it take to hash M input bits into z
pairwise-independent output bits?  The information-theoretic floor
(Stinson's bound) is log2(1 + 2^M * (2^z - 1)) bits, which for large M is
essentially M + z.  A multilinear family at character width L spends
(z + L - 1) * (ceil(M / L) + 1) bits, so the character width trades key
material against multiplication cost:

  * to minimize key bits alone, the best width is sqrt((z-1) * M / 2),
    and the consumption approaches the floor as M grows;
  * if a K-bit multiplication costs K^a time (a > 1), cost per hashed bit
    is (z + L - 1)^a / L, minimized at L = (z - 1) / (a - 1).

When word sizes are restricted to machine widths, the usable character
width is K - z + 1 for each allowed word size K, and the consumption
ratio flattens out above 1 (e.g. 64/33, about 1.94, for 32-bit hashes
with words capped at 64 bits).

Curve emitters return deterministic CSV (header row, '.' decimal, six
significant digits for reals) for plotting or CI comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

EXACT_BITS_LIMIT = 1024


@dataclass(frozen=True)
class SizingQuery:
    """A sizing question: input size, output size, word-size constraints, cost model."""

    input_bits: int
    hash_bits: int
    allowed_word_sizes: Optional[tuple[int, ...]] = None  # None = unconstrained
    cost_exponent: float = 1.5

    def __post_init__(self):
        if self.input_bits < 1:
            raise ValueError("input_bits must be at least 1")
        if self.hash_bits < 1:
            raise ValueError("hash_bits must be at least 1")
        if self.cost_exponent <= 1:
            raise ValueError("cost_exponent must exceed 1")
        if self.allowed_word_sizes is not None and not self.allowed_word_sizes:
            raise ValueError("allowed_word_sizes must be non-empty or None")


def stinson_min_bits(input_bits: int, hash_bits: int) -> float:
    """Minimum random bits for hash_bits pairwise-independent bits of input_bits input.

    Exact (log2 of the exact integer 1 + 2^M * (2^z - 1)) while M + z stays
    within 1024 bits; beyond that, the closed form M + log2(2^z - 1) is
    used, whose absolute error is below 2^(1 - M).
    """
    if input_bits < 1 or hash_bits < 1:
        raise ValueError("input_bits and hash_bits must be at least 1")
    if input_bits + hash_bits <= EXACT_BITS_LIMIT:
        return math.log2(1 + (1 << input_bits) * ((1 << hash_bits) - 1))
    return input_bits + math.log2((1 << hash_bits) - 1)


def multilinear_key_bits(input_bits: int, char_bits: int, hash_bits: int) -> int:
    """Random key bits a multilinear family spends: (z + L - 1)(ceil(M/L) + 1)."""
    if char_bits < 1:
        raise ValueError("char_bits must be at least 1")
    if input_bits < 0:
        raise ValueError("input_bits must be non-negative")
    return (hash_bits + char_bits - 1) * (-(-input_bits // char_bits) + 1)


def key_bits_upper_bound(input_bits: int, char_bits: int, hash_bits: int) -> float:
    """Smooth upper bound (z + L - 1)(M/L + 2) on the key-bit count.

    Replaces the ceiling in `multilinear_key_bits` with M/L + 1 <= its
    bound; convex in L, minimized at sqrt((z - 1) * M / 2).
    """
    return (hash_bits + char_bits - 1) * (input_bits / char_bits + 2)


def optimal_char_bits_random(input_bits: int, hash_bits: int) -> float:
    """Character width minimizing the key-bit bound: sqrt((z - 1) * M / 2)."""
    if input_bits < 1:
        raise ValueError("input_bits must be at least 1")
    if hash_bits < 2:
        raise ValueError("hash_bits must be at least 2")
    return math.sqrt((hash_bits - 1) * input_bits / 2)


def optimal_char_bits_cost(hash_bits: int, cost_exponent: float) -> float:
    """Character width minimizing modeled cost per bit: (z - 1) / (a - 1)."""
    if cost_exponent <= 1:
        raise ValueError("cost_exponent must exceed 1")
    return (hash_bits - 1) / (cost_exponent - 1)


def cost_per_bit(char_bits: int, hash_bits: int, cost_exponent: float) -> float:
    """Modeled processing cost per hashed bit: (z + L - 1)^a / L."""
    return (hash_bits + char_bits - 1) ** cost_exponent / char_bits


def best_char_bits(
    input_bits: int,
    hash_bits: int,
    allowed_word_sizes: Optional[Sequence[int]] = None,
) -> tuple[int, int]:
    """Pick the key-bit-minimizing character width; returns (char_bits, key_bits).

    Unconstrained, the scan covers one candidate per value of ceil(M/L)
    (the smallest width in each ceiling class always wins its class), so
    the returned width is the exact global minimizer.  Constrained, the
    usable width is K - z + 1 for each allowed word size K; word sizes too
    small to leave a positive width are skipped.
    """
    if allowed_word_sizes is None:
        root = math.isqrt(max(input_bits, 1)) + 1
        candidates = set(range(1, root + 1))
        candidates.update(-(-input_bits // t) for t in range(1, root + 1))
        candidates.discard(0)
    else:
        candidates = {
            k - hash_bits + 1 for k in allowed_word_sizes if k - hash_bits + 1 >= 1
        }
        if not candidates:
            raise ValueError(
                f"no allowed word size leaves a positive character width for "
                f"{hash_bits}-bit hashes"
            )
    best = min(sorted(candidates), key=lambda L: (multilinear_key_bits(input_bits, L, hash_bits), L))
    return best, multilinear_key_bits(input_bits, best, hash_bits)


def _fmt(x) -> str:
    if isinstance(x, int):
        return str(x)
    return f"{x:.6g}"


def stinson_ratio_rows(
    input_bits_values: Iterable[int],
    hash_bits: int,
    allowed_word_sizes: Optional[Sequence[int]] = None,
) -> list[tuple[int, int, int, float, float]]:
    """Rows (M, best_L, family_bits, stinson_bits, ratio) for each input size."""
    rows = []
    for m in input_bits_values:
        char_bits, fam = best_char_bits(m, hash_bits, allowed_word_sizes)
        floor = stinson_min_bits(m, hash_bits)
        rows.append((m, char_bits, fam, floor, fam / floor))
    return rows


def stinson_ratio_csv(
    input_bits_values: Iterable[int],
    hash_bits: int,
    allowed_word_sizes: Optional[Sequence[int]] = None,
) -> str:
    rows = stinson_ratio_rows(input_bits_values, hash_bits, allowed_word_sizes)
    lines = ["input_bits,char_bits,family_bits,stinson_bits,ratio"]
    for m, char_bits, fam, floor, ratio in rows:
        lines.append(f"{m},{char_bits},{fam},{_fmt(floor)},{_fmt(ratio)}")
    return "\n".join(lines) + "\n"


def cost_rows(
    hash_bits: int, cost_exponent: float, char_bits_values: Iterable[int]
) -> list[tuple[int, float]]:
    """Rows (char_bits, cost_per_bit) of the multiplication cost model."""
    return [(L, cost_per_bit(L, hash_bits, cost_exponent)) for L in char_bits_values]


def cost_curve_csv(hash_bits: int, cost_exponent: float, char_bits_values: Iterable[int]) -> str:
    lines = ["char_bits,cost_per_bit"]
    for L, cost in cost_rows(hash_bits, cost_exponent, char_bits_values):
        lines.append(f"{L},{_fmt(cost)}")
    return "\n".join(lines) + "\n"
