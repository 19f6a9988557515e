"""Throughput harness for the implemented hash families.

Methodology: one deterministic pseudo-random input string is generated
per run and reused for every trial; key material is generated up front
and excluded from the timed region.  Before any timing, the family's
output on the input is checked against its independent reference
evaluator, and the run aborts on mismatch (a wrong fast hash has no
interesting speed).  Inside the timed loop every hash value is folded
into a running checksum so the work cannot be optimized away, and the
checksum lands in the report: for a fixed (family, seed, length,
char_bits) it must be identical across repetitions and runs.

The portable metric is wall-clock nanoseconds per byte.  No cycle
counter is accessible from pure Python; pass a clock rate (GHz) to
convert to estimated cycles per byte the way one would on a platform
without a counter.  Interpreter overhead dominates these numbers; they
order the families relative to one another rather than reproduce any
native-code figures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import baselines, reference
from .gf2 import default_poly, gf_multilinear, gf_multilinear_hm
from .keymaterial import generate_keys, raw_word
from .multilinear import (
    PARAMS_32_16,
    PARAMS_64_32,
    CharString,
    multilinear,
    multilinear_2by2,
    multilinear_hm,
)

FAMILY_NAMES = (
    "multilinear",
    "multilinear-2x2",
    "multilinear-hm",
    "gf-multilinear",
    "gf-multilinear-hm",
    "rabin-karp",
    "sax",
    "nh",
    "folklore",
)

# Domain separator so benchmark inputs never alias key-material words
# generated from the same seed.
INPUT_STREAM_TAG = 0x2545F4914F6CDD1D

_MASK64 = (1 << 64) - 1
_CHECKSUM_FOLD = 0x100000001B3


class OracleMismatchError(RuntimeError):
    """A production hash disagreed with its reference evaluator."""


@dataclass(frozen=True)
class BenchConfig:
    family: str
    char_bits: int = 32
    length: int = 1024
    trials: int = 50
    repetitions: int = 3
    seed: int = 1
    timer: str = "wall"  # "wall" | "cycles" (downgrades with a warning)
    clock_ghz: Optional[float] = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILY_NAMES}")
        if self.char_bits not in (16, 32):
            raise ValueError("char_bits must be 16 or 32")
        if self.length < 1 or self.trials < 1 or self.repetitions < 1:
            raise ValueError("length, trials and repetitions must all be at least 1")
        if self.timer not in ("wall", "cycles"):
            raise ValueError("timer must be 'wall' or 'cycles'")
        if self.clock_ghz is not None and self.clock_ghz <= 0:
            raise ValueError("clock_ghz must be positive")


@dataclass
class BenchRow:
    family: str
    char_bits: int
    length: int
    repetition: int
    ns_per_byte: float
    cycles_per_byte: Optional[float]
    checksum: int


@dataclass
class BenchRun:
    config: BenchConfig
    rows: list[BenchRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def variation(self) -> float:
        """Coefficient of variation of ns/byte across repetitions.

        A soft stability signal (roughly <= 0.10 on an idle machine);
        reported, never asserted.
        """
        xs = [row.ns_per_byte for row in self.rows]
        if len(xs) < 2:
            return 0.0
        mean = sum(xs) / len(xs)
        var = sum((x - mean) ** 2 for x in xs) / (len(xs) - 1)
        return (var**0.5) / mean if mean else 0.0


def generate_input(seed: int, length: int, char_bits: int) -> CharString:
    """Deterministic pseudo-random string of ``length`` char_bits-wide characters."""
    if length < 0:
        raise ValueError("length must be non-negative")
    mask = (1 << char_bits) - 1
    stream = (seed ^ INPUT_STREAM_TAG) & _MASK64
    return CharString(tuple(raw_word(stream, i) & mask for i in range(length)))


def _build(config: BenchConfig, chars: tuple) -> tuple[Callable[[], int], int]:
    """Closure hashing the bench input, plus its reference value."""
    name = config.family
    cb = config.char_bits
    n = config.length
    padded = n + (n % 2)

    if name in ("multilinear", "multilinear-2x2", "multilinear-hm"):
        p = PARAMS_64_32 if cb == 32 else PARAMS_32_16
        keys = generate_keys(config.seed, padded + 1, p.word_bits).words
        if name == "multilinear":
            return (lambda: multilinear(keys, chars, p)), reference.multilinear_exact(
                keys, chars, p.word_bits, p.shift
            )
        if name == "multilinear-2x2":
            return (lambda: multilinear_2by2(keys, chars, p)), reference.multilinear_exact(
                keys, chars, p.word_bits, p.shift
            )
        return (lambda: multilinear_hm(keys, chars, p)), reference.multilinear_hm_exact(
            keys, chars, p.word_bits, p.shift
        )

    if name in ("gf-multilinear", "gf-multilinear-hm"):
        poly = default_poly(cb)
        keys = generate_keys(config.seed, padded + 1, cb).words
        if name == "gf-multilinear":
            return (lambda: gf_multilinear(keys, chars, poly)), reference.gf_multilinear_slow(
                keys, chars, poly
            )
        return (lambda: gf_multilinear_hm(keys, chars, poly)), reference.gf_multilinear_hm_slow(
            keys, chars, poly
        )

    if name == "rabin-karp":
        return (lambda: baselines.rabin_karp(chars)), reference.rabin_karp_powsum(chars)

    if name == "sax":
        return (lambda: baselines.sax(chars)), reference.sax_steps(chars)

    if name == "nh":
        out_bits = 2 * cb
        keys = generate_keys(config.seed, padded, cb).words
        return (lambda: baselines.nh(keys, chars, out_bits)), reference.nh_exact(
            keys, chars, out_bits
        )

    # folklore: xor of products over double-width words, even length only
    if n % 2:
        raise ValueError("the folklore family requires an even string length")
    word_bits = 2 * cb
    keys = generate_keys(config.seed, n, word_bits).words
    return (
        lambda: baselines.folklore_xor(keys, chars, word_bits, cb)
    ), reference.folklore_exact(keys, chars, word_bits, cb)


def run_bench(config: BenchConfig) -> BenchRun:
    """Oracle-check one family, then time it; returns per-repetition rows.

    Raises `OracleMismatchError` before timing anything if the production
    path disagrees with the reference evaluator.
    """
    run = BenchRun(config=config)
    if config.timer == "cycles":
        run.warnings.append(
            "cycle counter unavailable in this runtime; using wall clock"
            + ("" if config.clock_ghz else " (pass clock_ghz to estimate cycles)")
        )

    chars = generate_input(config.seed, config.length, config.char_bits).chars
    hasher, expected = _build(config, chars)

    got = hasher()
    if got != expected:
        raise OracleMismatchError(
            f"{config.family}: production value {got:#x} != reference {expected:#x}"
        )

    bytes_per_trial = config.length * config.char_bits // 8
    total_bytes = bytes_per_trial * config.trials
    for rep in range(1, config.repetitions + 1):
        checksum = 0
        start = time.perf_counter_ns()
        for _ in range(config.trials):
            checksum = ((checksum ^ hasher()) * _CHECKSUM_FOLD) & _MASK64
        elapsed = time.perf_counter_ns() - start
        ns_per_byte = elapsed / total_bytes
        cycles = ns_per_byte * config.clock_ghz if config.clock_ghz else None
        run.rows.append(
            BenchRow(
                family=config.family,
                char_bits=config.char_bits,
                length=config.length,
                repetition=rep,
                ns_per_byte=ns_per_byte,
                cycles_per_byte=cycles,
                checksum=checksum,
            )
        )
    return run


CSV_HEADER = "family,char_bits,length,repetition,ns_per_byte,cycles_per_byte,checksum"


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        cyc = f"{r.cycles_per_byte:.6g}" if r.cycles_per_byte is not None else ""
        lines.append(
            f"{r.family},{r.char_bits},{r.length},{r.repetition},"
            f"{r.ns_per_byte:.6g},{cyc},{r.checksum:016x}"
        )
    return "\n".join(lines) + "\n"
