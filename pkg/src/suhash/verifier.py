"""Exhaustive, exact certification of hash-family distributions.

Everything here enumerates a full key space and counts, so the verdicts
are mechanical facts, not estimates: a family is reported strongly
universal only if, for every pair of distinct strings, every joint cell
(y, y') holds exactly keyspace / 2^(2*output_bits) keys.  Probabilities
are exact rationals (`fractions.Fraction`), never floats, so a claim
like "collides with probability 576/4096" is checked as an equality.

Key spaces are capped at 2^24 enumerable keys and a per-check evaluation
budget (strings times keys) guards desk-scale runtime; larger requests
must pass an explicit character subset or a raised budget.

Counting is vectorized with numpy over the enumerated key space; every
family also carries a plain scalar evaluator (the production code path),
and the two are equivalence-tested against each other in the test suite.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import baselines
from .gf2 import (
    IrreduciblePoly,
    barrett_reduce,
    default_poly,
    gf_multilinear,
    gf_multilinear_hm,
    poly_mod_reference,
)
from .multilinear import HashParams, multilinear, multilinear_hm

DEFAULT_BUDGET = 1 << 24
_KEYSPACE_BITS_CAP = 24

CSV_HEADER = (
    "family,n,output_bits,keyspace,strings,uniform,strongly_universal,"
    "max_collision_probability,max_joint_deviation,params"
)


@dataclass(frozen=True)
class FamilyUnderTest:
    """A keyed hash family packaged for enumeration.

    `evaluate` is the scalar production path: (key words, characters) to a
    hash value.  `evaluate_batch`, when present, maps per-word numpy arrays
    covering the whole key space to the array of hash values and must be
    bit-identical to `evaluate`.
    """

    family_id: str
    key_word_bits: int
    char_bits: int
    output_bits: int
    key_words_needed: Callable[[int], int]
    evaluate: Callable[[Sequence[int], Sequence[int]], int]
    evaluate_batch: Optional[Callable[[list, tuple], np.ndarray]] = None
    params: dict = field(default_factory=dict)


@dataclass
class UniversalityReport:
    """Exact joint-distribution verdict for one family at one string length."""

    family_id: str
    params: dict
    n: int
    string_count: int
    keyspace: int
    output_bits: int
    uniform: bool
    strongly_universal: bool
    max_joint_deviation: Fraction
    max_collision_probability: Fraction
    worst_pair: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    joint_counts: Optional[dict] = None

    def csv_row(self) -> str:
        params = ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return (
            f"{self.family_id},{self.n},{self.output_bits},{self.keyspace},"
            f"{self.string_count},{self.uniform},{self.strongly_universal},"
            f"{self.max_collision_probability},{self.max_joint_deviation},{params}"
        )

    def summary(self) -> str:
        verdict = "strongly universal" if self.strongly_universal else "NOT strongly universal"
        return (
            f"{self.family_id} n={self.n}: {verdict}; uniform={self.uniform}; "
            f"worst collision {self.max_collision_probability}; "
            f"worst joint deviation {self.max_joint_deviation}"
        )


def trailing_zeros(a: int) -> int:
    """Exponent of the largest power of two dividing a positive integer."""
    if a < 1:
        raise ValueError("trailing_zeros requires a positive integer")
    return (a & -a).bit_length() - 1


def count_affine_preimages(
    a: int, b: int, c: int, word_bits: int, char_bits: int
) -> tuple[int, set[int]]:
    """Count and list the x in [0, 2^K) with ((a*x + c) mod 2^K) >> (L-1) == b.

    Here K = word_bits and L = char_bits.  For a in [1, 2^L), b in
    [0, 2^(K-L+1)) and c in [0, 2^K) with K >= L - 1 >= 0, the count is
    always 2^(L-1); this enumerator is the mechanical check of that fact,
    and the reason the multilinear families are strongly universal.
    """
    K, L = word_bits, char_bits
    if not (K >= L - 1 >= 0):
        raise ValueError("need word_bits >= char_bits - 1 >= 0")
    if K > _KEYSPACE_BITS_CAP:
        raise ValueError(f"enumeration limited to word_bits <= {_KEYSPACE_BITS_CAP}")
    if not 1 <= a < (1 << L):
        raise ValueError(f"a must be in [1, 2^{L})")
    if not 0 <= b < (1 << (K - L + 1)):
        raise ValueError(f"b must be in [0, 2^{K - L + 1})")
    if not 0 <= c < (1 << K):
        raise ValueError(f"c must be in [0, 2^{K})")
    x = np.arange(1 << K, dtype=np.int64)
    hits = x[(((a * x + c) & ((1 << K) - 1)) >> (L - 1)) == b]
    return len(hits), {int(v) for v in hits}


def affine_preimage_sweep(word_bits: int, char_bits: int) -> tuple[bool, int]:
    """Check the 2^(L-1) solution count for every (a, b, c) at once.

    Returns (all counts correct, number of (a, b, c) combinations checked).
    """
    K, L = word_bits, char_bits
    if not (K >= L - 1 >= 0) or K > 16:
        raise ValueError("sweep supports word_bits <= 16 with word_bits >= char_bits - 1 >= 0")
    mask = (1 << K) - 1
    expected = 1 << (L - 1)
    b_card = 1 << (K - L + 1)
    x = np.arange(1 << K, dtype=np.int64)
    combos = 0
    ok = True
    for a in range(1, 1 << L):
        ax = a * x
        for c in range(1 << K):
            counts = np.bincount(((ax + c) & mask) >> (L - 1), minlength=b_card)
            combos += b_card
            if counts.min() != expected or counts.max() != expected:
                ok = False
    return ok, combos


@functools.lru_cache(maxsize=8)
def _digit_arrays(word_bits: int, word_count: int) -> tuple:
    """Per-word value arrays covering the whole key space, highest word first.

    Ordering matches itertools.product(range(2^word_bits), repeat=word_count).
    Cached and shared; callers must treat the arrays as read-only.
    """
    total_bits = word_bits * word_count
    if total_bits > _KEYSPACE_BITS_CAP:
        raise ValueError(
            f"key space 2^{total_bits} exceeds the 2^{_KEYSPACE_BITS_CAP} enumeration cap"
        )
    idx = np.arange(1 << total_bits, dtype=np.int64)
    mask = (1 << word_bits) - 1
    return tuple(
        (idx >> (word_bits * (word_count - 1 - j))) & mask for j in range(word_count)
    )


def _value_table(f: FamilyUnderTest, chars: tuple, word_count: int) -> np.ndarray:
    if f.evaluate_batch is not None:
        arrays = _digit_arrays(f.key_word_bits, word_count)
        return f.evaluate_batch(list(arrays), chars)
    keyspace = 1 << (f.key_word_bits * word_count)
    if f.key_word_bits * word_count > _KEYSPACE_BITS_CAP:
        raise ValueError("key space exceeds the enumeration cap")
    vals = np.fromiter(
        (
            f.evaluate(kw, chars)
            for kw in itertools.product(range(1 << f.key_word_bits), repeat=word_count)
        ),
        dtype=np.int64,
        count=keyspace,
    )
    return vals


def output_distribution(f: FamilyUnderTest, s: Sequence[int]) -> np.ndarray:
    """Exact count of keys mapping string ``s`` to each output value."""
    chars = tuple(s)
    vals = _value_table(f, chars, f.key_words_needed(len(chars)))
    return np.bincount(vals, minlength=1 << f.output_bits)


def joint_distribution(f: FamilyUnderTest, s: Sequence[int], s_prime: Sequence[int]) -> np.ndarray:
    """Exact 2^out x 2^out table of key counts for (h(s), h(s')); s != s'."""
    sa, sb = tuple(s), tuple(s_prime)
    if sa == sb:
        raise ValueError("joint distribution requires two distinct strings")
    word_count = f.key_words_needed(max(len(sa), len(sb)))
    va = _value_table(f, sa, word_count)
    vb = _value_table(f, sb, word_count)
    oc = 1 << f.output_bits
    combined = (va << f.output_bits) | vb
    return np.bincount(combined, minlength=oc * oc).reshape(oc, oc)


def collision_probability(f: FamilyUnderTest, s: Sequence[int], s_prime: Sequence[int]) -> Fraction:
    """Exact P(h(s) == h(s')) over the whole key space."""
    sa, sb = tuple(s), tuple(s_prime)
    word_count = f.key_words_needed(max(len(sa), len(sb)))
    keyspace = 1 << (f.key_word_bits * word_count)
    if sa == sb:
        return Fraction(1)
    joint = joint_distribution(f, sa, sb)
    return Fraction(int(np.trace(joint)), keyspace)


def low_bits_family(f: FamilyUnderTest, bits: int) -> FamilyUnderTest:
    """Project a family onto its ``bits`` least significant output bits."""
    if not 1 <= bits <= f.output_bits:
        raise ValueError("projection width must be within the output width")
    mask = (1 << bits) - 1
    base_eval, base_batch = f.evaluate, f.evaluate_batch
    batch = None
    if base_batch is not None:
        batch = lambda words, chars: base_batch(words, chars) & mask
    return replace(
        f,
        family_id=f"{f.family_id}/low{bits}",
        output_bits=bits,
        evaluate=lambda kw, chars: base_eval(kw, chars) & mask,
        evaluate_batch=batch,
    )


def check_strong_universality(
    f: FamilyUnderTest,
    n: int,
    char_subset: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_BUDGET,
    keep_tables: Optional[bool] = None,
) -> UniversalityReport:
    """Certify uniformity and strong universality at string length ``n``.

    Enumerates every key against every length-n string over the character
    alphabet (all 2^char_bits characters unless ``char_subset`` narrows it).
    The verdict is exact: strongly_universal is True only when every joint
    cell of every distinct string pair carries exactly
    keyspace / 2^(2*output_bits) keys.

    Raises when strings*keys would exceed ``budget``; narrow the alphabet
    or raise the budget explicitly for bigger runs.
    """
    if n < 1:
        raise ValueError("string length must be at least 1")
    if char_subset is not None:
        alphabet = tuple(dict.fromkeys(char_subset))
        limit = 1 << f.char_bits
        if not alphabet or min(alphabet) < 0 or max(alphabet) >= limit:
            raise ValueError("character subset out of range")
    else:
        alphabet = tuple(range(1 << f.char_bits))
    strings = list(itertools.product(alphabet, repeat=n))
    word_count = f.key_words_needed(n)
    total_bits = f.key_word_bits * word_count
    if total_bits > _KEYSPACE_BITS_CAP:
        raise ValueError(
            f"key space 2^{total_bits} exceeds the 2^{_KEYSPACE_BITS_CAP} cap"
        )
    keyspace = 1 << total_bits
    if len(strings) * keyspace > budget:
        raise ValueError(
            f"{len(strings)} strings x 2^{total_bits} keys exceeds the evaluation "
            f"budget {budget}; pass char_subset or raise budget"
        )

    oc = 1 << f.output_bits
    cells = oc * oc
    uniform_expected = keyspace // oc if keyspace % oc == 0 else None
    joint_expected = keyspace // cells if keyspace % cells == 0 else None
    narrow = 2 * f.output_bits <= 8

    values = {}
    uniform = uniform_expected is not None
    for s in strings:
        vals = _value_table(f, s, word_count)
        hist = np.bincount(vals, minlength=oc)
        if uniform and (hist.min() != uniform_expected or hist.max() != uniform_expected):
            uniform = False
        values[s] = vals.astype(np.uint8) if narrow else vals.astype(np.int32)

    if keep_tables is None:
        keep_tables = len(strings) <= 32 and oc <= 16
    tables = {} if keep_tables else None

    strongly = joint_expected is not None
    max_dev = Fraction(0)
    max_coll = Fraction(0)
    worst = None
    diag_idx = np.arange(oc) * (oc + 1)
    for sa, sb in itertools.combinations(strings, 2):
        if narrow:
            combined = (values[sa] << f.output_bits) | values[sb]
        else:
            combined = (values[sa].astype(np.int64) << f.output_bits) | values[sb]
        counts = np.bincount(combined, minlength=cells)
        lo, hi = int(counts.min()), int(counts.max())
        if joint_expected is None or lo != joint_expected or hi != joint_expected:
            strongly = False
        dev = Fraction(max(abs(hi * cells - keyspace), abs(keyspace - lo * cells)), keyspace * cells)
        coll = Fraction(int(counts[diag_idx].sum()), keyspace)
        if dev > max_dev:
            max_dev = dev
            worst = (sa, sb)
        if coll > max_coll:
            max_coll = coll
        if tables is not None:
            tables[(sa, sb)] = counts.reshape(oc, oc)

    return UniversalityReport(
        family_id=f.family_id,
        params=dict(f.params),
        n=n,
        string_count=len(strings),
        keyspace=keyspace,
        output_bits=f.output_bits,
        uniform=uniform,
        strongly_universal=strongly,
        max_joint_deviation=max_dev,
        max_collision_probability=max_coll,
        worst_pair=worst,
        joint_counts=tables,
    )


# ---------------------------------------------------------------------------
# Family adapters


def multilinear_family(p: HashParams) -> FamilyUnderTest:
    mask = p.word_mask
    shift = p.shift

    def batch(words, chars):
        acc = words[0]
        for i, c in enumerate(chars):
            acc = acc + words[i + 1] * int(c)
        return (acc & mask) >> shift

    return FamilyUnderTest(
        family_id="multilinear",
        key_word_bits=p.word_bits,
        char_bits=p.char_bits,
        output_bits=p.output_bits,
        key_words_needed=lambda n: n + 1,
        evaluate=lambda kw, chars: multilinear(kw, chars, p),
        evaluate_batch=batch,
        params={"word_bits": p.word_bits, "char_bits": p.char_bits, "shift": p.shift},
    )


def multilinear_hm_family(p: HashParams) -> FamilyUnderTest:
    mask = p.word_mask
    shift = p.shift

    def batch(words, chars):
        cs = tuple(chars)
        if len(cs) % 2:
            cs += (0,)
        acc = words[0]
        for i in range(0, len(cs), 2):
            acc = acc + (words[i + 1] + int(cs[i])) * (words[i + 2] + int(cs[i + 1]))
        return (acc & mask) >> shift

    return FamilyUnderTest(
        family_id="multilinear-hm",
        key_word_bits=p.word_bits,
        char_bits=p.char_bits,
        output_bits=p.output_bits,
        key_words_needed=lambda n: n + (n % 2) + 1,
        evaluate=lambda kw, chars: multilinear_hm(kw, chars, p),
        evaluate_batch=batch,
        params={"word_bits": p.word_bits, "char_bits": p.char_bits, "shift": p.shift},
    )


def _clmul_vec_scalar(vec: np.ndarray, scalar: int) -> np.ndarray:
    r = np.zeros_like(vec)
    s = int(scalar)
    while s:
        low = s & -s
        r = r ^ (vec << (low.bit_length() - 1))
        s ^= low
    return r


def _clmul_vec_vec(a: np.ndarray, b: np.ndarray, width: int) -> np.ndarray:
    r = np.zeros_like(a)
    for j in range(width):
        r = r ^ ((a << j) * ((b >> j) & 1))
    return r


def _barrett_vec(q: np.ndarray, poly: IrreduciblePoly) -> np.ndarray:
    L = poly.char_bits
    q3 = _clmul_vec_scalar(q >> L, poly.bits) >> L
    return (q ^ _clmul_vec_scalar(q3, poly.bits)) & ((1 << L) - 1)


def gf_multilinear_family(poly: IrreduciblePoly) -> FamilyUnderTest:
    L = poly.char_bits

    def batch(words, chars):
        acc = words[0]
        for i, c in enumerate(chars):
            acc = acc ^ _clmul_vec_scalar(words[i + 1], int(c))
        return _barrett_vec(acc, poly)

    return FamilyUnderTest(
        family_id="gf-multilinear",
        key_word_bits=L,
        char_bits=L,
        output_bits=L,
        key_words_needed=lambda n: n + 1,
        evaluate=lambda kw, chars: gf_multilinear(kw, chars, poly),
        evaluate_batch=batch,
        params={"char_bits": L, "poly": hex(poly.bits)},
    )


def gf_multilinear_hm_family(poly: IrreduciblePoly) -> FamilyUnderTest:
    L = poly.char_bits

    def batch(words, chars):
        cs = tuple(chars)
        if len(cs) % 2:
            cs += (0,)
        acc = words[0]
        for i in range(0, len(cs), 2):
            acc = acc ^ _clmul_vec_vec(words[i + 1] ^ int(cs[i]), words[i + 2] ^ int(cs[i + 1]), L)
        return _barrett_vec(acc, poly)

    return FamilyUnderTest(
        family_id="gf-multilinear-hm",
        key_word_bits=L,
        char_bits=L,
        output_bits=L,
        key_words_needed=lambda n: n + (n % 2) + 1,
        evaluate=lambda kw, chars: gf_multilinear_hm(kw, chars, poly),
        evaluate_batch=batch,
        params={"char_bits": L, "poly": hex(poly.bits)},
    )


def nh_family(out_bits: int) -> FamilyUnderTest:
    half = out_bits // 2
    half_mask = (1 << half) - 1
    out_mask = (1 << out_bits) - 1

    def batch(words, chars):
        cs = tuple(chars)
        if len(cs) % 2:
            cs += (0,)
        acc = np.zeros_like(words[0])
        for i in range(0, len(cs), 2):
            acc = acc + ((words[i] + int(cs[i])) & half_mask) * ((words[i + 1] + int(cs[i + 1])) & half_mask)
        return acc & out_mask

    return FamilyUnderTest(
        family_id="nh",
        key_word_bits=half,
        char_bits=half,
        output_bits=out_bits,
        key_words_needed=lambda n: n + (n % 2),
        evaluate=lambda kw, chars: baselines.nh(kw, chars, out_bits),
        evaluate_batch=batch,
        params={"out_bits": out_bits},
    )


def folklore_family(word_bits: int, char_bits: int) -> FamilyUnderTest:
    mask = (1 << word_bits) - 1

    def batch(words, chars):
        acc = np.zeros_like(words[0])
        for i in range(0, len(chars), 2):
            acc = acc ^ (((words[i] + int(chars[i])) * (words[i + 1] + int(chars[i + 1]))) & mask)
        return acc >> char_bits

    return FamilyUnderTest(
        family_id="folklore-xor",
        key_word_bits=word_bits,
        char_bits=char_bits,
        output_bits=word_bits - char_bits,
        key_words_needed=lambda n: n + (n % 2),
        evaluate=lambda kw, chars: baselines.folklore_xor(kw, chars, word_bits, char_bits),
        evaluate_batch=batch,
        params={"word_bits": word_bits, "char_bits": char_bits},
    )


# ---------------------------------------------------------------------------
# Standard certification suite


@dataclass
class SuiteCheck:
    check_id: str
    description: str
    passed: bool
    detail: str = ""


def _params_tag(params: dict) -> str:
    order = ("word_bits", "char_bits", "shift", "out_bits", "poly")
    short = {"word_bits": "w", "char_bits": "c", "shift": "s", "out_bits": "o", "poly": ""}
    return "".join(f"{short[k]}{params[k]}" for k in order if k in params)


def _su_check(checks, reports, fam, n, expect=True, budget=DEFAULT_BUDGET):
    report = check_strong_universality(fam, n, budget=budget, keep_tables=False)
    reports.append(report)
    ok = report.strongly_universal is expect
    want = "strongly universal" if expect else "not strongly universal"
    checks.append(
        SuiteCheck(
            check_id=f"{fam.family_id}/{_params_tag(fam.params)}/n{n}",
            description=f"{fam.family_id} ({_params_tag(fam.params)}) at n={n} is {want}",
            passed=ok,
            detail=report.summary(),
        )
    )
    return report


def standard_suite(quick: bool = False) -> tuple[list[SuiteCheck], list[UniversalityReport]]:
    """Run the built-in certification battery.

    Returns (checks, reports); a check failing means the library disagrees
    with a mechanically verifiable fact and must be treated as a bug.
    ``quick`` trims the battery to a few seconds for smoke testing.
    """
    checks: list[SuiteCheck] = []
    reports: list[UniversalityReport] = []

    count, sols = count_affine_preimages(6, 5, 10, 6, 3)
    checks.append(
        SuiteCheck(
            "preimage/example",
            "worked example (a=6, b=5, c=10, 6-bit words, 3-bit chars) has "
            "solutions {2,23,34,55}",
            count == 4 and sols == {2, 23, 34, 55},
            f"count={count} solutions={sorted(sols)}",
        )
    )
    sweep_targets = [(4, 2)] if quick else [(4, 2), (6, 3), (8, 3)]
    for word_bits, char_bits in sweep_targets:
        ok, combos = affine_preimage_sweep(word_bits, char_bits)
        checks.append(
            SuiteCheck(
                f"preimage/sweep/{word_bits}-{char_bits}",
                f"solution count is 2^{char_bits - 1} for all (a,b,c) at "
                f"word_bits={word_bits}, char_bits={char_bits}",
                ok,
                f"{combos} combinations checked",
            )
        )

    p421 = HashParams(4, 2, 1)
    lengths = (1, 2) if quick else (1, 2, 3)
    for n in lengths:
        _su_check(checks, reports, multilinear_family(p421), n)
        # the half-multiplication family at n=3 pads to four characters,
        # which grows the key space past the default budget
        _su_check(checks, reports, multilinear_hm_family(p421), n, budget=1 << 26)
    if not quick:
        p632 = HashParams(6, 3, 2)
        _su_check(checks, reports, multilinear_family(p632), 2)
        _su_check(checks, reports, multilinear_hm_family(p632), 2)
        # full-character-width shift: one output bit fewer, still independent
        _su_check(checks, reports, multilinear_family(HashParams(6, 3, 3)), 2)

    poly2 = default_poly(2)
    _su_check(checks, reports, gf_multilinear_family(poly2), 2)
    _su_check(checks, reports, gf_multilinear_hm_family(poly2), 2)

    folk = folklore_family(6, 3)
    report = _su_check(checks, reports, folk, 2, expect=False)
    coll = collision_probability(folk, (0, 0), (2, 6))
    checks.append(
        SuiteCheck(
            "folklore/576-4096",
            "strings (0,0) and (2,6) collide on exactly 576 of 4096 key pairs",
            coll == Fraction(576, 4096),
            f"collision probability {coll}",
        )
    )
    checks.append(
        SuiteCheck(
            "folklore/exceeds-universal",
            "xor-of-products collision probability exceeds the universal bound 1/8",
            report.max_collision_probability > Fraction(1, 8),
            f"max {report.max_collision_probability}",
        )
    )

    nh6 = nh_family(6)
    dist = output_distribution(nh6, (0, 0))
    checks.append(
        SuiteCheck(
            "nh/zero-prob",
            "single-block zero-output probability is exactly 15/64",
            Fraction(int(dist[0]), 64) == Fraction(15, 64),
            f"count {int(dist[0])}/64",
        )
    )
    nh_report = check_strong_universality(nh6, 2, keep_tables=False)
    reports.append(nh_report)
    checks.append(
        SuiteCheck(
            "nh/not-uniform",
            "NH at out_bits=6 fails uniformity",
            not nh_report.uniform,
            nh_report.summary(),
        )
    )
    low2 = low_bits_family(nh6, 2)
    strings = list(itertools.product(range(8), repeat=2))
    tables = {s: _value_table(low2, s, 2) for s in strings}
    always = sum(
        1 for sa, sb in itertools.combinations(strings, 2) if np.array_equal(tables[sa], tables[sb])
    )
    checks.append(
        SuiteCheck(
            "nh/low-bit-pairs",
            "exactly 96 distinct string pairs collide with probability 1 on the low 2 bits",
            always == 96,
            f"{always} pairs",
        )
    )

    widths = (2, 3) if quick else (2, 3, 8)
    barrett_ok = True
    checked = 0
    for L in widths:
        poly = default_poly(L)
        for q in range(1 << (2 * L - 1)):
            checked += 1
            if barrett_reduce(q, poly) != poly_mod_reference(q, poly):
                barrett_ok = False
                break
    checks.append(
        SuiteCheck(
            "barrett/exhaustive",
            f"Barrett reduction matches long division exhaustively at widths {widths}",
            barrett_ok,
            f"{checked} operands checked",
        )
    )

    ml = multilinear_family(p421)
    rep = check_strong_universality(ml, 2, keep_tables=True)
    consistent = True
    for (sa, sb), table in rep.joint_counts.items():
        if not np.array_equal(table.sum(axis=1), output_distribution(ml, sa)):
            consistent = False
        if not np.array_equal(table.sum(axis=0), output_distribution(ml, sb)):
            consistent = False
        if int(table.sum()) != rep.keyspace:
            consistent = False
    checks.append(
        SuiteCheck(
            "report/marginals",
            "joint-table marginals reproduce the per-string uniformity counts",
            consistent,
            f"{len(rep.joint_counts)} pairs checked",
        )
    )

    return checks, reports


def suite_csv(reports: Sequence[UniversalityReport]) -> str:
    """Deterministic CSV export of certification reports."""
    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in reports)
    return "\n".join(lines) + "\n"
