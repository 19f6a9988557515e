"""End-to-end acceptance battery.

One test per criterion; each prints a PASS/FAIL line (visible with
``pytest -s``) and asserts exact expected values.  Counts and
probabilities are exact integer/rational comparisons, never tolerances,
except where a criterion itself states a percentage band.
"""

import itertools
import random
import time
from fractions import Fraction

import numpy as np

from suhash import reference
from suhash.baselines import folklore_xor, nh
from suhash.bench import BenchConfig, FAMILY_NAMES, run_bench
from suhash.gf2 import barrett_reduce, clmul, clmul_via_int, default_poly, poly_mod_reference
from suhash.multilinear import (
    PARAMS_64_32,
    HashParams,
    multilinear,
    multilinear_2by2,
    multilinear_hm,
)
from suhash.verifier import (
    check_strong_universality,
    collision_probability,
    count_affine_preimages,
    folklore_family,
    gf_multilinear_family,
    gf_multilinear_hm_family,
    low_bits_family,
    multilinear_family,
    multilinear_hm_family,
    nh_family,
    affine_preimage_sweep,
    _value_table,
)


def _report(criterion: str, ok: bool, detail: str = ""):
    print(f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def test_criterion_1_solution_count_sweep():
    start = time.perf_counter()
    count, sols = count_affine_preimages(6, 5, 10, 6, 3)
    example_ok = count == 4 and sols == {2, 23, 34, 55}
    sweeps = {}
    for K, L in ((4, 2), (6, 3), (8, 3)):
        ok, combos = affine_preimage_sweep(K, L)
        sweeps[(K, L)] = (ok, combos)
    elapsed = time.perf_counter() - start
    all_ok = example_ok and all(ok for ok, _ in sweeps.values()) and elapsed < 10
    detail = (
        f"example solutions {sorted(sols)}; "
        + "; ".join(f"({K},{L}): {c} combos" for (K, L), (_, c) in sweeps.items())
        + f"; {elapsed:.1f}s"
    )
    _report("criterion 1: solution-count sweep", all_ok, detail)


def test_criterion_2_strong_universality_certification():
    start = time.perf_counter()
    p421 = HashParams(4, 2, 1)
    p632 = HashParams(6, 3, 2)
    runs = []
    for n in (1, 2, 3):
        runs.append((f"multilinear K=4 n={n}", check_strong_universality(
            multilinear_family(p421), n, keep_tables=False)))
        runs.append((f"multilinear-hm K=4 n={n}", check_strong_universality(
            multilinear_hm_family(p421), n, budget=1 << 26, keep_tables=False)))
    runs.append(("multilinear K=6 n=2", check_strong_universality(
        multilinear_family(p632), 2, keep_tables=False)))
    runs.append(("multilinear-hm K=6 n=2", check_strong_universality(
        multilinear_hm_family(p632), 2, keep_tables=False)))
    elapsed = time.perf_counter() - start
    flat = all(r.strongly_universal and r.max_joint_deviation == 0 for _, r in runs)
    ok = flat and elapsed < 60
    detail = f"{len(runs)} certifications, all joint cells exact; {elapsed:.1f}s"
    if not flat:
        detail = "; ".join(name for name, r in runs if not r.strongly_universal)
    _report("criterion 2: strong-universality certification", ok, detail)


def test_criterion_3_folklore_falsification():
    hits = sum(
        1
        for kw in itertools.product(range(64), repeat=2)
        if folklore_xor(kw, (0, 0), 6, 3) == folklore_xor(kw, (2, 6), 6, 3)
    )
    prob = collision_probability(folklore_family(6, 3), (0, 0), (2, 6))
    ok = hits == 576 and prob == Fraction(576, 4096)
    _report("criterion 3: folklore falsification", ok, f"{hits}/4096 collisions")


def test_criterion_4_nh_negative_controls():
    zero = sum(1 for kw in itertools.product(range(8), repeat=2) if nh(kw, (0, 0), 6) == 0)
    fam = low_bits_family(nh_family(6), 2)
    strings = list(itertools.product(range(8), repeat=2))
    tables = {s: _value_table(fam, s, 2) for s in strings}
    certain = sum(
        1
        for sa, sb in itertools.combinations(strings, 2)
        if np.array_equal(tables[sa], tables[sb])
    )
    ok = Fraction(zero, 64) == Fraction(15, 64) and certain == 96
    _report(
        "criterion 4: NH negative controls",
        ok,
        f"zero-output {zero}/64; {certain} certain low-bit collisions",
    )


def test_criterion_5_barrett_correctness():
    mismatches = 0
    checked = 0
    for width in (2, 3, 8):
        poly = default_poly(width)
        for q in range(1 << (2 * width - 1)):
            checked += 1
            if barrett_reduce(q, poly) != poly_mod_reference(q, poly):
                mismatches += 1
    poly32 = default_poly(32)
    assert poly32.bits == (1 << 32) | (1 << 7) | (1 << 6) | (1 << 2) | 1
    rng = random.Random(0xBA11E7)
    for _ in range(100_000):
        q = rng.getrandbits(63)
        checked += 1
        if barrett_reduce(q, poly32) != poly_mod_reference(q, poly32):
            mismatches += 1
    _report(
        "criterion 5: Barrett vs long division",
        mismatches == 0,
        f"{checked} operands, {mismatches} mismatches",
    )


def test_criterion_6_gf_family_certification():
    poly = default_poly(2)
    rep_ml = check_strong_universality(gf_multilinear_family(poly), 2, keep_tables=True)
    rep_hm = check_strong_universality(gf_multilinear_hm_family(poly), 2, keep_tables=True)
    cells_ok = all(
        np.all(table == 4)
        for rep in (rep_ml, rep_hm)
        for table in rep.joint_counts.values()
    )
    ok = rep_ml.strongly_universal and rep_hm.strongly_universal and cells_ok
    _report(
        "criterion 6: field-family certification",
        ok,
        f"keyspace {rep_ml.keyspace}, every joint cell = 4",
    )


def test_criterion_7_family_equivalences():
    rng = random.Random(0xE9)
    mismatch_2by2 = mismatch_oracle = 0
    for _ in range(10_000):
        n = 2 * rng.randrange(0, 9)
        words = tuple(rng.getrandbits(64) for _ in range(n + 1))
        chars = tuple(rng.getrandbits(32) for _ in range(n))
        plain = multilinear(words, chars, PARAMS_64_32)
        if multilinear_2by2(words, chars, PARAMS_64_32) != plain:
            mismatch_2by2 += 1
        if plain != reference.multilinear_exact(words, chars, 64, 32):
            mismatch_oracle += 1
        if multilinear_hm(words, chars, PARAMS_64_32) != reference.multilinear_hm_exact(
            words, chars, 64, 32
        ):
            mismatch_oracle += 1
    # no hardware carry-less instruction is reachable from this runtime; the
    # feature-gated accelerated path (integer-multiplier strands) stands in
    # and must agree bit-for-bit with the portable loop
    mismatch_clmul = 0
    for _ in range(100_000):
        a, b = rng.getrandbits(32), rng.getrandbits(32)
        if clmul_via_int(a, b) != clmul(a, b):
            mismatch_clmul += 1
    for _ in range(10_000):
        a, b = rng.getrandbits(64), rng.getrandbits(64)
        if clmul_via_int(a, b) != clmul(a, b):
            mismatch_clmul += 1
    ok = mismatch_2by2 == mismatch_oracle == mismatch_clmul == 0
    _report(
        "criterion 7: family equivalences",
        ok,
        f"2by2 {mismatch_2by2}, oracle {mismatch_oracle}, clmul {mismatch_clmul} mismatches",
    )


def test_criterion_8_sizing_reproductions():
    from suhash.sizing import optimal_char_bits_cost, stinson_ratio_rows

    cost_ok = optimal_char_bits_cost(32, 1.5) == 62
    ratio64 = stinson_ratio_rows([10**6], 32, (8, 16, 32, 64))[0][4]
    ratio128 = stinson_ratio_rows([10**6], 32, (8, 16, 32, 64, 128))[0][4]
    free = stinson_ratio_rows([10**6], 32, None)[0][4]
    ok = (
        cost_ok
        and abs(ratio64 - 64 / 33) / (64 / 33) < 0.01
        and abs(ratio128 - 128 / 97) / (128 / 97) < 0.01
        and free < 1.05
    )
    _report(
        "criterion 8: sizing reproductions",
        ok,
        f"cost opt 62; ratios {ratio64:.4f} vs 64/33, {ratio128:.4f} vs 128/97, "
        f"unconstrained {free:.4f}",
    )


def test_criterion_9_benchmark_harness():
    start = time.perf_counter()
    checksums = {}
    for family in FAMILY_NAMES:
        config = BenchConfig(family=family, char_bits=32, length=1024, trials=3, repetitions=3)
        run = run_bench(config)
        reps = {row.checksum for row in run.rows}
        assert len(run.rows) == 3
        checksums[family] = reps
    elapsed = time.perf_counter() - start
    stable = all(len(reps) == 1 for reps in checksums.values())
    pair_equal = checksums["multilinear"] == checksums["multilinear-2x2"]
    ok = stable and pair_equal and elapsed < 60
    _report(
        "criterion 9: benchmark harness",
        ok,
        f"9 families at n=1024; checksums repetition-stable; "
        f"multilinear == 2x2; {elapsed:.1f}s",
    )
