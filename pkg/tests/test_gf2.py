import random

import pytest

from suhash import reference
from suhash.gf2 import (
    IrreduciblePoly,
    barrett_reduce,
    clmul,
    clmul_via_int,
    default_poly,
    gf_multilinear,
    gf_multilinear_hm,
    is_irreducible,
    poly_mod_reference,
)
from suhash.keymaterial import generate_keys
from suhash.bench import generate_input

# Frozen from the schoolbook-product / long-division oracle:
# keys generate_keys(42, 1025, 32), input generate_input(7, 1024, 32).
GOLDEN_GF_MULTILINEAR = 0x72E66DF8
GOLDEN_GF_MULTILINEAR_HM = 0xAA051371


def test_clmul_zero_and_identity():
    assert clmul(0xDEADBEEF, 0) == 0
    assert clmul(0, 0xDEADBEEF) == 0
    assert clmul(0xDEADBEEF, 1) == 0xDEADBEEF


def test_clmul_worked_example():
    # (x^2+x+1)(x+1) == x^3+1
    assert clmul(0b111, 0b11) == 0b1001


def test_clmul_matches_schoolbook_exhaustively_small():
    for a in range(64):
        for b in range(64):
            assert clmul(a, b) == reference.clmul_schoolbook(a, b)


def test_clmul_matches_schoolbook_random_wide():
    rng = random.Random(3)
    for _ in range(2000):
        a, b = rng.getrandbits(32), rng.getrandbits(32)
        assert clmul(a, b) == reference.clmul_schoolbook(a, b)


def test_clmul_commutes_and_distributes():
    # commutativity exhaustively over 8-bit operands, then random wide checks
    for a in range(256):
        for b in range(a, 256):
            assert clmul(a, b) == clmul(b, a)
    rng = random.Random(4)
    for _ in range(1000):
        a, b, c = (rng.getrandbits(32) for _ in range(3))
        assert clmul(a, b) == clmul(b, a)
        assert clmul(a, b ^ c) == clmul(a, b) ^ clmul(a, c)
        assert clmul(a, 1) == a


def test_clmul_rejects_negative_operands():
    with pytest.raises(ValueError):
        clmul(-1, 2)
    with pytest.raises(ValueError):
        clmul_via_int(2, -1)


def test_accelerated_clmul_matches_portable():
    for a in range(256):
        for b in range(256):
            assert clmul_via_int(a, b) == clmul(a, b)
    rng = random.Random(5)
    for bits in (32, 64):
        for _ in range(5000):
            a, b = rng.getrandbits(bits), rng.getrandbits(bits)
            assert clmul_via_int(a, b) == clmul(a, b)
    with pytest.raises(ValueError):
        clmul_via_int(1 << 64, 1)


@pytest.mark.parametrize("width", [2, 3, 8, 16, 32])
def test_default_poly_shape(width):
    poly = default_poly(width)
    assert poly.char_bits == width
    assert poly.bits.bit_length() - 1 == width
    tail = poly.bits ^ (1 << width)
    assert tail.bit_length() - 1 <= width // 2


def test_default_poly_known_bit_patterns():
    assert default_poly(32).bits == (1 << 32) | (1 << 7) | (1 << 6) | (1 << 2) | 1
    assert default_poly(3).bits == 0b1011
    assert default_poly(2).bits == 0b111


@pytest.mark.parametrize("width", [2, 3, 8, 16])
def test_default_poly_is_irreducible_brute_force(width):
    assert is_irreducible(default_poly(width).bits)


def test_is_irreducible_spots_factors():
    assert not is_irreducible(0b110)  # x^2 + x = x(x+1)
    assert not is_irreducible(0b101)  # x^2 + 1 = (x+1)^2
    assert is_irreducible(0b10)  # x
    assert is_irreducible(0b111)


def test_default_poly_unsupported_width():
    with pytest.raises(ValueError, match="supported"):
        default_poly(7)


def test_irreducible_poly_validation():
    with pytest.raises(ValueError, match="monic"):
        IrreduciblePoly(bits=0b0111, char_bits=3)  # degree 2, not 3
    with pytest.raises(ValueError, match="tail"):
        IrreduciblePoly(bits=0b11011, char_bits=4)  # tail degree 3 > 2
    IrreduciblePoly(bits=0b10011, char_bits=4)  # tail degree 1: fine


def test_barrett_trivial_cases():
    p = default_poly(3)
    assert barrett_reduce(0, p) == 0
    assert barrett_reduce(p.bits, p) == 0
    assert barrett_reduce(0b11011, p) == 0b110


def test_poly_mod_reference_matches_barrett_cases():
    p = default_poly(3)
    assert poly_mod_reference(0, p) == 0
    assert poly_mod_reference(p.bits, p) == 0
    assert poly_mod_reference(0b11011, p) == 0b110


def test_poly_mod_leaves_reduced_operands_alone():
    p = default_poly(8)
    for q in range(256):
        assert poly_mod_reference(q, p) == q


@pytest.mark.parametrize("width", [2, 3, 8])
def test_barrett_equals_long_division_exhaustively(width):
    poly = default_poly(width)
    for q in range(1 << (2 * width - 1)):
        assert barrett_reduce(q, poly) == poly_mod_reference(q, poly)


def test_barrett_equals_long_division_random_32():
    poly = default_poly(32)
    rng = random.Random(6)
    for _ in range(20000):
        q = rng.getrandbits(63)
        assert barrett_reduce(q, poly) == poly_mod_reference(q, poly)


def test_barrett_rejects_overwide_operand():
    with pytest.raises(ValueError):
        barrett_reduce(1 << 5, default_poly(3))


def test_gf_multilinear_trivial_cases():
    p = default_poly(3)
    # identity key, already reduced: the character comes straight through
    assert gf_multilinear((0, 1), (5,), p) == 5
    # zero string: first word survives (already below the modulus)
    keys = generate_keys(11, 5, 32)
    assert gf_multilinear(keys, (0,) * 4, default_poly(32)) == keys.words[0]


def test_gf_multilinear_golden():
    keys = generate_keys(42, 1025, 32)
    s = generate_input(7, 1024, 32)
    assert gf_multilinear(keys, s, default_poly(32)) == GOLDEN_GF_MULTILINEAR


def test_gf_multilinear_hm_golden():
    keys = generate_keys(42, 1025, 32)
    s = generate_input(7, 1024, 32)
    assert gf_multilinear_hm(keys, s, default_poly(32)) == GOLDEN_GF_MULTILINEAR_HM


def test_gf_hm_zero_keys_reduce_single_product():
    p = default_poly(3)
    # x^3+1 mod x^3+x+1 == x
    assert gf_multilinear_hm((0, 0, 0), (0b111, 0b11), p) == 0b010
    p32 = default_poly(32)
    a, b = 0x9E3779B9, 0x7F4A7C15
    assert gf_multilinear_hm((0, 0, 0), (a, b), p32) == barrett_reduce(clmul(a, b), p32)


def test_gf_hm_block_addition_is_xor_not_integer_addition():
    p = default_poly(3)
    keys = (0, 0b101, 0b011)
    s = (0b110, 0b111)
    expected = barrett_reduce(clmul(0b101 ^ 0b110, 0b011 ^ 0b111), p)
    assert gf_multilinear_hm(keys, s, p) == expected


def test_gf_families_match_slow_oracles_random():
    rng = random.Random(7)
    p = default_poly(32)
    for _ in range(200):
        n = rng.randrange(0, 9)
        words = tuple(rng.getrandbits(32) for _ in range(n + 2))
        chars = tuple(rng.getrandbits(32) for _ in range(n))
        assert gf_multilinear(words, chars, p) == reference.gf_multilinear_slow(words, chars, p)
        assert gf_multilinear_hm(words, chars, p) == reference.gf_multilinear_hm_slow(
            words, chars, p
        )


def test_gf_accepts_accelerated_multiplier():
    rng = random.Random(8)
    p = default_poly(32)
    words = tuple(rng.getrandbits(32) for _ in range(9))
    chars = tuple(rng.getrandbits(32) for _ in range(8))
    assert gf_multilinear(words, chars, p, mul=clmul_via_int) == gf_multilinear(words, chars, p)
    assert gf_multilinear_hm(words, chars, p, mul=clmul_via_int) == gf_multilinear_hm(
        words, chars, p
    )


def test_gf_odd_length_zero_pads():
    rng = random.Random(9)
    p = default_poly(32)
    words = tuple(rng.getrandbits(32) for _ in range(6))
    assert gf_multilinear_hm(words, (1, 2, 3), p) == gf_multilinear_hm(words, (1, 2, 3, 0), p)


def test_gf_errors():
    p = default_poly(3)
    with pytest.raises(ValueError, match="key words"):
        gf_multilinear((1,), (2, 3), p)
    with pytest.raises(ValueError, match="range"):
        gf_multilinear((1, 2), (8,), p)


def test_gf_key_bit_economy():
    # hashing n characters: (n+1) L-bit field words vs (n+1) K-bit ring words
    from suhash.verifier import gf_multilinear_family, multilinear_family
    from suhash.multilinear import PARAMS_64_32

    n = 1024
    gf_fam = gf_multilinear_family(default_poly(32))
    ring_fam = multilinear_family(PARAMS_64_32)
    gf_bits = gf_fam.key_words_needed(n) * gf_fam.key_word_bits
    ring_bits = ring_fam.key_words_needed(n) * ring_fam.key_word_bits
    assert gf_bits == (n + 1) * 32
    assert ring_bits == (n + 1) * 64
    assert 2 * gf_bits == ring_bits
