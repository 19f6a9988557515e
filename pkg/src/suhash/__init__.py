"""Strongly universal string hashing.

Multilinear hash families over the ring of integers mod 2^K and over
binary finite fields, the random key material they consume, exhaustive
small-parameter certification of their guarantees, comparison baselines,
word-size economics, and a benchmark harness.

Quick start::

    from suhash import PARAMS_64_32, generate_keys, multilinear_hm

    keys = generate_keys(seed=42, count=1025, word_bits=64)
    value = multilinear_hm(keys, [0x1234, 0x5678], PARAMS_64_32)

All hashing functions are pure and all data types immutable, so
everything here is safe to share across threads.
"""

from .baselines import NhParams, folklore_xor, nh, rabin_karp, sax
from .gf2 import (
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
from .keymaterial import (
    KeyBuffer,
    KeyFormatError,
    KeySpec,
    extend_keys,
    generate_keys,
    load_keys,
    save_keys,
)
from .multilinear import (
    PARAMS_32_16,
    PARAMS_64_32,
    CharString,
    HashParams,
    encode_variable,
    multilinear,
    multilinear_2by2,
    multilinear_hm,
    reference_multilinear,
)

__version__ = "0.1.0"

__all__ = [
    "CharString",
    "HashParams",
    "IrreduciblePoly",
    "KeyBuffer",
    "KeyFormatError",
    "KeySpec",
    "NhParams",
    "PARAMS_32_16",
    "PARAMS_64_32",
    "barrett_reduce",
    "clmul",
    "clmul_via_int",
    "default_poly",
    "encode_variable",
    "extend_keys",
    "folklore_xor",
    "generate_keys",
    "gf_multilinear",
    "gf_multilinear_hm",
    "is_irreducible",
    "load_keys",
    "multilinear",
    "multilinear_2by2",
    "multilinear_hm",
    "nh",
    "poly_mod_reference",
    "rabin_karp",
    "reference_multilinear",
    "save_keys",
    "sax",
]
