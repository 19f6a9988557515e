"""Command-line interface: benchmark, certification suite, sizing curves."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from . import sizing, verifier

_DEFAULT_INPUT_BITS = "64,256,1024,4096,16384,65536,262144,1048576"


def _cmd_bench(args) -> int:
    config = bench_mod.BenchConfig(
        family=args.family,
        char_bits=args.char_bits,
        length=args.length,
        trials=args.trials,
        repetitions=args.repetitions,
        seed=args.seed,
        timer=args.timer,
        clock_ghz=args.clock_ghz,
    )
    run = bench_mod.run_bench(config)
    for warning in run.warnings:
        print(f"WARNING: {warning}", file=sys.stderr)
    print(
        f"family={config.family} char_bits={config.char_bits} "
        f"length={config.length} trials={config.trials} seed={config.seed}"
    )
    for row in run.rows:
        cyc = f"  {row.cycles_per_byte:8.3f} cyc/B" if row.cycles_per_byte is not None else ""
        print(
            f"  rep {row.repetition}: {row.ns_per_byte:10.3f} ns/B{cyc}"
            f"  checksum {row.checksum:016x}"
        )
    if len(run.rows) > 1:
        print(f"  ns/B spread across repetitions (CoV): {run.variation():.1%}")
    if args.csv:
        Path(args.csv).write_text(bench_mod.rows_to_csv(run.rows))
        print(f"wrote {args.csv}")
    return 0


def _cmd_verify(args) -> int:
    checks, reports = verifier.standard_suite(quick=args.quick)
    failed = 0
    for check in checks:
        tag = "PASS" if check.passed else "FAIL"
        if not check.passed:
            failed += 1
        detail = f"  [{check.detail}]" if check.detail else ""
        print(f"{tag}  {check.check_id:28s} {check.description}{detail}")
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    if args.csv:
        Path(args.csv).write_text(verifier.suite_csv(reports))
        print(f"wrote {args.csv}")
    return 1 if failed else 0


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _cmd_sizing(args) -> int:
    if args.curve == "stinson":
        if args.word_sizes.strip().lower() == "unconstrained":
            allowed = None
        else:
            allowed = tuple(_parse_int_list(args.word_sizes))
        csv_text = sizing.stinson_ratio_csv(
            _parse_int_list(args.input_bits), args.hash_bits, allowed
        )
    else:
        widths = range(args.min_char_bits, args.max_char_bits + 1)
        csv_text = sizing.cost_curve_csv(args.hash_bits, args.cost_exponent, widths)
    if args.csv:
        Path(args.csv).write_text(csv_text)
        print(f"wrote {args.csv}")
    else:
        sys.stdout.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suhash",
        description="Strongly universal string hashing: benchmark, certify, size.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="time one hash family on a deterministic input")
    b.add_argument("--family", required=True, choices=bench_mod.FAMILY_NAMES)
    b.add_argument("--char-bits", type=int, default=32, choices=(16, 32))
    b.add_argument("--length", type=int, default=1024, help="characters per string")
    b.add_argument("--trials", type=int, default=50, help="hashes per timed repetition")
    b.add_argument("--repetitions", type=int, default=3)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--timer", choices=("wall", "cycles"), default="wall")
    b.add_argument("--clock-ghz", type=float, default=None, help="convert ns to estimated cycles")
    b.add_argument("--csv", default=None, help="also write rows to this CSV file")
    b.set_defaults(func=_cmd_bench)

    v = sub.add_parser("verify", help="run the exhaustive certification suite")
    v.add_argument("--quick", action="store_true", help="small smoke subset")
    v.add_argument("--csv", default=None, help="write universality reports to this CSV file")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sizing", help="emit word-size economics curves as CSV")
    curves = s.add_subparsers(dest="curve", required=True)

    st = curves.add_parser("stinson", help="key-bit consumption vs the information floor")
    st.add_argument("--hash-bits", type=int, default=32)
    st.add_argument(
        "--input-bits",
        default=_DEFAULT_INPUT_BITS,
        help="comma-separated input sizes in bits",
    )
    st.add_argument(
        "--word-sizes",
        default="unconstrained",
        help="comma-separated allowed word sizes, or 'unconstrained'",
    )
    st.add_argument("--csv", default=None)
    st.set_defaults(func=_cmd_sizing)

    co = curves.add_parser("cost", help="modeled multiplication cost per hashed bit")
    co.add_argument("--hash-bits", type=int, default=32)
    co.add_argument("--cost-exponent", type=float, default=1.5)
    co.add_argument("--min-char-bits", type=int, default=1)
    co.add_argument("--max-char-bits", type=int, default=200)
    co.add_argument("--csv", default=None)
    co.set_defaults(func=_cmd_sizing)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
