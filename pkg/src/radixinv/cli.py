"""Command-line front end: invert, verify, explain, bench.

Exit codes: 0 ok, 1 bad arguments, 2 not invertible, 3 verification failed.
"""

from __future__ import annotations

import argparse
import sys

from radixinv import bench
from radixinv.errors import DomainError, InvalidModulus, NotInvertible
from radixinv.mpcore import ONE, Nat, Radix, mod_pow_of_radix, mul
from radixinv.power_inverse import (
    ALGORITHM_CHOICES,
    InverseTrace,
    invert,
    koc_inverse,
    prefix_inverses,
    radix_inverse,
    reciprocal_power_mod_a,
)

EXIT_OK, EXIT_PARSE, EXIT_NOT_INVERTIBLE, EXIT_VERIFY_FAIL = 0, 1, 2, 3
EXPLAIN_MAX_K = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _number(text: str) -> Nat:
    try:
        return Nat.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _radix(text: str) -> Radix:
    if text.strip().lower() == "limb":
        return Radix.limb_base()
    try:
        return Radix(int(_number(text)))
    except InvalidModulus as exc:
        raise UsageError(str(exc)) from None


def _count(text: str, limit: int | None = None) -> int:
    try:
        k = int(text, 0)
    except ValueError:
        raise UsageError(f"invalid count: {text!r}") from None
    if k < 1:
        raise UsageError("k must be >= 1")
    if limit is not None and k > limit:
        raise UsageError(f"k must be <= {limit} here")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="radixinv", description="Digit-serial inverses modulo n**k.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def modulus_args(sp):
        sp.add_argument("--radix", "-n", required=True, help='radix n (decimal, 0x-hex, or "limb" for 2**64)')
        sp.add_argument("--k", "-k", required=True, help="number of radix-n digits")

    sp = sub.add_parser("invert", help="print a^-1 mod n**k in hex")
    sp.add_argument("a")
    modulus_args(sp)
    sp.add_argument("--algorithm", choices=ALGORITHM_CHOICES, default="auto")

    sp = sub.add_parser("verify", help="check a*x = 1 mod n**k")
    sp.add_argument("a")
    sp.add_argument("x")
    modulus_args(sp)

    sp = sub.add_parser("explain", help="print the per-digit recurrence")
    sp.add_argument("a")
    modulus_args(sp)
    sp.add_argument("--koc", action="store_true", help="trace the signed b_i loop instead of the carries")

    sp = sub.add_parser("bench", help="time the comparators")
    sp.add_argument("--sizes", default=",".join(map(str, bench.DEFAULT_SIZES)))
    sp.add_argument("--reps", type=int, default=1000)
    sp.add_argument("--warmup", type=int, default=100)
    sp.add_argument("--seed", type=lambda s: int(s, 0), default=bench.BenchConfig.seed)
    sp.add_argument("--pool", type=int, default=16)
    sp.add_argument("--algorithms", default=",".join(bench.ALGORITHMS))
    sp.add_argument("--format", choices=("csv", "markdown"), default="csv")
    sp.add_argument("--output", "-o", help="write here instead of stdout")
    sp.add_argument("--verbose", "-v", action="store_true", help="progress on stderr")
    return p


def cmd_invert(args) -> int:
    a, r, k = _number(args.a), _radix(args.radix), _count(args.k)
    x = invert(a, r, k, args.algorithm)
    print(x.to_hex())
    return EXIT_OK


def cmd_verify(args) -> int:
    a, x, r, k = _number(args.a), _number(args.x), _radix(args.radix), _count(args.k)
    if mod_pow_of_radix(mul(a, x), r, k) == ONE:
        print("OK")
        return EXIT_OK
    print("FAIL")
    return EXIT_VERIFY_FAIL


def _digit_string(trace: InverseTrace) -> str:
    return "(" + " ".join(str(d) for d in reversed(trace.digits)) + f")_{trace.radix}"


def cmd_explain(args) -> int:
    a, r, k = _number(args.a), _radix(args.radix), _count(args.k, EXPLAIN_MAX_K)
    if args.koc:
        _, trace = koc_inverse(a, r, k, keep_trace=True)
        label = "b_i"
    else:
        _, trace = radix_inverse(a, r, k, keep_trace=True)
        label = "T_i"
    prefixes = prefix_inverses(trace)
    recips = {}
    if args.koc and trace.a > ONE:
        recips = {s: reciprocal_power_mod_a(trace, s) for s in range(1, k + 1)}

    print(f"a = {int(trace.a)}  n = {r}  k = {k}  c = a^-1 mod n = {trace.c}")
    cols = ["i", "X_i", label, "a^-1 mod n^(i+1)"]
    if recips:
        cols.append("(n^i)^-1 mod a")
    rows = []
    n_rows = len(trace.intermediates)
    for i in range(n_rows):
        row = [
            str(i),
            str(trace.digits[i]) if i < k else "",
            str(int(trace.intermediates[i])),
            str(int(prefixes[i])) if i < k else "",
        ]
        if recips:
            row.append(str(int(recips[i])) if i in recips else "")
        rows.append(row)
    widths = [max(len(c), *(len(row[j]) for row in rows)) for j, c in enumerate(cols)]
    print("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for row in rows:
        print("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    print(f"digits {_digit_string(trace)}")
    print(f"x = {trace.value.to_hex()}")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.sizes.split(",") if s.strip())
        algorithms = tuple(s.strip() for s in args.algorithms.split(",") if s.strip())
        cfg = bench.BenchConfig(
            sizes=sizes, reps=args.reps, warmup=args.warmup, seed=args.seed,
            pool=args.pool, algorithms=algorithms,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    progress = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    records = bench.run_suite(cfg, progress)
    text = bench.emit(records, args.format, bench.metadata(cfg))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"invert": cmd_invert, "verify": cmd_verify, "explain": cmd_explain, "bench": cmd_bench}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"radixinv: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInvertible as exc:
        print(f"not invertible: gcd={exc.gcd}", file=sys.stderr)
        return EXIT_NOT_INVERTIBLE
    except (InvalidModulus, DomainError) as exc:
        print(f"radixinv: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
