"""Timing harness comparing inversion modulo 2**bits across four loops.

Comparators, keyed by the names used in the output:

``radix_limb_base``
    carry recurrence with n = 2**64, seeded by the word Hensel inverse
``hensel_fullwidth_newton``
    Newton lifting ``x <- x*(2 - a*x)`` carried past one word with
    truncated multiprecision products, doubling precision each step
``bitwise_koc``
    binary signed p-adic loop, one bit per step
``bitwise_radix``
    binary carry loop, one bit per step

Every timed result is compared against an output whose product with the
input was checked to be 1 modulo 2**bits; a mismatch aborts the run.
"""

from __future__ import annotations

import csv
import hashlib
import io
import platform
import random
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from radixinv.digit_inverse import word_inverse_pow2_hensel
from radixinv.mpcore import (
    LIMB_BITS,
    ONE,
    Nat,
    Radix,
    _add,
    _mul_low,
    _sub,
    mod_pow_of_radix,
    mul,
)
from radixinv.power_inverse import (
    koc_inverse_pow2_bitwise,
    radix_inverse,
    radix_inverse_pow2_bitwise,
)

ALGORITHMS = ("radix_limb_base", "hensel_fullwidth_newton", "bitwise_koc", "bitwise_radix")
DEFAULT_SIZES = (128, 256, 512, 1024, 2048, 3072, 4096)
CSV_FIELDS = ("algorithm", "modulus_bits", "reps", "median_ns", "mean_ns")

LIMB = Radix.limb_base()


class BenchError(RuntimeError):
    """A comparator returned a wrong inverse."""


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    modulus_bits: int
    reps: int
    median_ns: float
    mean_ns: float


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    reps: int = 1000
    warmup: int = 100
    seed: int = 0x5EED
    # distinct inputs per size, cycled through the timed calls
    pool: int = 16
    algorithms: tuple[str, ...] = ALGORITHMS

    def __post_init__(self):
        for s in self.sizes:
            if s <= 0 or s % LIMB_BITS:
                raise ValueError(f"size {s} is not a positive multiple of {LIMB_BITS}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.warmup < 0 or self.pool < 1:
            raise ValueError("warmup must be >= 0 and pool >= 1")
        for alg in self.algorithms:
            if alg not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {alg!r}")


def hensel_fullwidth_newton(a: Nat, k: int) -> Nat:
    """Inverse of odd ``a`` modulo ``2**(64*k)`` by multiprecision Newton lifting."""
    av = list(mod_pow_of_radix(a, LIMB, k).limbs)
    x = [word_inverse_pow2_hensel(av[0])]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        ax = _mul_low(av, x, prec)
        # 2 - a*x mod 2**(64*prec)
        e = _sub(_add([0] * prec + [1], [2]), ax)[:prec]
        x = _mul_low(x, e, prec)
    return Nat._wrap(x)


def make_inputs(bits: int, count: int, seed: int) -> list[Nat]:
    """Odd full-length inputs; identical for identical (bits, count, seed)."""
    rng = random.Random(f"{seed}/{bits}")
    top = 1 << (bits - 1)
    return [Nat.from_int(rng.getrandbits(bits) | top | 1) for _ in range(count)]


def inputs_digest(cfg: BenchConfig) -> str:
    h = hashlib.sha256()
    for bits in cfg.sizes:
        for a in make_inputs(bits, cfg.pool, cfg.seed):
            h.update(a.to_hex().encode())
    return h.hexdigest()[:16]


def _runner(name: str, bits: int) -> Callable[[Nat], Nat]:
    k = bits // LIMB_BITS
    if name == "radix_limb_base":
        return lambda a: radix_inverse(a, LIMB, k)[0]
    if name == "hensel_fullwidth_newton":
        return lambda a: hensel_fullwidth_newton(a, k)
    if name == "bitwise_koc":
        return lambda a: koc_inverse_pow2_bitwise(a, bits)
    if name == "bitwise_radix":
        return lambda a: radix_inverse_pow2_bitwise(a, bits)
    raise ValueError(name)


def _check(a: Nat, x: Nat, bits: int, name: str) -> None:
    if mod_pow_of_radix(mul(a, x), LIMB, bits // LIMB_BITS) != ONE:
        raise BenchError(f"{name} returned a wrong inverse at {bits} bits for a={a.to_hex()}")


def time_one(name: str, bits: int, inputs: Sequence[Nat], reps: int, warmup: int) -> BenchRecord:
    fn = _runner(name, bits)
    expected = []
    for a in inputs:
        x = fn(a)
        _check(a, x, bits, name)
        expected.append(x)
    m = len(inputs)
    for i in range(warmup):
        fn(inputs[i % m])
    samples = []
    clock = time.perf_counter_ns
    for i in range(reps):
        a = inputs[i % m]
        t0 = clock()
        x = fn(a)
        samples.append(clock() - t0)
        if x != expected[i % m]:
            raise BenchError(f"{name} gave inconsistent output at {bits} bits")
    return BenchRecord(name, bits, reps, float(statistics.median(samples)), statistics.fmean(samples))


def run_suite(cfg: BenchConfig, progress: Callable[[str], None] | None = None) -> list[BenchRecord]:
    records = []
    for bits in cfg.sizes:
        inputs = make_inputs(bits, cfg.pool, cfg.seed)
        for name in cfg.algorithms:
            rec = time_one(name, bits, inputs, cfg.reps, cfg.warmup)
            if progress is not None:
                progress(f"{name} {bits} bits: median {rec.median_ns:.0f} ns")
            records.append(rec)
    records.sort(key=lambda r: (r.modulus_bits, ALGORITHMS.index(r.algorithm)))
    return records


def metadata(cfg: BenchConfig) -> list[str]:
    return [
        f"python {platform.python_implementation()} {sys.version.split()[0]}",
        f"platform {platform.platform()}",
        f"cpu {platform.processor() or platform.machine()}",
        f"seed {cfg.seed} reps {cfg.reps} warmup {cfg.warmup} pool {cfg.pool}",
        f"inputs sha256 {inputs_digest(cfg)}",
    ]


def emit(records: Sequence[BenchRecord], fmt: str = "csv", meta: Sequence[str] = ()) -> str:
    """Render records as CSV or as a markdown table (rows = sizes)."""
    out = io.StringIO()
    for line in meta:
        out.write(f"# {line}\n")
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in records:
            w.writerow([r.algorithm, r.modulus_bits, r.reps, f"{r.median_ns:.2f}", f"{r.mean_ns:.2f}"])
        return out.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown format {fmt!r}")
    algs = [a for a in ALGORITHMS if any(r.algorithm == a for r in records)]
    cell = {(r.modulus_bits, r.algorithm): r.median_ns for r in records}
    out.write("| modulus bits | " + " | ".join(algs) + " |\n")
    out.write("|---:|" + "---:|" * len(algs) + "\n")
    for bits in sorted({r.modulus_bits for r in records}):
        row = [f"{cell[bits, a]:.2f}" if (bits, a) in cell else "" for a in algs]
        out.write(f"| {bits} | " + " | ".join(row) + " |\n")
    return out.getvalue()
