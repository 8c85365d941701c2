"""End-to-end acceptance checks.

Each test records a PASS/FAIL line in ``conftest.ACCEPTANCE``; the lines are
printed at the end of the session by ``pytest_terminal_summary`` and also
written to stdout as each test finishes (visible with ``-s``).
"""

import random
import time
from math import gcd

import numpy as np
import pytest

from conftest import ACCEPTANCE, coprime_mask, euler_inverse_table
from radixinv import bench
from radixinv import power_inverse as pi
from radixinv.digit_inverse import word_inverse_pow2_hensel, word_inverse_xgcd
from radixinv.mpcore import ONE, Nat, Radix, mod_pow_of_radix, mul, to_digits
from radixinv.oracle import brute_force_inverse, oracle_inverse


def record(key: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[key] = (ok, detail)
    print(f"\n{'PASS' if ok else 'FAIL'}  {key}: {detail}")
    assert ok, detail


def test_1_exhaustive_small_grid():
    """Every invertible a below n**k for n <= 12, k <= 6.

    The full grid is compared against a vectorised Euler-power table and a
    product check.  The Euclid oracle covers every a where n**k <= 1024 and
    a random sample of 64 per larger cell; the linear scan joins it on
    those entries while n**k <= 2**16.
    """
    t0 = time.perf_counter()
    rnd = random.Random(1)
    cases = oracle_checks = mismatches = 0
    for n in range(2, 13):
        r = Radix(n)
        for k in range(1, 7):
            m = n**k
            table = euler_inverse_table(n, k)
            avals = np.nonzero(coprime_mask(n, k))[0]
            avals = avals[avals >= 1]
            got = np.fromiter((int(pi.radix_inverse(int(a), r, k)[0]) for a in avals), dtype=np.int64, count=len(avals))
            cases += len(avals)
            mismatches += int(np.count_nonzero(got != table[avals]))
            mismatches += int(np.count_nonzero(avals * got % m != 1 % m))
            sample = avals if m <= 1024 else rnd.sample(list(avals), 64)
            for a in sample:
                x = int(got[np.searchsorted(avals, a)])
                oracle_checks += 1
                if x != int(oracle_inverse(int(a), m)):
                    mismatches += 1
                if m <= 2**16 and x != brute_force_inverse(int(a), m):
                    mismatches += 1
    dt = time.perf_counter() - t0
    record(
        "1 exhaustive small grid",
        mismatches == 0,
        f"{cases} inverses, {oracle_checks} oracle cross-checks, {mismatches} mismatches, {dt:.0f}s",
    )


def test_2_worked_instance():
    x, trace = pi.radix_inverse(12, Radix(5), 5, keep_trace=True)
    digits = to_digits(x, Radix(5), 5)
    prefixes = [int(p) for p in pi.prefix_inverses(trace)]
    prefix_ok = all(12 * p % 5**s == 1 for s, p in enumerate(prefixes, start=1))
    ok = int(x) == 1823 and digits[::-1] == [2, 4, 2, 4, 3] and len(prefixes) == 5 and prefix_ok
    record(
        "2 worked instance 12^-1 mod 5^5",
        ok,
        f"x={int(x)}, digits ({' '.join(map(str, digits[::-1]))})_5, prefixes {prefixes}",
    )


def test_3_reciprocal_power_identity():
    rnd = random.Random(3)
    checked = failures = 0
    vacuous = []
    for p in (2, 3, 5, 7, 11):
        for k in range(1, 9):
            pool = [a for a in range(2, min(p**k, 10**6)) if a % p] if p**k <= 10**6 else None
            if pool == []:
                vacuous.append(f"p={p},k={k}")
                continue
            for _ in range(100):
                if pool is not None:
                    a = rnd.choice(pool)
                else:
                    a = rnd.randrange(2, p**k)
                    while a % p == 0:
                        a = rnd.randrange(2, p**k)
                _, trace = pi.koc_inverse(a, p, k, keep_trace=True)
                for s in range(k + 1):
                    b_s = int(trace.intermediates[s])
                    checked += 1
                    if (a + b_s) * p**s % a != 1:
                        failures += 1
    detail = f"{checked} (a, s) checks, {failures} failures"
    if vacuous:
        detail += f"; no a in [2, p^k) for {', '.join(vacuous)}"
    record("3 (a + b_s) p^s = 1 mod a", failures == 0, detail)


def test_4_cross_algorithm_agreement():
    rnd = random.Random(4)
    k = 256
    disagreements = 0
    for _ in range(1000):
        a = Nat.from_int(rnd.getrandbits(k) | 1)
        outs = {
            pi.koc_inverse(a, 2, k)[0],
            pi.koc_inverse_pow2_bitwise(a, k),
            pi.radix_inverse(a, Radix(2), k)[0],
            pi.radix_inverse_pow2_bitwise(a, k),
        }
        if len(outs) != 1 or mod_pow_of_radix(mul(a, outs.pop()), Radix(2), k) != ONE:
            disagreements += 1
    record("4 algorithms agree at 256 bits", disagreements == 0, f"1000 inputs, {disagreements} disagreements")


def test_5_large_limb_base():
    rnd = random.Random(5)
    limb = Radix.limb_base()
    t0 = time.perf_counter()
    bad = 0
    for _ in range(1000):
        a = Nat.from_int(rnd.getrandbits(4096) | 1)
        x, _ = pi.radix_inverse(a, limb, 64)
        if mod_pow_of_radix(mul(a, x), limb, 64) != ONE or int(a) * int(x) % 2**4096 != 1:
            bad += 1
    dt = time.perf_counter() - t0
    record("5 4096-bit limb-base inverses", bad == 0, f"1000 inputs, {bad} product-check failures, {dt:.1f}s")


def test_6_word_inverse():
    r16 = Radix(2**16)
    bad16 = sum(word_inverse_pow2_hensel(a, 16) != word_inverse_xgcd(a, r16) for a in range(1, 2**16, 2))
    rnd = random.Random(6)
    limb = Radix.limb_base()
    bad64 = 0
    for _ in range(10**6):
        a = rnd.getrandbits(64) | 1
        if word_inverse_pow2_hensel(a) != word_inverse_xgcd(a, limb):
            bad64 += 1
    record(
        "6 Hensel word inverse matches Euclid",
        bad16 == 0 and bad64 == 0,
        f"width 16 exhaustive: {bad16} mismatches; 10^6 random 64-bit: {bad64} mismatches",
    )


# Default sizes and algorithms; repetitions reduced so the run stays in the
# expected time budget.
PERF_REPS, PERF_WARMUP = 101, 10


@pytest.mark.slow
def test_7_performance_ordering():
    pi.reset_counters()
    cfg = bench.BenchConfig(reps=PERF_REPS, warmup=PERF_WARMUP)
    med = {(r.algorithm, r.modulus_bits): r.median_ns for r in bench.run_suite(cfg)}
    problems = []
    speedups = []
    for bits in cfg.sizes:
        radix, newton, koc = (med[(a, bits)] for a in ("radix_limb_base", "hensel_fullwidth_newton", "bitwise_koc"))
        if bits >= 512 and not radix < newton < koc:
            problems.append(f"order at {bits}")
        if bits >= 2048:
            speedups.append(f"{bits}:{koc / radix:.0f}x")
            if koc / radix < 5:
                problems.append(f"speedup {koc / radix:.1f}x at {bits}")
    ok = not problems and pi.counters["trace.alloc"] == 0
    record(
        "7 performance ordering",
        ok,
        f"reps={PERF_REPS}; bitwise_koc/radix_limb_base {', '.join(speedups)}"
        + (f"; problems: {problems}" if problems else ""),
    )


def test_8_loop_counts():
    rnd = random.Random(8)
    cases = []
    for n, k in [(2, 1), (2, 9), (2, 256), (3, 7), (5, 5), (10, 12), (97, 20), (2**64, 1), (2**64, 64)]:
        a = rnd.randrange(1, n**k)
        while gcd(a, n) != 1:
            a = rnd.randrange(1, n**k)
        cases.append((a, n, k))
    cases.append((12, 5, 5))
    bad = []
    for a, n, k in cases:
        pi.reset_counters()
        pi.radix_inverse(a, Radix(n), k)
        radix_loops = pi.counters["radix_general.loop"] + pi.counters["radix_limb.loop"]
        pi.reset_counters()
        pi.koc_inverse(a, n, k)
        koc_loops = pi.counters["koc.loop"]
        if (radix_loops, koc_loops) != (k - 1, k):
            bad.append((n, k, radix_loops, koc_loops))
        if n == 2:
            pi.reset_counters()
            pi.radix_inverse_pow2_bitwise(a, k)
            pi.koc_inverse_pow2_bitwise(a, k)
            if (pi.counters["radix_pow2.loop"], pi.counters["koc_pow2.loop"]) != (k - 1, k):
                bad.append(("bitwise", k))
    record("8 k-1 versus k loop iterations", not bad, f"{len(cases)} (a, n, k) cases, mismatches {bad}")
