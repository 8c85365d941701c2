import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

# criterion id -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")


def totient_prime_power(n: int, k: int) -> int:
    """phi(n**k) = n**(k-1) * phi(n), phi(n) by trial division."""
    phi, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            phi -= phi // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        phi -= phi // m
    return n ** (k - 1) * phi


def euler_inverse_table(n: int, k: int) -> np.ndarray:
    """a**(phi(n**k) - 1) mod n**k for every a in [0, n**k), vectorised.

    Entries for a not coprime to n are meaningless; callers mask them.
    Requires n**k < 2**31 so products fit in int64.
    """
    m = n**k
    assert m < 2**31
    e = totient_prime_power(n, k) - 1
    base = np.arange(m, dtype=np.int64)
    acc = np.ones(m, dtype=np.int64) % m
    while e:
        if e & 1:
            acc = acc * base % m
        base = base * base % m
        e >>= 1
    return acc


def coprime_mask(n: int, k: int) -> np.ndarray:
    a = np.arange(n**k, dtype=np.int64)
    return np.gcd(a, n) == 1


@pytest.fixture
def rng():
    import random

    return random.Random(20240601)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
