"""Single-digit inverse ``c = a^-1 mod n``, the seed of every digit-serial loop."""

from __future__ import annotations

from radixinv.errors import NotInvertible
from radixinv.mpcore import LIMB_BITS, Radix

# correct low bits of the (3a) ^ 2 seed
_SEED_BITS = 5


def word_inverse_xgcd(a0: int, r: Radix) -> int:
    """Inverse of ``a0`` modulo ``r.n`` by the extended Euclidean algorithm."""
    n = r.n
    old_r, cur = a0 % n, n
    old_s, s = 1, 0
    while cur:
        q = old_r // cur
        old_r, cur = cur, old_r - q * cur
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotInvertible(old_r)
    return old_s % n


def hensel_iterates(a: int, bits: int = LIMB_BITS) -> list[int]:
    """Seed and every Newton iterate for the inverse of odd ``a`` mod ``2**bits``.

    Entry j is correct to ``5 * 2**j`` low bits.
    """
    if not a & 1:
        raise NotInvertible(2)
    mask = (1 << bits) - 1
    a &= mask
    x = ((3 * a) ^ 2) & mask
    out = [x]
    good = _SEED_BITS
    while good < bits:
        x = (x * (2 - a * x)) & mask
        good *= 2
        out.append(x)
    return out


def word_inverse_pow2_hensel(a: int, bits: int = LIMB_BITS) -> int:
    """Inverse of odd ``a`` modulo ``2**bits``.

    Starts from ``(3*a) ^ 2`` (five correct bits) and applies
    ``x <- x*(2 - a*x)`` in wrapping arithmetic until the precision covers
    ``bits``.  Four steps for 64-bit words.
    """
    if not a & 1:
        raise NotInvertible(2)
    mask = (1 << bits) - 1
    a &= mask
    x = ((3 * a) ^ 2) & mask
    good = _SEED_BITS
    while good < bits:
        x = (x * (2 - a * x)) & mask
        good *= 2
        assert (a * x) & ((1 << min(good, bits)) - 1) == 1
    return x


def word_inverse(a0: int, r: Radix) -> int:
    """Dispatch: Hensel lifting for the limb base, Euclid otherwise."""
    if r.is_limb_base:
        return word_inverse_pow2_hensel(a0)
    return word_inverse_xgcd(a0, r)
