"""Slow reference inverses used to check the digit-serial loops.

Nothing here touches the inversion code path: division is plain
shift-and-subtract and the inverse comes from textbook extended Euclid.
"""

from __future__ import annotations

from dataclasses import dataclass

from radixinv.errors import DomainError, NotInvertible
from radixinv.mpcore import (
    LIMB_BITS,
    ONE,
    Nat,
    SNat,
    _add,
    _cmp,
    _mul,
    _shl_bits,
    _shr_bits,
    _sub,
    _trim,
    as_nat,
    cmp,
    sub,
)


@dataclass(frozen=True)
class XgcdResult:
    g: Nat
    u: SNat
    v: SNat


def _divmod_limbs(x: list[int], y: list[int]) -> tuple[list[int], list[int]]:
    if _cmp(x, y) < 0:
        return [], x
    shift = _bit_length(x) - _bit_length(y)
    ys = _shl_bits(y, shift)
    rem = x
    q = [0] * (shift // LIMB_BITS + 1)
    for s in range(shift, -1, -1):
        if _cmp(rem, ys) >= 0:
            rem = _sub(rem, ys)
            q[s // LIMB_BITS] |= 1 << (s % LIMB_BITS)
        if s:
            ys = _shr_bits(ys, 1)
    return _trim(q), rem


def _bit_length(x: list[int]) -> int:
    return (len(x) - 1) * LIMB_BITS + x[-1].bit_length() if x else 0


def nat_divmod(x: Nat, y: Nat) -> tuple[Nat, Nat]:
    """Quotient and remainder by binary long division."""
    if not y:
        raise DomainError("division by zero")
    q, r = _divmod_limbs(list(x.limbs), list(y.limbs))
    return Nat(q), Nat(r)


def _signed_sub(a: tuple[int, list[int]], b: tuple[int, list[int]]) -> tuple[int, list[int]]:
    """a - b on (sign, limbs) pairs."""
    sa, ma = a
    sb, mb = b
    sb = -sb if mb else 0
    if not sb:
        return sa, ma
    if not sa:
        return sb, mb
    if sa == sb:
        return sa, _add(ma, mb)
    c = _cmp(ma, mb)
    if c == 0:
        return 0, []
    if c > 0:
        return sa, _sub(ma, mb)
    return sb, _sub(mb, ma)


def xgcd(x: Nat | int, y: Nat | int) -> XgcdResult:
    """g = gcd(x, y) with u*x + v*y = g."""
    x, y = as_nat(x), as_nat(y)
    if not x and not y:
        raise DomainError("xgcd(0, 0) is undefined")
    r0, r1 = list(x.limbs), list(y.limbs)
    s0, s1 = (1, [1]), (0, [])
    while r1:
        q, rem = _divmod_limbs(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _signed_sub(s0, (s1[0], _trim(_mul(q, s1[1]))))
    g = Nat(r0)
    u = SNat.from_nat(Nat(s0[1]), s0[0] < 0)
    if not y:
        return XgcdResult(g, u, SNat.from_int(0))
    # v = (g - u*x) / y, exact
    sign, num = _signed_sub((1 if r0 else 0, r0), (u.sign, _trim(_mul(s0[1], list(x.limbs)))))
    v_mag, rem = _divmod_limbs(num, list(y.limbs))
    assert not rem, "Bezout cofactor not integral"
    return XgcdResult(g, u, SNat.from_nat(Nat(v_mag), sign < 0))


def oracle_inverse(a: Nat | int, m: Nat | int) -> Nat:
    """a^-1 mod m from the Bezout coefficient of a."""
    a, m = as_nat(a), as_nat(m)
    if cmp(m, Nat([2])) < 0:
        raise DomainError("modulus must be >= 2")
    _, a = nat_divmod(a, m)
    res = xgcd(a, m)
    if res.g != ONE:
        raise NotInvertible(int(res.g))
    _, u = nat_divmod(res.u.magnitude, m)
    if res.u.sign < 0 and u:
        u = sub(m, u)
    return u


def brute_force_inverse(a: int, m: int) -> int | None:
    """Linear scan for x with a*x = 1 (mod m); m must be at most 2**20."""
    if m > 1 << 20:
        raise DomainError("brute force limited to m <= 2**20")
    a %= m
    for x in range(m):
        if a * x % m == 1:
            return x
    return None
