"""Digit-serial inversion modulo n**k.

Four loops live here:

* ``koc_inverse`` / ``koc_inverse_pow2_bitwise``: the signed ``b_i``
  recurrence ``p*b_{i+1} = b_i - a*X_i`` with ``b_0 = 1``.
* ``radix_inverse`` / ``radix_inverse_pow2_bitwise``: the carry recurrence
  of the schoolbook product ``a*x = 1 + n**k * l``.  ``T_0`` is the carry
  out of column 0, ``(c*a_0 - 1)/n``; the first step adds the remaining
  columns of ``c*a`` (``T_1 = T_0 + c*(a div n)``) and every later step
  is the exact division ``T_i = (T_{i-1} + X_{i-1}*a)/n``.  From ``i = 1``
  on, ``T_i == -b_i`` of the signed recurrence, so ``0 <= T_i < a``.

Every loop records its trip count in ``counters`` so tests can check the
k-1 versus k iteration claim without timing anything.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from radixinv.digit_inverse import word_inverse, word_inverse_pow2_hensel, word_inverse_xgcd
from radixinv.errors import DomainError, InvalidModulus, NotInvertible
from radixinv.mpcore import (
    LIMB_BITS,
    LIMB_MASK,
    Nat,
    Radix,
    SNat,
    _add,
    _cmp,
    _divmod_small,
    _mod_small,
    _mul_digit_add,
    _shr_bits,
    _sub,
    as_nat,
    as_radix,
    divmod_radix,
    from_digits,
    mod_pow_of_radix,
    mod_radix,
    mul_digit,
    sub,
    sub_signed,
)

counters: Counter[str] = Counter()


def reset_counters() -> None:
    counters.clear()


class Algorithm(str, enum.Enum):
    KOC = "koc"
    KOC_POW2 = "koc_pow2"
    RADIX_GENERAL = "radix_general"
    RADIX_POW2 = "radix_pow2"


KOC_FAMILY = (Algorithm.KOC, Algorithm.KOC_POW2)


@dataclass(frozen=True)
class InverseRequest:
    a: Nat
    radix: Radix
    k: int

    @classmethod
    def build(cls, a: Nat | int, radix: Radix | int, k: int) -> InverseRequest:
        """Validate, and reduce ``a`` modulo ``n**k``."""
        if k < 1:
            raise InvalidModulus(f"k must be >= 1, got {k}")
        r = as_radix(radix)
        return cls(mod_pow_of_radix(as_nat(a), r, k), r, k)


@dataclass(frozen=True)
class InverseTrace:
    """Digits and intermediates of one run.

    ``intermediates`` holds ``b_0..b_k`` for the signed p-adic loop and ``T_0..T_{k-1}``
    for the radix loop.
    """

    a: Nat
    radix: Radix
    k: int
    c: int
    digits: tuple[int, ...]
    intermediates: tuple[SNat, ...]
    algorithm: Algorithm

    def __post_init__(self):
        counters["trace.alloc"] += 1

    @property
    def value(self) -> Nat:
        return from_digits(self.digits, self.radix)


def _bits_to_nat(bits: list[int]) -> Nat:
    limbs = [0] * ((len(bits) + LIMB_BITS - 1) // LIMB_BITS)
    for i, b in enumerate(bits):
        if b:
            limbs[i // LIMB_BITS] |= 1 << (i % LIMB_BITS)
    return Nat._wrap(limbs)


def _require_odd(a: Nat) -> None:
    if not a.is_odd():
        raise NotInvertible(2)


# -- carry loop, any radix ----------------------------------------------------

def radix_inverse(
    a: Nat | int, radix: Radix | int, k: int, keep_trace: bool = False
) -> tuple[Nat, InverseTrace | None]:
    """Inverse of ``a`` modulo ``n**k`` by the radix-n carry recurrence.

    Returns ``(x, trace)``; ``trace`` is None unless ``keep_trace``.
    Raises NotInvertible when ``gcd(a mod n, n) != 1``.
    """
    req = InverseRequest.build(a, radix, k)
    if req.radix.is_limb_base and not keep_trace:
        return _radix_limb_fast(req), None
    return _radix_general(req, keep_trace)


def _radix_general(req: InverseRequest, keep_trace: bool) -> tuple[Nat, InverseTrace | None]:
    r, k = req.radix, req.k
    n = r.n
    a = req.a.limbs
    if r.is_limb_base:
        shift = None
        a_hi, a0 = list(a[1:]), (a[0] if a else 0)
        c = word_inverse(a0, r)
    else:
        shift = n.bit_length() - 1 if r.is_pow2 else None
        a_hi, a0 = _divmod_small(a, n)
        c = word_inverse_xgcd(a0, r)

    pow2, limb = r.is_pow2, r.is_limb_base

    def low_digit(t: list[int]) -> int:
        if not t:
            return 0
        if pow2:
            return t[0] & (n - 1)
        return _mod_small(t, n)

    def exact_div(s: list[int]) -> list[int]:
        if limb:
            assert not s or s[0] == 0, "inexact division by n"
            return s[1:]
        if shift is not None:
            assert not s or s[0] & (n - 1) == 0, "inexact division by n"
            return _shr_bits(s, shift)
        q, rem = _divmod_small(s, n)
        assert rem == 0, "inexact division by n"
        return q

    t0 = (c * a0 - 1) // n
    t = [t0] if t0 else []
    digits = [c]
    ts = [t] if keep_trace else None
    loops = 0
    for i in range(1, k):
        if i == 1:
            t = _mul_digit_add(t, a_hi, c)
        else:
            t = exact_div(_mul_digit_add(t, a, digits[i - 1]))
        while t and not t[-1]:
            t.pop()
        digits.append((-c * low_digit(t)) % n)
        if ts is not None:
            assert _cmp(t, a) <= 0, "carry exceeded a"
            ts.append(t)
        loops += 1
    counters["radix_general.loop"] += loops
    x = from_digits(digits, r)
    trace = None
    if ts is not None:
        trace = InverseTrace(
            a=req.a,
            radix=r,
            k=k,
            c=c,
            digits=tuple(digits),
            intermediates=tuple(SNat.from_nat(Nat._wrap(list(v))) for v in ts),
            algorithm=Algorithm.RADIX_GENERAL,
        )
    return x, trace


def _radix_limb_fast(req: InverseRequest) -> Nat:
    # n = 2**W: digits are limbs, dividing by n drops limb 0.  Only
    # T_i mod n**(k-i) can reach a later digit, so the carry vector is
    # cut to k-i limbs as the loop advances.
    k = req.k
    a = list(req.a.limbs) + [0] * (k - len(req.a.limbs))
    a0 = a[0]
    c = word_inverse_pow2_hensel(a0)
    mask = LIMB_MASK
    w = LIMB_BITS
    t0 = (c * a0 - 1) >> w
    x = [c]
    if k == 1:
        return Nat._wrap(x)
    # T_1 = T_0 + c*(a div n), kept to k-1 limbs
    t = []
    carry = t0
    for aj in a[1:]:
        s = c * aj + carry
        t.append(s & mask)
        carry = s >> w
    xi = (-c * t[0]) & mask
    x.append(xi)
    loops = 1
    for size in range(k - 2, 0, -1):
        # T_i = (T_{i-1} + X_{i-1}*a) / n, truncated to `size` limbs
        s = t[0] + xi * a0
        assert s & mask == 0, "inexact division by n"
        carry = s >> w
        nt = []
        for tj, aj in zip(t[1:size + 1], a[1:size + 1]):
            s = tj + xi * aj + carry
            nt.append(s & mask)
            carry = s >> w
        t = nt
        xi = (-c * t[0]) & mask
        x.append(xi)
        loops += 1
    counters["radix_limb.loop"] += loops
    return Nat._wrap(x)


# -- carry loop, n = 2 --------------------------------------------------------

def radix_inverse_pow2_bitwise(a: Nat | int, k: int) -> Nat:
    """Inverse of odd ``a`` modulo ``2**k``, one bit per step.

    ``T_0 = 0``, ``X_0 = 1``; then ``T_i = (T_{i-1} + X_{i-1}*a) >> 1`` and
    ``X_i = T_i & 1``.  The first shift drops the low 1 of ``a`` (column 0
    of the product is the target 1); later shifts are exact.
    """
    req = InverseRequest.build(a, 2, k)
    _require_odd(req.a)
    av = list(req.a.limbs)
    t: list[int] = []
    xi = 1
    bits = [1]
    loops = 0
    for i in range(1, k):
        if xi:
            t = _add(t, av)
        assert i == 1 or not t or not t[0] & 1, "inexact division by 2"
        t = _shr_bits(t, 1)
        xi = t[0] & 1 if t else 0
        bits.append(xi)
        loops += 1
    counters["radix_pow2.loop"] += loops
    return _bits_to_nat(bits)


# -- signed p-adic loop, any radix -------------------------------------------

def koc_inverse(
    a: Nat | int, p: Radix | int, k: int, keep_trace: bool = False
) -> tuple[Nat, InverseTrace | None]:
    """Inverse of ``a`` modulo ``p**k`` by the signed ``b_i`` recurrence.

    ``p`` is meant to be prime but this is not checked: the loop only needs
    ``c = a^-1 mod p`` to exist.
    """
    req = InverseRequest.build(a, p, k)
    r = req.radix
    a_nat = req.a
    c = word_inverse(mod_radix(a_nat, r), r)
    b = SNat.from_int(1)
    digits = []
    bs = [b] if keep_trace else None
    loops = 0
    for _ in range(k):
        low = mod_radix(b.magnitude, r)
        if b.sign < 0:
            low = -low % r.n
        xi = c * low % r.n
        diff = sub_signed(b, SNat.from_nat(mul_digit(a_nat, xi)))
        q, rem = divmod_radix(diff.magnitude, r)
        assert rem == 0, "inexact division by p"
        b = SNat.from_nat(q, diff.sign < 0)
        digits.append(xi)
        if bs is not None:
            bs.append(b)
        loops += 1
    counters["koc.loop"] += loops
    x = from_digits(digits, r)
    trace = None
    if bs is not None:
        trace = InverseTrace(
            a=a_nat, radix=r, k=k, c=c, digits=tuple(digits),
            intermediates=tuple(bs), algorithm=Algorithm.KOC,
        )
    return x, trace


# -- signed p-adic loop, n = 2 -----------------------------------------------

def koc_inverse_pow2_bitwise(a: Nat | int, k: int) -> Nat:
    """Binary p-adic loop: ``X_i = b_i & 1``, ``b_{i+1} = (b_i - X_i*a) >> 1``."""
    req = InverseRequest.build(a, 2, k)
    _require_odd(req.a)
    av = list(req.a.limbs)
    mag = [1]
    neg = False
    bits = []
    for _ in range(k):
        xi = mag[0] & 1 if mag else 0
        if xi:
            if neg:
                mag = _add(mag, av)
            elif _cmp(mag, av) >= 0:
                mag = _sub(mag, av)
            else:
                mag = _sub(av, mag)
                neg = True
        assert not mag or not mag[0] & 1, "inexact division by 2"
        mag = _shr_bits(mag, 1)
        if not mag:
            neg = False
        bits.append(xi)
    counters["koc_pow2.loop"] += k
    return _bits_to_nat(bits)


# -- results read off a trace ------------------------------------------------

def prefix_inverses(trace: InverseTrace) -> list[Nat]:
    """``(X_{s-1}..X_0)_n`` for s = 1..k; entry s-1 inverts a mod n**s."""
    return [from_digits(trace.digits[:s], trace.radix) for s in range(1, trace.k + 1)]


def reciprocal_power_mod_a(trace: InverseTrace, s: int, a: Nat | int | None = None) -> Nat:
    """``(n**s)^-1 mod a``, read off as ``a + b_s``.

    p-adic traces serve 1 <= s <= k.  A radix trace serves 1 <= s <= k-1 via
    ``b_s = -T_s``; it never computes a carry for s = k.
    """
    a_nat = trace.a if a is None else as_nat(a)
    if a_nat != trace.a:
        raise DomainError("a does not match the traced input")
    if _cmp(a_nat.limbs, [1]) <= 0:
        raise DomainError("modulus a must exceed 1")
    if trace.algorithm in KOC_FAMILY:
        top = trace.k
    else:
        top = trace.k - 1
    if not 1 <= s <= top:
        raise DomainError(f"s must lie in [1, {top}] for a {trace.algorithm.value} trace")
    v = trace.intermediates[s]
    if trace.algorithm in KOC_FAMILY:
        assert v.sign <= 0, "b_s must be nonpositive"
    # radix traces store T_s = -b_s
    return sub(a_nat, v.magnitude)


# -- dispatch ----------------------------------------------------------------

ALGORITHM_CHOICES = ("auto", "koc", "radix", "bitwise")


def invert(a: Nat | int, radix: Radix | int, k: int, algorithm: str = "auto") -> Nat:
    """Inverse of ``a`` modulo ``n**k`` with a named loop.

    ``auto`` uses the bitwise carry loop for n = 2 and the radix loop
    otherwise (the limb fast path when n is the limb base).  ``koc`` uses
    the binary p-adic loop for n = 2 and the general one otherwise.
    ``bitwise`` is the n = 2 carry loop only.
    """
    r = as_radix(radix)
    if algorithm == "auto":
        algorithm = "bitwise" if r.n == 2 else "radix"
    if algorithm == "radix":
        return radix_inverse(a, r, k)[0]
    if algorithm == "koc":
        if r.n == 2:
            return koc_inverse_pow2_bitwise(a, k)
        return koc_inverse(a, r, k)[0]
    if algorithm == "bitwise":
        if r.n != 2:
            raise InvalidModulus("bitwise loop needs radix 2")
        return radix_inverse_pow2_bitwise(a, k)
    raise ValueError(f"unknown algorithm {algorithm!r}")
