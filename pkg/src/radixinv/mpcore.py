"""Limb-based multiprecision naturals and signed integers.

Values are immutable. ``Nat`` stores little-endian W-bit limbs with no
high zero limbs; zero is the empty tuple.  The module-level functions are
the arithmetic surface used by the inversion code and the oracle.

The underscore helpers work on plain ``list`` limb vectors and skip
canonicalisation; the inversion loops call them directly to avoid
allocating a ``Nat`` per step.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from radixinv.errors import DomainError, InvalidModulus, OutOfRange

LIMB_BITS = 64
LIMB_BASE = 1 << LIMB_BITS
LIMB_MASK = LIMB_BASE - 1
_HEX_PER_LIMB = LIMB_BITS // 4


def _trim(limbs: list[int]) -> list[int]:
    while limbs and not limbs[-1]:
        limbs.pop()
    return limbs


@functools.total_ordering
class Nat:
    """Nonnegative multiprecision integer."""

    __slots__ = ("_limbs",)

    def __init__(self, limbs: Iterable[int] = ()):
        ls = list(limbs)
        for w in ls:
            if not 0 <= w <= LIMB_MASK:
                raise ValueError(f"limb out of range: {w!r}")
        self._limbs = tuple(_trim(ls))

    @classmethod
    def _wrap(cls, limbs: list[int]) -> Nat:
        # trusted constructor: limbs already in range
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_limbs", tuple(_trim(limbs)))
        return obj

    @classmethod
    def from_int(cls, value: int) -> Nat:
        if value < 0:
            raise DomainError(f"negative value {value} for Nat")
        limbs = []
        while value:
            limbs.append(value & LIMB_MASK)
            value >>= LIMB_BITS
        return cls._wrap(limbs)

    @classmethod
    def from_hex(cls, text: str) -> Nat:
        s = text.strip().lower()
        if s.startswith("0x"):
            s = s[2:]
        s = s.replace("_", "")
        if not s or any(ch not in "0123456789abcdef" for ch in s):
            raise ValueError(f"invalid hex literal: {text!r}")
        limbs = []
        end = len(s)
        while end > 0:
            start = max(0, end - _HEX_PER_LIMB)
            limbs.append(int(s[start:end], 16))
            end = start
        return cls._wrap(limbs)

    @classmethod
    def parse(cls, text: str) -> Nat:
        """Parse ``0x``-prefixed hex or plain decimal."""
        s = text.strip()
        if s.lower().startswith("0x"):
            return cls.from_hex(s)
        if not s.isdigit():
            raise ValueError(f"invalid number: {text!r}")
        return cls.from_int(int(s))

    @property
    def limbs(self) -> tuple[int, ...]:
        return self._limbs

    def to_hex(self) -> str:
        if not self._limbs:
            return "0x0"
        top, *rest = reversed(self._limbs)
        return "0x" + format(top, "x") + "".join(format(w, f"0{_HEX_PER_LIMB}x") for w in rest)

    def bit_length(self) -> int:
        if not self._limbs:
            return 0
        return (len(self._limbs) - 1) * LIMB_BITS + self._limbs[-1].bit_length()

    def is_odd(self) -> bool:
        return bool(self._limbs) and bool(self._limbs[0] & 1)

    def __int__(self) -> int:
        value = 0
        for w in reversed(self._limbs):
            value = (value << LIMB_BITS) | w
        return value

    __index__ = __int__

    def __bool__(self) -> bool:
        return bool(self._limbs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Nat):
            return self._limbs == other._limbs
        if isinstance(other, int):
            return other >= 0 and int(self) == other
        return NotImplemented

    def __lt__(self, other: Nat) -> bool:
        if not isinstance(other, Nat):
            return NotImplemented
        return cmp(self, other) < 0

    def __hash__(self) -> int:
        return hash(int(self))

    def __repr__(self) -> str:
        return f"Nat({self.to_hex()})"

    def __setattr__(self, name, value):
        if name == "_limbs" and not hasattr(self, "_limbs"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Nat is immutable")


ZERO = Nat()
ONE = Nat([1])


def as_nat(x: Nat | int) -> Nat:
    return x if isinstance(x, Nat) else Nat.from_int(x)


class SNat:
    """Signed integer: sign in {-1, 0, 1} and a Nat magnitude."""

    __slots__ = ("sign", "magnitude")

    def __init__(self, sign: int, magnitude: Nat):
        if sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {sign!r}")
        if (sign == 0) != (not magnitude):
            raise ValueError("sign is zero iff magnitude is zero")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "magnitude", magnitude)

    @classmethod
    def from_nat(cls, x: Nat, negative: bool = False) -> SNat:
        if not x:
            return cls(0, x)
        return cls(-1 if negative else 1, x)

    @classmethod
    def from_int(cls, value: int) -> SNat:
        return cls.from_nat(Nat.from_int(abs(value)), value < 0)

    def __int__(self) -> int:
        return self.sign * int(self.magnitude)

    def __neg__(self) -> SNat:
        if not self.sign:
            return self
        return SNat(-self.sign, self.magnitude)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SNat):
            return self.sign == other.sign and self.magnitude == other.magnitude
        if isinstance(other, int):
            return int(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.sign, self.magnitude))

    def __repr__(self) -> str:
        return f"SNat({int(self)})"

    def __setattr__(self, name, value):
        raise AttributeError("SNat is immutable")


SNAT_ZERO = SNat(0, ZERO)


@dataclass(frozen=True)
class Radix:
    """Base n of a digit expansion; n = 2**LIMB_BITS is the limb base."""

    n: int

    def __post_init__(self):
        if not 2 <= self.n <= LIMB_BASE:
            raise InvalidModulus(f"radix must satisfy 2 <= n <= 2**{LIMB_BITS}, got {self.n}")

    @classmethod
    def limb_base(cls) -> Radix:
        return cls(LIMB_BASE)

    @property
    def is_limb_base(self) -> bool:
        return self.n == LIMB_BASE

    @property
    def is_pow2(self) -> bool:
        return self.n & (self.n - 1) == 0

    def __str__(self) -> str:
        return "limb" if self.is_limb_base else str(self.n)


def as_radix(r: Radix | int) -> Radix:
    return r if isinstance(r, Radix) else Radix(r)


# -- limb-vector kernels -----------------------------------------------------

def _add(x: Sequence[int], y: Sequence[int]) -> list[int]:
    if len(x) < len(y):
        x, y = y, x
    out = []
    carry = 0
    for i, w in enumerate(y):
        s = x[i] + w + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    for i in range(len(y), len(x)):
        s = x[i] + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    if carry:
        out.append(carry)
    return out


def _sub(x: Sequence[int], y: Sequence[int]) -> list[int]:
    # requires x >= y
    out = []
    borrow = 0
    for i, w in enumerate(y):
        s = x[i] - w - borrow
        borrow = s < 0
        out.append(s & LIMB_MASK)
    for i in range(len(y), len(x)):
        s = x[i] - borrow
        borrow = s < 0
        out.append(s & LIMB_MASK)
    assert not borrow, "subtraction underflow"
    return _trim(out)


def _cmp(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    for i in range(len(x) - 1, -1, -1):
        if x[i] != y[i]:
            return -1 if x[i] < y[i] else 1
    return 0


def _mul_digit(x: Sequence[int], d: int, carry: int = 0) -> list[int]:
    """d*x + carry, with carry below one limb."""
    if not d:
        return [carry] if carry else []
    out = []
    for w in x:
        s = w * d + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    if carry:
        out.append(carry)
    return out


def _mul_digit_add(t: Sequence[int], x: Sequence[int], d: int) -> list[int]:
    """t + d*x in one pass."""
    nt, nx = len(t), len(x)
    out = []
    carry = 0
    for i in range(max(nt, nx)):
        s = (t[i] if i < nt else 0) + (x[i] * d if i < nx else 0) + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    if carry:
        out.append(carry)
    return out


def _divmod_small(x: Sequence[int], n: int) -> tuple[list[int], int]:
    q = [0] * len(x)
    rem = 0
    for i in range(len(x) - 1, -1, -1):
        cur = (rem << LIMB_BITS) | x[i]
        q[i], rem = divmod(cur, n)
    return _trim(q), rem


def _mod_small(x: Sequence[int], n: int) -> int:
    rem = 0
    for i in range(len(x) - 1, -1, -1):
        rem = ((rem << LIMB_BITS) | x[i]) % n
    return rem


def _shr_bits(x: Sequence[int], s: int) -> list[int]:
    q, r = divmod(s, LIMB_BITS)
    x = list(x[q:])
    if r and x:
        lo = LIMB_BITS - r
        for i in range(len(x) - 1):
            x[i] = (x[i] >> r) | ((x[i + 1] << lo) & LIMB_MASK)
        x[-1] >>= r
    return _trim(x)


def _shl_bits(x: Sequence[int], s: int) -> list[int]:
    if not x:
        return []
    q, r = divmod(s, LIMB_BITS)
    out = [0] * q
    if r:
        carry = 0
        lo = LIMB_BITS - r
        for w in x:
            out.append(((w << r) & LIMB_MASK) | carry)
            carry = w >> lo
        if carry:
            out.append(carry)
    else:
        out.extend(x)
    return out


def _mul(x: Sequence[int], y: Sequence[int]) -> list[int]:
    if not x or not y:
        return []
    out = [0] * (len(x) + len(y))
    for i, xi in enumerate(x):
        if not xi:
            continue
        carry = 0
        k = i
        for yj in y:
            s = out[k] + xi * yj + carry
            out[k] = s & LIMB_MASK
            carry = s >> LIMB_BITS
            k += 1
        out[k] = carry
    return _trim(out)


def _mul_low(x: Sequence[int], y: Sequence[int], size: int) -> list[int]:
    """x*y mod 2**(LIMB_BITS*size), skipping partial products above ``size``."""
    out = [0] * size
    x = x[:size]
    for i, xi in enumerate(x):
        if not xi:
            continue
        carry = 0
        k = i
        for yj in y[: size - i]:
            s = out[k] + xi * yj + carry
            out[k] = s & LIMB_MASK
            carry = s >> LIMB_BITS
            k += 1
        if k < size:
            out[k] = carry
    return _trim(out)


# -- public arithmetic -------------------------------------------------------

def cmp(x: Nat, y: Nat) -> int:
    """-1, 0 or 1 as x <, =, > y."""
    return _cmp(x.limbs, y.limbs)


def add(x: Nat, y: Nat) -> Nat:
    return Nat._wrap(_add(x.limbs, y.limbs))


def sub(x: Nat, y: Nat) -> Nat:
    if _cmp(x.limbs, y.limbs) < 0:
        raise DomainError("Nat subtraction would go negative")
    return Nat._wrap(_sub(x.limbs, y.limbs))


def add_signed(x: SNat, y: SNat) -> SNat:
    if not x.sign:
        return y
    if not y.sign:
        return x
    if x.sign == y.sign:
        return SNat(x.sign, add(x.magnitude, y.magnitude))
    c = cmp(x.magnitude, y.magnitude)
    if c == 0:
        return SNAT_ZERO
    if c > 0:
        return SNat(x.sign, Nat._wrap(_sub(x.magnitude.limbs, y.magnitude.limbs)))
    return SNat(y.sign, Nat._wrap(_sub(y.magnitude.limbs, x.magnitude.limbs)))


def sub_signed(x: SNat, y: SNat) -> SNat:
    return add_signed(x, -y)


def mul_digit(x: Nat, d: int) -> Nat:
    if not 0 <= d <= LIMB_MASK:
        raise DomainError(f"digit {d} does not fit in one limb")
    return Nat._wrap(_mul_digit(x.limbs, d))


def mul(x: Nat, y: Nat) -> Nat:
    """Schoolbook product. Reserved for verification code."""
    return Nat._wrap(_mul(x.limbs, y.limbs))


def mul_low(x: Nat, y: Nat, size: int) -> Nat:
    """Low ``size`` limbs of x*y."""
    return Nat._wrap(_mul_low(x.limbs, y.limbs, size))


def shift_left(x: Nat, bits: int) -> Nat:
    return Nat._wrap(_shl_bits(x.limbs, bits))


def shift_right(x: Nat, bits: int) -> Nat:
    return Nat._wrap(_shr_bits(x.limbs, bits))


def divmod_radix(x: Nat, r: Radix) -> tuple[Nat, int]:
    """(x div n, x mod n); a limb shift for the limb base."""
    limbs = x.limbs
    if r.is_limb_base:
        if not limbs:
            return ZERO, 0
        return Nat._wrap(list(limbs[1:])), limbs[0]
    if r.is_pow2:
        b = r.n.bit_length() - 1
        low = limbs[0] & (r.n - 1) if limbs else 0
        return Nat._wrap(_shr_bits(limbs, b)), low
    q, rem = _divmod_small(limbs, r.n)
    return Nat._wrap(q), rem


def mod_radix(x: Nat, r: Radix) -> int:
    """x mod n."""
    limbs = x.limbs
    if not limbs:
        return 0
    if r.is_pow2:
        return limbs[0] & (r.n - 1)
    return _mod_small(limbs, r.n)


@functools.lru_cache(maxsize=256)
def radix_power(r: Radix, k: int) -> Nat:
    """n**k."""
    if r.is_pow2:
        return shift_left(ONE, k * (r.n.bit_length() - 1))
    out = [1]
    for _ in range(k):
        out = _mul_digit(out, r.n)
    return Nat._wrap(out)


def _low_digits(x: Nat, r: Radix, k: int) -> tuple[list[int], Nat]:
    digits = []
    for _ in range(k):
        x, d = divmod_radix(x, r)
        digits.append(d)
    return digits, x


def to_digits(x: Nat, r: Radix, k: int) -> list[int]:
    """Exactly k base-n digits of x, least significant first."""
    digits, rest = _low_digits(x, r, k)
    if rest:
        raise OutOfRange(f"value does not fit in {k} digits of radix {r}")
    return digits


def from_digits(ds: Sequence[int], r: Radix) -> Nat:
    n = r.n
    for d in ds:
        if not 0 <= d < n:
            raise DomainError(f"digit {d} invalid for radix {r}")
    if r.is_limb_base:
        return Nat._wrap(list(ds))
    acc: list[int] = []
    for d in reversed(ds):
        acc = _mul_digit(acc, n, d)
    return Nat._wrap(acc)


def mod_pow_of_radix(x: Nat, r: Radix, k: int) -> Nat:
    """x mod n**k."""
    limbs = x.limbs
    if r.is_pow2:
        bits = k * (r.n.bit_length() - 1)
        q, rem = divmod(bits, LIMB_BITS)
        out = list(limbs[:q + 1])
        if len(out) > q:
            out[q] &= (1 << rem) - 1
        return Nat._wrap(out)
    if _cmp(limbs, radix_power(r, k).limbs) < 0:
        return x
    digits, _ = _low_digits(x, r, k)
    return from_digits(digits, r)
