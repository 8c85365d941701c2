"""Digit-serial modular inverses modulo n**k for any radix n > 1."""

from radixinv.errors import DomainError, InvalidModulus, NotInvertible, OutOfRange
from radixinv.mpcore import LIMB_BITS, Nat, Radix, SNat
from radixinv.power_inverse import (
    InverseTrace,
    invert,
    koc_inverse,
    koc_inverse_pow2_bitwise,
    prefix_inverses,
    radix_inverse,
    radix_inverse_pow2_bitwise,
    reciprocal_power_mod_a,
)

__all__ = [
    "DomainError",
    "InvalidModulus",
    "InverseTrace",
    "LIMB_BITS",
    "Nat",
    "NotInvertible",
    "OutOfRange",
    "Radix",
    "SNat",
    "invert",
    "koc_inverse",
    "koc_inverse_pow2_bitwise",
    "prefix_inverses",
    "radix_inverse",
    "radix_inverse_pow2_bitwise",
    "reciprocal_power_mod_a",
]
