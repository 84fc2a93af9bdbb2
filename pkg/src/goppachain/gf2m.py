"""Arithmetic in GF(2^m) with m = 2l, using log/antilog tables.

Elements are plain ints: bit j is the coefficient of alpha^j in the
polynomial basis, where alpha is the class of x modulo the field modulus.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import FieldDomainError, InvalidModulusError, UnsupportedFieldError

MIN_L = 2
MAX_L = 8

# x^4+x+1, x^6+x+1, x^8+x^4+x^3+x^2+1
DEFAULT_MODULI = {4: 0b10011, 6: 0b1000011, 8: 0b100011101}


def _x_order(modulus: int, m: int) -> int:
    """Multiplicative order of x modulo `modulus`, or 0 if x is not a unit of order < 2^m."""
    x = 1
    top = 1 << m
    for k in range(1, top):
        x <<= 1
        if x & top:
            x ^= modulus
        if x == 1:
            return k
        if x == 0:
            return 0
    return 0


def is_primitive_modulus(modulus: int, m: int) -> bool:
    # x has order 2^m - 1 only if the modulus is irreducible of degree m
    if modulus >> m != 1 or not modulus & 1:
        return False
    return _x_order(modulus, m) == (1 << m) - 1


def first_primitive_modulus(m: int) -> int:
    for mask in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_primitive_modulus(mask, m):
            return mask
    raise InvalidModulusError(f"no primitive polynomial of degree {m}")  # pragma: no cover


def default_modulus(m: int) -> int:
    return DEFAULT_MODULI.get(m) or first_primitive_modulus(m)


class FieldSpec:
    """The field GF(2^{2l}) together with its subfield GF(2^l).

    Instances are immutable after construction and may be shared freely.
    """

    __slots__ = ("l", "m", "t", "order", "modulus", "log_table", "antilog_table", "generator")

    def __init__(self, l: int, modulus: int | None = None):
        if not MIN_L <= l <= MAX_L:
            raise UnsupportedFieldError(f"l={l} outside supported range [{MIN_L}, {MAX_L}]")
        m = 2 * l
        if modulus is None:
            modulus = default_modulus(m)
        elif not is_primitive_modulus(modulus, m):
            raise InvalidModulusError(
                f"modulus {modulus:#x} is not a primitive polynomial of degree {m}"
            )
        self.l = l
        self.m = m
        self.t = 1 << l
        self.order = (1 << m) - 1
        self.modulus = modulus
        self.generator = 0b10

        antilog = [0] * self.order
        log = [0] * (1 << m)
        x = 1
        for i in range(self.order):
            antilog[i] = x
            log[x] = i
            x <<= 1
            if x >> m:
                x ^= modulus
        # log_table[0] is a placeholder; zero has no discrete log
        self.antilog_table = tuple(antilog)
        self.log_table = tuple(log)

    def __repr__(self) -> str:
        return f"FieldSpec(l={self.l}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and other.l == self.l
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.l, self.modulus))

    @property
    def size(self) -> int:
        return 1 << self.m

    def elements(self) -> Iterator[int]:
        return iter(range(self.size))

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.size))

    def alpha(self, e: int = 1) -> int:
        """alpha^e for any integer e."""
        return self.antilog_table[e % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldDomainError("log of zero")
        return self.log_table[a]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise FieldDomainError("division by zero")
        if a == 0:
            return 0
        return self.antilog_table[(self.log_table[a] - self.log_table[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDomainError("zero has no inverse")
        return self.antilog_table[-self.log_table[a] % self.order]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e <= 0:
                raise FieldDomainError(f"0^{e} is undefined")
            return 0
        return self.antilog_table[(self.log_table[a] * e) % self.order]

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(2^k)."""
        return self.pow(a, 1 << k) if a else 0

    def in_subfield(self, a: int) -> bool:
        """True iff a lies in GF(2^l), i.e. a^(2^l) == a."""
        return a == 0 or self.pow(a, self.t) == a

    def subfield_elements(self) -> list[int]:
        return [a for a in self.elements() if self.in_subfield(a)]

    def mul_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        from math import gcd

        return self.order // gcd(self.order, self.log(a))

    def norm(self, a: int) -> int:
        """Relative norm to GF(2^l): a^(t+1)."""
        return self.pow(a, self.t + 1) if a else 0

    def root_of_norm(self, b: int) -> int:
        """Some c with c^(t+1) == b; b must be a nonzero subfield element."""
        if b == 0 or not self.in_subfield(b):
            raise FieldDomainError(f"{b} is not a nonzero element of GF(2^{self.l})")
        # norm is onto GF(2^l)*; log(b) is a multiple of t+1
        return self.alpha(self.log(b) // (self.t + 1))

    def to_dict(self) -> dict[str, int]:
        return {"l": self.l, "modulus_mask": self.modulus}


@lru_cache(maxsize=None)
def field_new(l: int, modulus: int | None = None) -> FieldSpec:
    """Build (and cache) GF(2^{2l}) with the default or a supplied primitive modulus."""
    return FieldSpec(l, modulus)
