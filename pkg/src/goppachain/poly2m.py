"""Dense polynomials over GF(2^m) and the seven Goppa polynomial families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    DegenerateScaleError,
    DegenerateSubstitutionError,
    InvalidParameterError,
    SubfieldViolationError,
)
from .gf2m import FieldSpec


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True, init=False)
class Poly:
    """Polynomial with coefficients in `field`; coeffs[i] multiplies x^i."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __init__(self, field: FieldSpec, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff: int = 1) -> Poly:
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Mapping[int, int]) -> Poly:
        """Build from {degree: coefficient}; repeated degrees are not merged."""
        coeffs = [0] * (max(terms, default=-1) + 1)
        for deg, c in terms.items():
            coeffs[deg] = c
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and mon:
                terms.append(mon)
            else:
                terms.append(f"{c}{'*' + mon if mon else ''}")
        return f"Poly({' + '.join(terms)})"

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.mul(acc, x) ^ c
        return acc

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= F.mul(a, b)
        return Poly(F, out)

    def derivative(self) -> Poly:
        # in characteristic 2 only odd-degree terms survive
        return Poly(self.field, [c if i % 2 else 0 for i, c in enumerate(self.coeffs[1:], 1)])

    def scale(self, c: int) -> Poly:
        if c == 0:
            raise DegenerateScaleError("scaling by zero")
        F = self.field
        return Poly(F, [F.mul(a, c) for a in self.coeffs])

    def substitute_affine(self, b: int, g: int) -> Poly:
        """Return p(b*x + g)."""
        if b == 0:
            raise DegenerateSubstitutionError("substitution x -> b*x + g needs b != 0")
        F = self.field
        lin = Poly(F, [g, b])
        out = Poly(F)
        # Horner in the polynomial ring
        for c in reversed(self.coeffs):
            out = out * lin + Poly(F, [c])
        return out

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = F.mul(c, lead_inv)
            quot[i - d] = q
            for j, oc in enumerate(other.coeffs):
                if oc:
                    rem[i - d + j] ^= F.mul(q, oc)
        return Poly(F, quot), Poly(F, rem[:d])

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def roots(self) -> list[int]:
        """All roots in the field, found by exhaustive evaluation."""
        return [a for a in self.field.elements() if self.eval(a) == 0]

    def is_separable(self) -> bool:
        """No repeated roots in GF(2^m), checked root by root via the derivative."""
        dp = self.derivative()
        return all(dp.eval(r) != 0 for r in self.roots())

    def ratio_to(self, other: Poly) -> int | None:
        """The c with self == c * other, or None if no such nonzero c exists."""
        if self.degree != other.degree or self.is_zero():
            return None
        F = self.field
        c = F.div(self.coeffs[-1], other.coeffs[-1])
        return c if other.scale(c) == self else None

    def to_list(self) -> list[int]:
        return list(self.coeffs)


GOPPA_FAMILY_PARAMS = {
    1: (),
    2: ("A",),
    3: ("A", "C"),
    4: ("A",),
    5: ("A", "C"),
    6: ("R", "V"),
    7: ("B",),
}


def goppa_polynomial(family: int, field: FieldSpec, params: Mapping[str, int] | None = None) -> Poly:
    """Goppa polynomial of the given chain family (1..7) over `field`.

    1: x^(t-1) + 1
    2: A^t x^t + A x
    3: A^t x^t + A x + C             (C in GF(2^l))
    4: A^t x^t + A^(t-1) x^(t-1) + 1
    5: C x^(t+1) + A^t x^t + A x     (C in GF(2^l))
    6: R x^(t+1) + V^t x^t + V x + 1 (R in GF(2^l))
    7: B x^(t+1) + 1
    """
    if family not in GOPPA_FAMILY_PARAMS:
        raise InvalidParameterError(f"unknown Goppa family {family}")
    params = dict(params or {})
    F = field
    t = F.t
    for name in GOPPA_FAMILY_PARAMS[family]:
        if not params.get(name):
            raise InvalidParameterError(f"family {family} needs a nonzero {name}")
    for name in ("C", "R"):
        if name in GOPPA_FAMILY_PARAMS[family] and not F.in_subfield(params[name]):
            raise SubfieldViolationError(f"{name}={params[name]} is not in GF(2^{F.l})")

    A = params.get("A", 0)
    if family == 1:
        terms = {t - 1: 1, 0: 1}
    elif family == 2:
        terms = {t: F.pow(A, t), 1: A}
    elif family == 3:
        terms = {t: F.pow(A, t), 1: A, 0: params["C"]}
    elif family == 4:
        terms = {t: F.pow(A, t), t - 1: F.pow(A, t - 1), 0: 1}
    elif family == 5:
        terms = {t + 1: params["C"], t: F.pow(A, t), 1: A}
    elif family == 6:
        V = params["V"]
        terms = {t + 1: params["R"], t: F.pow(V, t), 1: V, 0: 1}
    else:
        terms = {t + 1: params["B"], 0: 1}
    return Poly.from_terms(F, terms)
