"""Binary Goppa codes Gamma(L, G) over GF(2^m).

A binary word a is a codeword iff sum_i a_i / (x - L_i) = 0 mod G(x). The
field parity-check matrix has entry L_j^i / G(L_j) in row i, and its binary
image expands each entry to m rows in the polynomial basis (bit b of the
row-i entry lands in binary row m*i + b).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .errors import (
    InconsistentLocationError,
    InvalidPolynomialError,
    ShapeError,
    UnsupportedCheckError,
)
from .gf2linalg import BitMatrix, support, word_to_text
from .gf2m import FieldSpec
from .poly2m import Poly


def location_set(field: FieldSpec, G: Poly) -> tuple[int, ...]:
    """Nonroots of G in canonical order: alpha^0, alpha^1, ..., then 0 last."""
    if G.is_zero():
        raise InvalidPolynomialError("the zero polynomial has no location set")
    locs = [a for a in field.antilog_table if G.eval(a)]
    if G.eval(0):
        locs.append(0)
    return tuple(locs)


def field_parity_matrix(field: FieldSpec, G: Poly, locations: Sequence[int]) -> list[list[int]]:
    F = field
    inv_g = []
    for a in locations:
        g = G.eval(a)
        if g == 0:
            raise InconsistentLocationError(f"G vanishes at location {a}")
        inv_g.append(F.inv(g))
    rows = []
    current = inv_g
    for _ in range(G.degree):
        rows.append(list(current))
        current = [F.mul(c, a) for c, a in zip(current, locations)]
    return rows


def expand_row(field_row: Sequence[int], m: int) -> list[int]:
    """The m binary rows (as bitsets over positions) of one field row."""
    out = [0] * m
    for col, e in enumerate(field_row):
        while e:
            low = e & -e
            out[low.bit_length() - 1] |= 1 << col
            e ^= low
    return out


def binary_expand(field_rows: Sequence[Sequence[int]], m: int) -> BitMatrix:
    n = len(field_rows[0]) if field_rows else 0
    rows: list[int] = []
    for fr in field_rows:
        rows.extend(expand_row(fr, m))
    return BitMatrix(n, tuple(rows))


def collapse_rows(H_bin: BitMatrix, m: int) -> list[list[int]]:
    """Inverse of binary_expand: rebuild field entries from groups of m rows."""
    out = []
    for start in range(0, H_bin.n_rows, m):
        group = H_bin.rows[start:start + m]
        out.append([
            sum(((r >> col) & 1) << b for b, r in enumerate(group))
            for col in range(H_bin.n_cols)
        ])
    return out


@dataclass(eq=False)
class GoppaCode:
    field: FieldSpec
    poly: Poly
    locations: tuple[int, ...]
    family: int | None = None
    label: str = ""
    _generator: BitMatrix | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.locations = tuple(self.locations)
        if len(set(self.locations)) != len(self.locations):
            raise InconsistentLocationError("duplicate locations")

    @property
    def n(self) -> int:
        return len(self.locations)

    @cached_property
    def index(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.locations)}

    @cached_property
    def H_field(self) -> list[list[int]]:
        return field_parity_matrix(self.field, self.poly, self.locations)

    @cached_property
    def H_bin(self) -> BitMatrix:
        return binary_expand(self.H_field, self.field.m)

    @cached_property
    def rank(self) -> int:
        return self.H_bin.rank()

    @cached_property
    def generator(self) -> BitMatrix:
        if self._generator is not None:
            return self._generator
        return self.H_bin.nullspace()

    @cached_property
    def residues(self) -> list[int]:
        return residue_keys(self)

    @property
    def k(self) -> int:
        if self._generator is not None:
            return self._generator.n_rows
        return self.n - self.rank

    @property
    def design_distance(self) -> int:
        return 2 * self.poly.degree + 1

    def position_of(self, element: int) -> int:
        return self.index[element]

    def is_codeword(self, word: int) -> bool:
        return self.H_bin.annihilates(word)

    def syndrome_is_zero(self, word: int) -> bool:
        return syndrome_is_zero(self, word)

    def summary(self) -> dict:
        return {
            "l": self.field.l,
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "G": self.poly.to_list(),
        }

    def field_matrix_text(self) -> str:
        return "".join(" ".join(str(e) for e in row) + "\n" for row in self.H_field)

    def binary_matrix_text(self) -> str:
        return self.H_bin.to_text()


def code_new(
    field: FieldSpec,
    G: Poly,
    L: Sequence[int] | None = None,
    *,
    family: int | None = None,
    label: str = "",
) -> GoppaCode:
    """Gamma(L, G); L defaults to the full canonical location set of G."""
    if G.is_zero():
        raise InvalidPolynomialError("Goppa polynomial must be nonzero")
    if L is None:
        L = location_set(field, G)
    for a in L:
        if G.eval(a) == 0:
            raise InconsistentLocationError(f"G vanishes at location {a}")
    return GoppaCode(field, G, tuple(L), family=family, label=label)


def _residue_inverse(G: Poly, a: int) -> list[int]:
    """Coefficients of 1/(x - a) mod G, given G(a) != 0.

    Synthetic division gives G(x) = (x - a) q(x) + G(a), so
    (x - a) * q(x) / G(a) = 1 mod G (signs vanish in characteristic 2).
    """
    F = G.field
    coeffs = G.coeffs
    d = len(coeffs) - 1
    q = [0] * d
    acc = 0
    for i in range(d, 0, -1):
        acc = F.mul(acc, a) ^ coeffs[i]
        q[i - 1] = acc
    g_a = F.mul(acc, a) ^ coeffs[0]
    if g_a == 0:
        raise InconsistentLocationError(f"G vanishes at {a}")
    s = F.inv(g_a)
    return [F.mul(c, s) for c in q]


def residue_keys(code: GoppaCode) -> list[int]:
    """1/(x - a) mod G for each location a, coefficients packed m bits apiece."""
    m = code.field.m
    keys = []
    for a in code.locations:
        key = 0
        for i, c in enumerate(_residue_inverse(code.poly, a)):
            key |= c << (m * i)
        keys.append(key)
    return keys


def syndrome_is_zero(code: GoppaCode, word: int, n: int | None = None) -> bool:
    """Check sum_i a_i / (x - L_i) = 0 mod G directly, without the parity-check matrix."""
    if word < 0 or word >> code.n:
        raise ShapeError(f"word does not fit in length {code.n}")
    if n is not None and n != code.n:
        raise ShapeError(f"word length {n} != code length {code.n}")
    keys = code.residues
    acc = 0
    for pos in support(word):
        acc ^= keys[pos]
    return acc == 0


def shorten(code: GoppaCode, position: int) -> GoppaCode:
    """Keep codewords that vanish at `position`, then delete that coordinate.

    Works on the generator rows; the result is again a Goppa code over the
    reduced location set, carrying the generator obtained here.
    """
    if not 0 <= position < code.n:
        raise IndexError(f"position {position} out of range for n={code.n}")
    bit = 1 << position
    rows = list(code.generator.rows)
    pivot = next((i for i, r in enumerate(rows) if r & bit), None)
    if pivot is not None:
        prow = rows.pop(pivot)
        rows = [r ^ prow if r & bit else r for r in rows]
    low_mask = bit - 1
    squeezed = [(r & low_mask) | ((r >> (position + 1)) << position) for r in rows]
    locs = code.locations[:position] + code.locations[position + 1:]
    gen = BitMatrix(len(locs), tuple(squeezed))
    return GoppaCode(
        code.field, code.poly, locs, family=code.family,
        label=code.label + "*" if code.label else "", _generator=gen,
    )


def _inverse_weighted_row(code: GoppaCode) -> list[int]:
    F = code.field
    if 0 in code.index:
        raise UnsupportedCheckError("inverse-weighted row needs 0 outside the location set")
    return [F.inv(F.mul(a, code.poly.eval(a))) for a in code.locations]


def redundant_row(code: GoppaCode, row_kind: str) -> list[int]:
    """Binary rows of the claimed extra parity row, as bitsets over positions."""
    if row_kind == "inverse_weighted":
        if code.family not in (1, 4):
            raise UnsupportedCheckError(f"inverse-weighted row is not claimed for family {code.family}")
        return expand_row(_inverse_weighted_row(code), code.field.m)
    if row_kind == "all_ones":
        if code.family == 1:
            # the 0 location, when present, carries a 0
            return [sum(1 << j for j, a in enumerate(code.locations) if a)]
        if code.family == 3:
            return [(1 << code.n) - 1]
        raise UnsupportedCheckError(f"all-ones row is not claimed for family {code.family}")
    raise UnsupportedCheckError(f"unknown row kind {row_kind!r}")


def verify_redundant_row(code: GoppaCode, row_kind: str) -> bool:
    """True iff every binary row of the claimed row lies in the row space of H_bin."""
    rows = redundant_row(code, row_kind)
    reduced = code.H_bin.rref()
    return all(reduced.contains_in_row_space(r) for r in rows)


def codeword_text(word: int, n: int) -> str:
    return word_to_text(word, n)
