"""Linear algebra over GF(2) with rows stored as int bitsets.

Bit j of a row is the entry in column j. Python ints give packed words of
any width, so an n-column row is a single XOR-able value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import CapExceededError, ShapeError

DEFAULT_CAP = 28


def weight(word: int) -> int:
    return word.bit_count()


def support(word: int) -> list[int]:
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length() - 1)
        word ^= low
    return out


def word_from_support(positions: Iterable[int]) -> int:
    w = 0
    for p in positions:
        w |= 1 << p
    return w


def word_to_text(word: int, n: int) -> str:
    return "".join("1" if word >> j & 1 else "0" for j in range(n))


def word_from_text(text: str) -> int:
    return sum(1 << j for j, ch in enumerate(text) if ch == "1")


def _rref_rows(rows: Sequence[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced echelon rows (zero rows dropped) and their pivot columns."""
    work = [r for r in rows if r]
    pivots: list[int] = []
    rank = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


@dataclass(frozen=True)
class BitMatrix:
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ShapeError(f"row {r:#x} does not fit in {self.n_cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[int], n_cols: int) -> BitMatrix:
        return cls(n_cols, tuple(rows))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(n_cols, tuple(word_from_support(j for j, b in enumerate(r) if b) for r in rows))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_cols, (0,) * n_rows)

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        n_cols = len(lines[0]) if lines else 0
        if any(len(ln) != n_cols for ln in lines):
            raise ShapeError("ragged rows in matrix text")
        return cls(n_cols, tuple(word_from_text(ln) for ln in lines))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n_cols)] for r in self.rows]

    def to_text(self) -> str:
        return "\n".join(word_to_text(r, self.n_cols) for r in self.rows) + ("\n" if self.rows else "")

    def rref(self) -> BitMatrix:
        rows, _ = _rref_rows(self.rows, self.n_cols)
        return BitMatrix(self.n_cols, tuple(rows))

    def pivots(self) -> list[int]:
        return _rref_rows(self.rows, self.n_cols)[1]

    def rank(self) -> int:
        return len(_rref_rows(self.rows, self.n_cols)[0])

    def nullspace(self) -> BitMatrix:
        """Basis of {v : M v^T = 0}, one row per free column."""
        reduced, pivots = _rref_rows(self.rows, self.n_cols)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            v = 1 << free
            fbit = 1 << free
            for row, p in zip(reduced, pivots):
                if row & fbit:
                    v |= 1 << p
            basis.append(v)
        return BitMatrix(self.n_cols, tuple(basis))

    def mul_vec(self, v: int) -> int:
        """Syndrome M v^T as an int whose bit i is row i's parity."""
        s = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                s |= 1 << i
        return s

    def annihilates(self, v: int) -> bool:
        return all(not (r & v).bit_count() & 1 for r in self.rows)

    def contains_in_row_space(self, v: int) -> bool:
        reduced, pivots = _rref_rows(self.rows, self.n_cols)
        for row, p in zip(reduced, pivots):
            if v >> p & 1:
                v ^= row
        return v == 0

    def stack(self, other: BitMatrix) -> BitMatrix:
        if other.n_cols != self.n_cols:
            raise ShapeError(f"cannot stack {self.n_cols} and {other.n_cols} columns")
        return BitMatrix(self.n_cols, self.rows + other.rows)

    def with_rows(self, extra: Iterable[int]) -> BitMatrix:
        return BitMatrix(self.n_cols, self.rows + tuple(extra))

    def select_columns(self, cols: Sequence[int]) -> BitMatrix:
        """New matrix whose column i is column cols[i] of self."""
        out = []
        for r in self.rows:
            w = 0
            for i, c in enumerate(cols):
                if r >> c & 1:
                    w |= 1 << i
            out.append(w)
        return BitMatrix(len(cols), tuple(out))

    def delete_column(self, j: int) -> BitMatrix:
        if not 0 <= j < self.n_cols:
            raise IndexError(f"column {j} out of range")
        return self.select_columns([c for c in range(self.n_cols) if c != j])

    def append_column(self, bits: int) -> BitMatrix:
        """Add a last column whose entry in row i is bit i of `bits`."""
        n = self.n_cols
        return BitMatrix(n + 1, tuple(r | ((bits >> i & 1) << n) for i, r in enumerate(self.rows)))


def rref(M: BitMatrix) -> BitMatrix:
    return M.rref()


def rank(M: BitMatrix) -> int:
    return M.rank()


def nullspace_basis(M: BitMatrix) -> BitMatrix:
    return M.nullspace()


def row_space_equal(M: BitMatrix, N: BitMatrix) -> bool:
    if M.n_cols != N.n_cols:
        raise ShapeError(f"column counts differ: {M.n_cols} vs {N.n_cols}")
    return M.rref().rows == N.rref().rows


def _check_cap(k: int, cap: int) -> None:
    if k > cap:
        raise CapExceededError(k, cap)


def gray_codewords(rows: Sequence[int], prefix: int = 0) -> Iterator[int]:
    """Yield prefix ^ c for every combination c of rows, in Gray-code order.

    Step i flips the row indexed by the lowest set bit of i, so each step
    costs one XOR. The starting word itself is yielded only when nonzero,
    so prefix=0 gives exactly the 2^k - 1 nonzero combinations.
    """
    word = prefix
    if prefix:
        yield word
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        yield word


def enumerate_codewords(
    G: BitMatrix,
    visitor: Callable[[int, int], object],
    cap: int = DEFAULT_CAP,
) -> int:
    """Call visitor(word, weight) on every nonzero codeword spanned by G's rows.

    G's rows must be linearly independent for words to be distinct.
    Returns the number of words visited.
    """
    _check_cap(G.n_rows, cap)
    count = 0
    for w in gray_codewords(G.rows):
        visitor(w, w.bit_count())
        count += 1
    return count


def enumerate_naive(G: BitMatrix) -> Iterator[int]:
    """All nonzero combinations by coefficient mask; the oracle for the Gray walk."""
    rows = G.rows
    for mask in range(1, 1 << len(rows)):
        w = 0
        for i, r in enumerate(rows):
            if mask >> i & 1:
                w ^= r
        yield w


def min_weight_gray(rows: Sequence[int], parity: int | None = None, prefix: int = 0) -> tuple[int, int, int]:
    """Minimum nonzero weight over prefix ^ span(rows), walked in Gray order.

    With parity set, only words of weight = parity (mod 2) qualify. Returns
    (weight, word, count); weight and word are 0 when nothing qualifies. The
    earliest word reaching the minimum wins ties.
    """
    best_w, best = 0, 0
    word = prefix
    wt = word.bit_count()
    if wt and (parity is None or wt & 1 == parity):
        best_w, best = wt, word
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        wt = word.bit_count()
        if wt and (best_w == 0 or wt < best_w) and (parity is None or wt & 1 == parity):
            best_w, best = wt, word
    count = (1 << len(rows)) - (0 if prefix else 1)
    return best_w, best, count
