"""The chain of ten Goppa codes for a given l, the position maps between
neighbours, and the structural checks that tie them together.

Relocation rule used throughout: if G'(x) = c * G(b x + g), then a codeword
of Gamma(L, G) carried from location a to (a - g) / b is a codeword of
Gamma(L', G').
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .errors import ExhaustionError, InapplicableError, InvalidMapError
from .gf2linalg import BitMatrix, row_space_equal, support
from .gf2m import FieldSpec
from .goppa import GoppaCode, code_new, shorten, syndrome_is_zero, verify_redundant_row
from .poly2m import Poly, goppa_polynomial

CODE_IDS = ("1", "1s", "2", "3", "3s", "4", "4s", "5", "6", "7")
FAMILY = {"1": 1, "1s": 1, "2": 2, "3": 3, "3s": 3, "4": 4, "4s": 4, "5": 5, "6": 6, "7": 7}
MAX_DRAWS = 10_000


def code_name(code_id: str) -> str:
    fam = FAMILY[code_id]
    star = "*" if code_id.endswith("s") else ""
    return f"Gamma(L{fam}{star},G{fam})"


@dataclass(frozen=True)
class ChainParams:
    """Field constants of one chain instance; all derived from (A, beta3, beta8)."""

    A: int
    beta3: int
    beta8: int
    C: int
    D: int  # G5(beta8), normaliser for the shift 5 -> 6
    R: int
    V: int
    beta9: int  # V^t / R
    E: int  # G6(beta9), normaliser for the shift 6 -> 7
    B: int
    seed: int | None = None
    draws: int = 1
    literal_condition_admitted_c_zero: int = 0

    def to_dict(self) -> dict[str, int | None]:
        return {
            "A": self.A, "beta3": self.beta3, "beta8": self.beta8, "C": self.C,
            "R": self.R, "V": self.V, "B": self.B, "beta9": self.beta9,
            "seed": self.seed, "draws": self.draws,
            "literal_condition_admitted_c_zero": self.literal_condition_admitted_c_zero,
        }


def derive_params(field: FieldSpec, A: int, beta3: int, beta8: int, **extra) -> ChainParams | None:
    """Compute C, R, V, B from (A, beta3, beta8); None if a constraint fails."""
    F = field
    t = F.t
    if A == 0:
        return None
    At = F.pow(A, t)
    C = F.mul(At, F.pow(beta3, t) if beta3 else 0) ^ F.mul(A, beta3)
    if C == 0 or not F.in_subfield(C):
        return None
    if beta8 == F.div(At, C):
        return None
    G5 = goppa_polynomial(5, F, {"A": A, "C": C})
    D = G5.eval(beta8)
    if D == 0:
        return None
    R = F.div(C, D)
    V = F.div(A ^ F.mul(C, F.pow(beta8, t) if beta8 else 0), D)
    if V == 0 or not F.in_subfield(R):
        return None
    beta9 = F.div(F.pow(V, t), R)
    E = goppa_polynomial(6, F, {"R": R, "V": V}).eval(beta9)
    if E == 0:
        return None
    B = F.div(R, E)
    return ChainParams(A, beta3, beta8, C, D, R, V, beta9, E, B, **extra)


def sample_params(field: FieldSpec, seed: int) -> ChainParams:
    """Seeded rejection sampling of valid chain constants."""
    F = field
    rng = random.Random(seed)
    literal_misses = 0
    for draw in range(1, MAX_DRAWS + 1):
        A = rng.randrange(1, F.size)
        beta3 = rng.randrange(F.size)
        beta8 = rng.randrange(F.size)
        At = F.pow(A, F.t)
        C = F.mul(At, F.pow(beta3, F.t) if beta3 else 0) ^ F.mul(A, beta3)
        if C == 0:
            # beta3 != A^-(t-1) alone does not exclude C = 0
            if beta3 != F.inv(F.pow(A, F.t - 1)):
                literal_misses += 1
            continue
        params = derive_params(
            F, A, beta3, beta8,
            seed=seed, draws=draw, literal_condition_admitted_c_zero=literal_misses,
        )
        if params is not None:
            return params
    raise ExhaustionError(f"no valid chain parameters after {MAX_DRAWS} draws")


@dataclass(frozen=True)
class PositionMap:
    """Partial map from the positions of `src` to those of `dst`.

    perm[i] is the target position of source position i, or None where the
    map drops the coordinate.
    """

    src: str
    dst: str
    kind: str
    perm: tuple[int | None, ...]
    params: tuple = ()

    def is_injective(self) -> bool:
        hit = [p for p in self.perm if p is not None]
        return len(hit) == len(self.perm) and len(set(hit)) == len(hit)

    def is_bijective(self, n_dst: int) -> bool:
        return self.is_injective() and len(self.perm) == n_dst

    def then(self, other: PositionMap) -> PositionMap:
        if self.dst != other.src:
            raise InvalidMapError(f"cannot compose {self.src}->{self.dst} with {other.src}->{other.dst}")
        perm = tuple(None if p is None else other.perm[p] for p in self.perm)
        return PositionMap(self.src, other.dst, "composite", perm, (self.kind, other.kind))

    def apply(self, word: int) -> int:
        """Carry a word along the map; bits on dropped positions are discarded."""
        out = 0
        for i in support(word):
            p = self.perm[i]
            if p is not None:
                out |= 1 << p
        return out


def map_from_function(
    src: GoppaCode, dst: GoppaCode, fn: Callable[[int], int | None], kind: str,
    params: tuple = (), src_id: str = "", dst_id: str = "",
) -> PositionMap:
    perm = []
    for a in src.locations:
        b = fn(a)
        if b is None:
            perm.append(None)
            continue
        if b not in dst.index:
            raise InvalidMapError(f"{kind} map sends {a} to {b}, which is not a location of the target")
        perm.append(dst.index[b])
    return PositionMap(src_id or src.label, dst_id or dst.label, kind, tuple(perm), params)


def identity_map(src: GoppaCode, dst: GoppaCode, src_id: str = "", dst_id: str = "") -> PositionMap:
    return map_from_function(src, dst, lambda a: a, "identity", (), src_id, dst_id)


def affine_map(
    field: FieldSpec, src: GoppaCode, dst: GoppaCode, b: int, g: int,
    src_id: str = "", dst_id: str = "",
) -> PositionMap:
    """Map induced by the substitution x -> b x + g: location a goes to (a - g) / b."""
    return map_from_function(
        src, dst, lambda a: field.div(a ^ g, b), "affine", (b, g), src_id, dst_id
    )


def inversion_map(
    field: FieldSpec, src: GoppaCode, dst: GoppaCode, c: int,
    src_id: str = "", dst_id: str = "",
) -> PositionMap:
    """a -> c / a on nonzero locations; the 0 location, if any, is dropped."""
    return map_from_function(
        src, dst, lambda a: field.div(c, a) if a else None, "inversion", (c,), src_id, dst_id
    )


def drop_zero_map(src: GoppaCode, dst: GoppaCode, src_id: str = "", dst_id: str = "") -> PositionMap:
    return map_from_function(src, dst, lambda a: a if a else None, "drop_zero", (), src_id, dst_id)


def parity_matrix(code: GoppaCode) -> BitMatrix:
    """Check matrix of the code as actually held: H_bin, or the dual of a preset generator."""
    if code._generator is not None:
        return code._generator.nullspace()
    return code.H_bin


@dataclass
class Chain:
    field: FieldSpec
    params: ChainParams
    polys: dict[str, Poly]
    codes: dict[str, GoppaCode]
    maps: dict[tuple[str, str], PositionMap] = dc_field(default_factory=dict)

    @property
    def l(self) -> int:
        return self.field.l

    def __getitem__(self, code_id: str) -> GoppaCode:
        return self.codes[code_id]

    def path_map(self, ids: Sequence[str]) -> PositionMap:
        """Compose the adjacent maps along ids[0] -> ids[1] -> ..."""
        out = self.maps[(ids[0], ids[1])]
        for a, b in zip(ids[1:], ids[2:]):
            out = out.then(self.maps[(a, b)])
        return out


def build_chain(field: FieldSpec, params: ChainParams) -> Chain:
    F = field
    t = F.t
    p = params
    polys = {
        "1": goppa_polynomial(1, F),
        "2": goppa_polynomial(2, F, {"A": p.A}),
        "3": goppa_polynomial(3, F, {"A": p.A, "C": p.C}),
        "4": goppa_polynomial(4, F, {"A": p.A}),
        "5": goppa_polynomial(5, F, {"A": p.A, "C": p.C}),
        "6": goppa_polynomial(6, F, {"R": p.R, "V": p.V}),
        "7": goppa_polynomial(7, F, {"B": p.B}),
    }
    codes: dict[str, GoppaCode] = {}
    for cid in ("1", "2", "3", "4", "5", "6", "7"):
        codes[cid] = code_new(F, polys[cid], family=FAMILY[cid], label=cid)
    for cid in ("1", "3", "4"):
        base = codes[cid]
        codes[cid + "s"] = shorten(base, base.position_of(0))
        codes[cid + "s"].label = cid + "s"
    codes = {cid: codes[cid] for cid in CODE_IDS}

    lam = F.div(p.C, F.pow(p.A, t + 1))
    c = codes
    maps = {}

    def put(m: PositionMap) -> None:
        maps[(m.src, m.dst)] = m

    put(drop_zero_map(c["1"], c["1s"], "1", "1s"))
    put(affine_map(F, c["1s"], c["2"], p.A, 0, "1s", "2"))  # G2(x) = (x G1)(A x)
    put(affine_map(F, c["2"], c["3"], 1, p.beta3, "2", "3"))  # G3(x) = G2(x + beta3)
    put(drop_zero_map(c["3"], c["3s"], "3", "3s"))
    put(inversion_map(F, c["3s"], c["4"], F.div(p.C, F.mul(p.A, p.A)), "3s", "4"))
    put(drop_zero_map(c["4"], c["4s"], "4", "4s"))
    put(affine_map(F, c["4s"], c["5"], lam, 0, "4s", "5"))  # G5 ~ (x G4)(lam x)
    put(affine_map(F, c["5"], c["6"], 1, p.beta8, "5", "6"))  # G6 ~ G5(x + beta8)
    put(affine_map(F, c["6"], c["7"], 1, p.beta9, "6", "7"))  # G7 ~ G6(x + beta9)
    return Chain(F, p, polys, codes, maps)


def verify_equivalence(a: GoppaCode, b: GoppaCode, pmap: PositionMap) -> bool:
    """Codeword sets agree once b's coordinates are pulled back along pmap."""
    if not pmap.is_bijective(b.n) or len(pmap.perm) != a.n:
        raise InvalidMapError(f"map {pmap.src}->{pmap.dst} is not a bijection between the location sets")
    Hb = parity_matrix(b).select_columns(pmap.perm)
    return row_space_equal(parity_matrix(a), Hb)


def verify_zero_position(code: GoppaCode) -> bool:
    """Every codeword vanishes at the position of the field element 0."""
    if 0 not in code.index:
        raise InapplicableError("0 is not a location of this code")
    bit = 1 << code.position_of(0)
    return all(not r & bit for r in code.generator.rows)


def verify_subcode(sub: GoppaCode, sup: GoppaCode, pmap: PositionMap) -> bool:
    """Every generator row of sub, relocated by pmap, is a codeword of sup."""
    if not pmap.is_injective() or len(pmap.perm) != sub.n or max(pmap.perm, default=-1) >= sup.n:
        raise InvalidMapError(f"map {pmap.src}->{pmap.dst} is not an injection")
    return all(syndrome_is_zero(sup, pmap.apply(r)) for r in sub.generator.rows)


def _extend_by_parity(H: BitMatrix) -> BitMatrix:
    """[H 0; 1...1 1]: the check matrix of the parity-extended code."""
    n = H.n_cols
    return H.append_column(0).with_rows([(1 << (n + 1)) - 1])


def _into_extension(chain: Chain, target_path: Sequence[str]) -> list[int]:
    """Columns of (target code + trailing parity column) for each L1* position.

    L1* is carried to L3 along 1s -> 2 -> 3; the 0 of L3 lands on the parity
    column, every other location follows 3s -> 4 -> ... -> target_path[-1].
    """
    to3 = chain.path_map(["1s", "2", "3"])
    rest = chain.path_map(list(target_path))
    c3 = chain["3"]
    c3s = chain["3s"]
    ext_col = chain[target_path[-1]].n
    cols = []
    for p3 in to3.perm:
        a = c3.locations[p3]
        if a == 0:
            cols.append(ext_col)
        else:
            cols.append(rest.perm[c3s.position_of(a)])
    return cols


def verify_block_identity(chain: Chain) -> bool:
    """[H1*; 1...1] and [H4* 0; 1...1 1] span the same space after alignment."""
    c1s = chain["1s"]
    left = parity_matrix(c1s).with_rows([(1 << c1s.n) - 1])
    right = _extend_by_parity(parity_matrix(chain["4s"]))
    if left.n_cols != right.n_cols:
        return False
    cols = _into_extension(chain, ["3s", "4", "4s"])
    return row_space_equal(left, right.select_columns(cols))


def verify_end_to_end(chain: Chain) -> bool:
    """Gamma(L1*,G1) equals the parity extension of Gamma(L7,G7) in one step."""
    right = _extend_by_parity(parity_matrix(chain["7"]))
    cols = _into_extension(chain, ["3s", "4", "4s", "5", "6", "7"])
    return row_space_equal(parity_matrix(chain["1s"]), right.select_columns(cols))


def verify_zero_deletion(chain: Chain) -> bool:
    """Gamma(L4,G4) and Gamma(L4*,G4) agree: zero column always 0, same dimension."""
    c4, c4s = chain["4"], chain["4s"]
    back = identity_map(c4s, c4, "4s", "4")
    return verify_zero_position(c4) and c4.k == c4s.k and verify_subcode(c4s, c4, back)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    codes: tuple[str, ...] = ()


def _check(name: str, fn: Callable[[], bool], codes: Sequence[str] = (), detail: str = "") -> CheckResult:
    try:
        ok = bool(fn())
    except Exception as exc:  # a raised error is a failed check, reported by name
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}", tuple(codes))
    return CheckResult(name, ok, detail, tuple(codes))


def chain_checks(chain: Chain) -> list[CheckResult]:
    """Structural checks (redundant rows, equivalences, embeddings, zero position)."""
    c = chain.codes
    m = chain.maps
    return [
        _check("lemma1_redundant_row", lambda: verify_redundant_row(c["1s"], "inverse_weighted"), ["1s"]),
        _check("h1_all_ones_row", lambda: verify_redundant_row(c["1"], "all_ones"), ["1"]),
        _check("l1_star_is_shortening", lambda: c["1s"].k == c["1"].k - 1, ["1", "1s"]),
        _check("lemma2_equivalence",
               lambda: verify_equivalence(c["1s"], c["2"], m[("1s", "2")]), ["1s", "2"]),
        _check("lemma3_equivalence",
               lambda: verify_equivalence(c["2"], c["3"], m[("2", "3")]), ["2", "3"]),
        _check("h3_all_ones_row", lambda: verify_redundant_row(c["3"], "all_ones"), ["3"]),
        _check("lemma4_zero_position", lambda: verify_zero_position(c["4"]), ["4"]),
        _check("corollary2_zero_deletion", lambda: verify_zero_deletion(chain), ["4", "4s"]),
        _check("lemma5_redundant_row", lambda: verify_redundant_row(c["4s"], "inverse_weighted"), ["4s"]),
        _check("definition3_shortening", lambda: c["3s"].k == c["3"].k - 1, ["3", "3s"]),
        _check("lemma6_subcode", lambda: verify_subcode(c["3s"], c["4"], m[("3s", "4")]), ["3s", "4"]),
        _check("corollary3_block_identity", lambda: verify_block_identity(chain), ["1s", "4s"]),
        _check("lemma7_equivalence",
               lambda: verify_equivalence(c["4s"], c["5"], m[("4s", "5")]), ["4s", "5"]),
        _check("lemma8_equivalence",
               lambda: verify_equivalence(c["5"], c["6"], m[("5", "6")]), ["5", "6"]),
        _check("lemma9_equivalence",
               lambda: verify_equivalence(c["6"], c["7"], m[("6", "7")]), ["6", "7"]),
        _check("composed_equivalence_1s_to_3",
               lambda: verify_equivalence(c["1s"], c["3"], chain.path_map(["1s", "2", "3"])),
               ["1s", "3"]),
        _check("composed_equivalence_4s_to_7",
               lambda: verify_equivalence(c["4s"], c["7"], chain.path_map(["4s", "5", "6", "7"])),
               ["4s", "7"]),
        _check("end_to_end_1s_to_extended_7", lambda: verify_end_to_end(chain), ["1s", "7"]),
    ]


def table1_expected(l: int) -> dict[str, tuple[int, int]]:
    """(n, k) of every chain member from the closed-form length and dimension formulas."""
    q = 1 << (2 * l)
    t = 1 << l
    # 2l (t - 3/2) = l (2t - 3)
    k1 = q - t - l * (2 * t - 3)
    k2 = k1 - 1
    return {
        "1": (q - t + 1, k1),
        "1s": (q - t, k1 - 1),
        "2": (q - t, k2),
        "3": (q - t, k2),
        "3s": (q - t - 1, k2 - 1),
        "4": (q - t, k2),
        "4s": (q - t - 1, k2),
        "5": (q - t - 1, k2),
        "6": (q - t - 1, k2),
        "7": (q - t - 1, k2),
    }


def table1_deviations(chain: Chain) -> list[str]:
    expected = table1_expected(chain.l)
    out = []
    for cid, code in chain.codes.items():
        n, k = expected[cid]
        if (code.n, code.k) != (n, k):
            out.append(f"{cid}: computed (n={code.n}, k={code.k}), formula (n={n}, k={k})")
    return out
