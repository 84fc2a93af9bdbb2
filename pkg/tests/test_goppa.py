from __future__ import annotations

import random

import pytest

from goppachain.errors import (
    InconsistentLocationError,
    InvalidPolynomialError,
    ShapeError,
    UnsupportedCheckError,
)
from goppachain.gf2linalg import row_space_equal
from goppachain.goppa import (
    collapse_rows,
    code_new,
    location_set,
    redundant_row,
    shorten,
    syndrome_is_zero,
    verify_redundant_row,
)
from goppachain.poly2m import Poly, goppa_polynomial


def test_location_set_g1(F2):
    G1 = goppa_polynomial(1, F2)
    L = location_set(F2, G1)
    assert len(L) == 13
    assert not {1, F2.alpha(5), F2.alpha(10)} & set(L)
    assert L[-1] == 0
    assert L[0] == 1 or L[0] == F2.alpha(1)


def test_location_set_g7(F3):
    assert len(location_set(F3, goppa_polynomial(7, F3, {"B": 1}))) == 55


def test_location_set_constant(F2):
    L = location_set(F2, Poly(F2, [1]))
    assert len(L) == 16 and L[-1] == 0
    with pytest.raises(InvalidPolynomialError):
        location_set(F2, Poly(F2))


def test_code_g1_l2(F2):
    code = code_new(F2, goppa_polynomial(1, F2))
    assert (code.n, code.k) == (13, 2)
    assert code.rank == 11
    assert code.k >= code.n - code.poly.degree * F2.m


def test_h_field_entries(F2):
    F = F2
    G = goppa_polynomial(4, F, {"A": 3})
    code = code_new(F, G)
    for i, row in enumerate(code.H_field):
        for j, a in enumerate(code.locations):
            assert row[j] == F.div(F.pow(a, i) if i or a else 1, G.eval(a))
    assert collapse_rows(code.H_bin, F.m) == code.H_field


def test_inconsistent_location(F2):
    G1 = goppa_polynomial(1, F2)
    with pytest.raises(InconsistentLocationError):
        code_new(F2, G1, [1, 2])
    with pytest.raises(InvalidPolynomialError):
        code_new(F2, Poly(F2))


def test_scale_invariance(F3):
    G = goppa_polynomial(2, F3, {"A": 5})
    L = location_set(F3, G)
    a = code_new(F3, G, L)
    b = code_new(F3, G.scale(F3.alpha(11)), L)
    assert row_space_equal(a.H_bin, b.H_bin)


@pytest.mark.parametrize("cid", ["1", "2", "3", "4", "5", "6", "7"])
def test_syndrome_agrees_with_parity_matrix(chain2, cid):
    code = chain2[cid]
    rng = random.Random(cid)
    for w in code.generator.rows:
        assert syndrome_is_zero(code, w)
    for _ in range(300):
        w = rng.getrandbits(code.n)
        assert syndrome_is_zero(code, w) == code.is_codeword(w)


def test_syndrome_trivial_words(chain3):
    code = chain3["7"]
    assert syndrome_is_zero(code, 0)
    for j in range(code.n):
        assert not syndrome_is_zero(code, 1 << j)
    with pytest.raises(ShapeError):
        syndrome_is_zero(code, 1 << code.n)
    with pytest.raises(ShapeError):
        syndrome_is_zero(code, 1, n=code.n + 1)


@pytest.mark.parametrize("cid", ["1", "3", "4"])
def test_shortening_at_zero_is_goppa_on_rest(chain3, cid):
    code = chain3[cid]
    short = shorten(code, code.position_of(0))
    direct = code_new(code.field, code.poly, [a for a in code.locations if a])
    assert short.n == direct.n
    assert row_space_equal(short.generator, direct.generator)


def test_redundant_rows(chain3):
    assert verify_redundant_row(chain3["1s"], "inverse_weighted")
    assert verify_redundant_row(chain3["4s"], "inverse_weighted")
    assert verify_redundant_row(chain3["1"], "all_ones")
    assert verify_redundant_row(chain3["3"], "all_ones")
    with pytest.raises(UnsupportedCheckError):
        redundant_row(chain3["1"], "inverse_weighted")
    with pytest.raises(UnsupportedCheckError):
        redundant_row(chain3["2"], "all_ones")
    with pytest.raises(UnsupportedCheckError):
        redundant_row(chain3["3"], "inverse_weighted")
    with pytest.raises(UnsupportedCheckError):
        redundant_row(chain3["1"], "diagonal")


def test_inverse_weighted_row_is_not_free(F3):
    # for an unrelated G with G(0) != 0 the same construction gives no parity check
    F = F3
    G = Poly(F, [9, 8, 32, 1, 0, 5, 0, 0, 1])
    code = code_new(F, G, [a for a in location_set(F, G) if a], family=4)
    assert not verify_redundant_row(code, "inverse_weighted")
