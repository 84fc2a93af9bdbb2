from __future__ import annotations

import pytest

from goppachain.analysis import weight_enumerator
from goppachain.chain import (
    CODE_IDS,
    PositionMap,
    affine_map,
    build_chain,
    chain_checks,
    derive_params,
    identity_map,
    sample_params,
    table1_deviations,
    table1_expected,
    verify_equivalence,
    verify_subcode,
    verify_zero_position,
)
from goppachain.errors import InapplicableError, InvalidMapError
from goppachain.gf2m import field_new
from goppachain.poly2m import goppa_polynomial

SEEDS = range(1, 6)


def _chain(l, seed):
    F = field_new(l)
    return build_chain(F, sample_params(F, seed))


@pytest.mark.parametrize("l", [2, 3])
@pytest.mark.parametrize("seed", SEEDS)
def test_params_satisfy_constraints(l, seed):
    F = field_new(l)
    p = sample_params(F, seed)
    t = F.t
    assert p.C != 0 and F.in_subfield(p.C)
    assert F.in_subfield(p.R) and F.in_subfield(p.B)
    assert p.C == F.mul(F.pow(p.A, t), F.pow(p.beta3, t) if p.beta3 else 0) ^ F.mul(p.A, p.beta3)
    assert p.beta8 != F.div(F.pow(p.A, t), p.C)
    assert p.V != 0 and p.E != 0
    assert sample_params(F, seed) == p


def test_derive_params_rejects_c_zero(F2):
    F = F2
    A = F.alpha(1)
    # beta3 = A^-(t-1) gives C = 0
    beta3 = F.inv(F.pow(A, F.t - 1))
    assert derive_params(F, A, beta3, 0) is None


@pytest.mark.parametrize("l", [2, 3])
def test_dimensions_seed_independent(l):
    dims = {tuple((c.n, c.k) for c in _chain(l, s).codes.values()) for s in SEEDS}
    assert len(dims) == 1


@pytest.mark.parametrize("l", [2, 3, 4])
def test_table1_lengths_and_dimensions(l):
    chain = _chain(l, 1)
    assert table1_deviations(chain) == []
    exp = table1_expected(l)
    assert [(chain[c].n, chain[c].k) for c in CODE_IDS] == [exp[c] for c in CODE_IDS]


def test_table1_l3_values(chain3):
    assert [chain3[c].n for c in CODE_IDS] == [57, 56, 56, 56, 55, 56, 55, 55, 55, 55]
    assert [chain3[c].k for c in ("1", "2", "3", "7")] == [17, 16, 16, 16]


@pytest.mark.parametrize("l", [2, 3])
@pytest.mark.parametrize("seed", SEEDS)
def test_all_chain_checks_pass(l, seed):
    results = chain_checks(_chain(l, seed))
    assert [r.name for r in results if not r.passed] == []
    assert len(results) == 18


def test_equivalent_codes_share_weight_enumerators(chain2):
    groups = [("1s", "2", "3"), ("4s", "5", "6", "7")]
    for g in groups:
        enums = {tuple(weight_enumerator(chain2[c])) for c in g}
        assert len(enums) == 1


def test_wrong_map_is_rejected(chain3):
    c = chain3.codes
    # shifting by a different constant does not carry 5 onto 6
    wrong_shift = chain3.params.beta8 ^ 1
    F = chain3.field
    try:
        m = affine_map(F, c["5"], c["6"], 1, wrong_shift, "5", "6")
    except InvalidMapError:
        return
    assert not verify_equivalence(c["5"], c["6"], m)


def test_map_errors(chain2):
    c = chain2.codes
    with pytest.raises(InvalidMapError):
        identity_map(c["1"], c["1s"])  # 0 has no image
    drop = chain2.maps[("1", "1s")]
    with pytest.raises(InvalidMapError):
        verify_equivalence(c["1"], c["1s"], drop)
    with pytest.raises(InvalidMapError):
        drop.then(chain2.maps[("2", "3")])
    bad = PositionMap("x", "y", "test", (0, 0))
    with pytest.raises(InvalidMapError):
        verify_subcode(c["1"], c["1"], bad)
    with pytest.raises(InapplicableError):
        verify_zero_position(c["4s"])


def test_zero_position_is_specific_to_g4(chain3):
    assert verify_zero_position(chain3["4"])
    assert not verify_zero_position(chain3["1"])


def test_path_map_composes(chain3):
    m = chain3.path_map(["4s", "5", "6", "7"])
    assert m.src == "4s" and m.dst == "7"
    assert m.is_bijective(chain3["7"].n)
    w = chain3["4s"].generator.rows[0]
    assert chain3["7"].syndrome_is_zero(m.apply(w))


def test_g7_is_scaled_monic_form(chain3):
    F = chain3.field
    G7 = chain3.polys["7"]
    monic = goppa_polynomial(7, F, {"B": 1})
    # B x^(t+1) + 1 becomes x^(t+1) + 1 under x -> x / b with b^(t+1) = B
    b = F.root_of_norm(chain3.params.B)
    assert G7.substitute_affine(F.inv(b), 0) == monic


def test_literal_lemma3_condition_admits_c_zero(F2):
    # beta != A^-(t-1) alone lets C = 0 through; those draws are rejected and counted
    assert sum(sample_params(F2, s).literal_condition_admitted_c_zero for s in range(20)) > 0
