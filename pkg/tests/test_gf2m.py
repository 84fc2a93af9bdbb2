from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import clmul_mod
from goppachain.errors import FieldDomainError, InvalidModulusError, UnsupportedFieldError
from goppachain.gf2m import FieldSpec, field_new, first_primitive_modulus, is_primitive_modulus


def test_sizes(F2, F3):
    assert (F2.m, F2.t, F2.size) == (4, 4, 16)
    assert (F3.m, F3.t, F3.size) == (6, 8, 64)
    assert field_new(4).size == 256


def test_field_axioms_exhaustive_m4(F2):
    F = F2
    for a in F.elements():
        assert F.add(a, a) == 0
        assert F.mul(a, 1) == a
        assert F.mul(a, 0) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in F.elements():
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, b) == clmul_mod(a, b, F.modulus, F.m)
            for c in F.elements():
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@pytest.mark.parametrize("l", [3, 4])
def test_mul_matches_clmul(l):
    F = field_new(l)
    for a in range(0, F.size, 3):
        for b in range(1, F.size, 7):
            assert F.mul(a, b) == clmul_mod(a, b, F.modulus, F.m)


def test_alpha_is_primitive(F2, F3):
    for F in (F2, F3):
        assert len({F.alpha(i) for i in range(F.order)}) == F.order
        assert F.alpha(F.order) == 1
        assert F.mul_order(F.alpha(1)) == F.order


def test_inverse_examples(F2):
    # alpha^-1 = alpha^14
    assert F2.inv(F2.alpha(1)) == F2.alpha(14)
    assert F2.div(F2.alpha(3), F2.alpha(5)) == F2.alpha(-2)


def test_subfield(F2, F3):
    for F in (F2, F3):
        sub = F.subfield_elements()
        assert len(sub) == 1 << F.l
        # closed under + and *
        for a in sub:
            for b in sub:
                assert F.in_subfield(a ^ b)
                assert F.in_subfield(F.mul(a, b))
    # GF(4) inside GF(16) is {0, 1, alpha^5, alpha^10}
    assert set(F2.subfield_elements()) == {0, 1, F2.alpha(5), F2.alpha(10)}
    assert not F2.in_subfield(F2.alpha(1))


def test_norm_and_root(F3):
    F = F3
    for a in F.nonzero():
        assert F.in_subfield(F.norm(a))
    for b in F.subfield_elements():
        if b:
            assert F.norm(F.root_of_norm(b)) == b
    with pytest.raises(FieldDomainError):
        F.root_of_norm(F.alpha(1))


def test_frobenius_is_additive(F3):
    F = F3
    for a in range(F.size):
        for b in range(0, F.size, 5):
            assert F.frobenius(a ^ b) == F.frobenius(a) ^ F.frobenius(b)
        assert F.frobenius(a, F.m) == a


def test_errors(F2):
    with pytest.raises(FieldDomainError):
        F2.inv(0)
    with pytest.raises(ZeroDivisionError):
        F2.div(1, 0)
    with pytest.raises(FieldDomainError):
        F2.pow(0, 0)
    with pytest.raises(FieldDomainError):
        F2.log(0)
    with pytest.raises(UnsupportedFieldError):
        FieldSpec(1)
    with pytest.raises(UnsupportedFieldError):
        FieldSpec(9)
    # x^4 + x^3 + x^2 + x + 1 is irreducible but not primitive
    with pytest.raises(InvalidModulusError):
        FieldSpec(2, 0b11111)


def test_moduli():
    assert is_primitive_modulus(0b10011, 4)
    assert not is_primitive_modulus(0b11111, 4)
    assert first_primitive_modulus(4) == 0b10011
    assert FieldSpec(2, 0b11001).modulus == 0b11001
    assert field_new(2).to_dict() == {"l": 2, "modulus_mask": 0b10011}


@settings(max_examples=200, deadline=None)
@given(a=st.integers(1, 255), e=st.integers(-600, 600), f=st.integers(-600, 600))
def test_pow_laws(a, e, f):
    F = field_new(4)
    assert F.mul(F.pow(a, e), F.pow(a, f)) == F.pow(a, e + f)
    assert F.pow(F.pow(a, e), 2) == F.pow(a, 2 * e)
