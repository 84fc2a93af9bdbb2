from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from goppachain.analysis import lemma10_polynomials
from goppachain.chain import build_chain, sample_params
from goppachain.errors import (
    DegenerateScaleError,
    DegenerateSubstitutionError,
    InvalidParameterError,
    SubfieldViolationError,
)
from goppachain.gf2m import field_new
from goppachain.poly2m import Poly, goppa_polynomial

F16 = field_new(2)
coeff = st.integers(0, 15)
polys = st.lists(coeff, max_size=7).map(lambda c: Poly(F16, c))


def test_trim_and_degree():
    assert Poly(F16, [1, 0, 0]).coeffs == (1,)
    assert Poly(F16).degree == -1
    assert Poly.monomial(F16, 3).degree == 3


def test_family_examples(F2):
    assert goppa_polynomial(1, F2).to_list() == [1, 0, 0, 1]
    assert goppa_polynomial(7, F2, {"B": 1}).to_list() == [1, 0, 0, 0, 0, 1]
    assert goppa_polynomial(4, F2, {"A": 1}).to_list() == [1, 0, 0, 1, 1]


def test_family_degrees(F3):
    t = F3.t
    A = F3.alpha(3)
    C = F3.alpha(9)  # powers of alpha^9 make up GF(8)*
    assert F3.in_subfield(C)
    degs = {
        1: goppa_polynomial(1, F3).degree,
        2: goppa_polynomial(2, F3, {"A": A}).degree,
        3: goppa_polynomial(3, F3, {"A": A, "C": C}).degree,
        4: goppa_polynomial(4, F3, {"A": A}).degree,
        5: goppa_polynomial(5, F3, {"A": A, "C": C}).degree,
        6: goppa_polynomial(6, F3, {"R": C, "V": A}).degree,
        7: goppa_polynomial(7, F3, {"B": C}).degree,
    }
    assert degs == {1: t - 1, 2: t, 3: t, 4: t, 5: t + 1, 6: t + 1, 7: t + 1}


def test_family_errors(F2):
    with pytest.raises(InvalidParameterError):
        goppa_polynomial(2, F2, {})
    with pytest.raises(InvalidParameterError):
        goppa_polynomial(5, F2, {"A": 3, "C": 0})
    with pytest.raises(SubfieldViolationError):
        goppa_polynomial(3, F2, {"A": 3, "C": F2.alpha(1)})
    with pytest.raises(InvalidParameterError):
        goppa_polynomial(8, F2, {})


def test_division(F2):
    a = Poly(F2, [3, 0, 7, 1, 9])
    b = Poly(F2, [2, 5, 1])
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree
    with pytest.raises(ZeroDivisionError):
        a.divmod(Poly(F2))


def test_scale_and_substitute_errors():
    p = Poly(F16, [1, 1])
    with pytest.raises(DegenerateScaleError):
        p.scale(0)
    with pytest.raises(DegenerateSubstitutionError):
        p.substitute_affine(0, 1)


@settings(max_examples=100, deadline=None)
@given(p=polys, b=st.integers(1, 15), g=coeff)
def test_substitute_affine_evaluates_and_inverts(p, b, g):
    F = F16
    s = p.substitute_affine(b, g)
    for x in F.elements():
        assert s.eval(x) == p.eval(F.mul(b, x) ^ g)
    binv = F.inv(b)
    assert s.substitute_affine(binv, F.mul(binv, g)) == p


@settings(max_examples=100, deadline=None)
@given(p=polys, q=polys)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@settings(max_examples=50, deadline=None)
@given(p=polys, c=st.integers(1, 15))
def test_ratio_to(p, c):
    if p.is_zero():
        assert p.scale(c).ratio_to(p) is None
    else:
        assert p.scale(c).ratio_to(p) == c


def test_lemma10_identity_exhaustive_gf16():
    # derivative of x (x^(t+1) - A^(t+1)) (x^(t+1) - A^-(t+1)) is (x^(t+1) + 1)^2
    F = F16
    t = F.t
    target = Poly.from_terms(F, {2 * (t + 1): 1, 0: 1})
    for A in F.nonzero():
        if F.pow(A, t + 1) == 1:
            continue
        _, dprod = lemma10_polynomials(F, A)
        assert dprod == target


def test_lemma10_identity_sampled_gf64(F3):
    F = F3
    t = F.t
    target = Poly.from_terms(F, {2 * (t + 1): 1, 0: 1})
    for A in range(2, F.size, 3):
        if F.pow(A, t + 1) != 1:
            assert lemma10_polynomials(F, A)[1] == target


@pytest.mark.parametrize("l", [2, 3])
@pytest.mark.parametrize("seed", range(3))
def test_chain_polynomials_are_separable(l, seed):
    F = field_new(l)
    chain = build_chain(F, sample_params(F, seed))
    for G in chain.polys.values():
        assert G.is_separable()
