import json

import pytest

from chowpoly import (
    NonSquarefreeProductError,
    NotPalindromicError,
    SqfMultiPoly,
    UniPoly,
    gamma_reconstruct,
    gamma_vector,
)
from tests.oracles import brute_eulerian_poly


def test_trailing_zeros_trimmed():
    assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert UniPoly((0, 0)).coeffs == ()
    assert not UniPoly.zero()
    assert UniPoly.zero().degree == -1


def test_binomial_square():
    one_plus_x = UniPoly((1, 1))
    assert (one_plus_x * one_plus_x).coeffs == (1, 2, 1)


def test_add_scale_sub():
    p = UniPoly((1, 2, 3))
    q = UniPoly((0, 1))
    assert (p + q).coeffs == (1, 3, 3)
    assert (3 * q).coeffs == (0, 3)
    assert (p - p) == UniPoly.zero()
    assert (p + 5).coeffs == (6, 2, 3)


def test_pow_and_helpers():
    assert (UniPoly((1, 1)) ** 3).coeffs == (1, 3, 3, 1)
    assert UniPoly.one_plus_x_power(3) == UniPoly((1, 1)) ** 3
    assert UniPoly.geometric(2).coeffs == (1, 1, 1)
    assert UniPoly.geometric(-1) == UniPoly.zero()
    assert UniPoly.monomial(5, 2).coeffs == (0, 0, 5)


def test_getitem_past_degree():
    p = UniPoly((1, 2))
    assert p[5] == 0
    assert p[1] == 2


def test_multivariate_disjoint_product():
    vr = (1, 2)
    p = SqfMultiPoly(vr, {(): 1, (1,): 1})  # 1 + x1
    q = SqfMultiPoly(vr, {(2,): 1})  # x2
    assert (p * q).terms == {(2,): 1, (1, 2): 1}


def test_multivariate_shared_variable_rejected():
    vr = (1, 2)
    p = SqfMultiPoly(vr, {(): 1, (1,): 1})
    with pytest.raises(NonSquarefreeProductError):
        p * p


def test_multivariate_range_mismatch_rejected():
    p = SqfMultiPoly((1, 2), {(1,): 1})
    q = SqfMultiPoly((1, 3), {(1,): 1})
    with pytest.raises(ValueError):
        p + q


def test_multivariate_variable_outside_range_rejected():
    with pytest.raises(ValueError):
        SqfMultiPoly((1, 2), {(3,): 1})


def test_specialize_degree_is_set_size():
    p = SqfMultiPoly((1, 2), {(): 1, (1,): 2, (1, 2): 1})
    assert p.specialize().coeffs == (1, 2, 1)
    assert SqfMultiPoly((1, 2)).specialize() == UniPoly.zero()


def test_gamma_vector_golden():
    assert gamma_vector(UniPoly((1, 11, 1)), 2) == (1, 9)
    assert gamma_vector(UniPoly((1, 3, 3, 1)), 3) == (1, 0)


def test_gamma_vector_from_descent_scan():
    # degree-4 palindromic polynomial from a direct scan of all 120
    # permutations of 5 letters
    a5 = brute_eulerian_poly(5)
    assert a5.coeffs == (1, 26, 66, 26, 1)
    assert gamma_vector(a5, 4) == (1, 22, 16)
    assert gamma_reconstruct((1, 22, 16), 4) == a5


def test_gamma_vector_rejects_non_palindromic():
    with pytest.raises(NotPalindromicError):
        gamma_vector(UniPoly((1, 2)), 1)
    with pytest.raises(NotPalindromicError):
        gamma_vector(UniPoly((1, 1)), 3)  # 1 + x is not centered at 3/2
    with pytest.raises(NotPalindromicError):
        gamma_vector(UniPoly((1, 2, 2)), 2)


def test_gamma_roundtrip_various():
    for coeffs, d in [((1,), 0), ((1, 2, 1), 2), ((2, 2), 1), ((0, 1, 0), 2)]:
        p = UniPoly(coeffs)
        gs = gamma_vector(p, d)
        assert gamma_reconstruct(gs, d) == p


def test_render_text():
    assert UniPoly((1, 11, 1)).render() == "1 + 11*x + x^2"
    assert UniPoly((0, 1, 1)).render() == "x + x^2"
    assert UniPoly.zero().render() == "0"
    assert UniPoly((1, -1, -2)).render() == "1 - x - 2*x^2"
    assert SqfMultiPoly((1, 2), {(): 1, (1, 2): 3}).render() == "1 + 3*x1*x2"


def test_json_roundtrip_unipoly():
    big = 10**40
    p = UniPoly((1, big, 3))
    data = json.loads(json.dumps(p.to_json()))
    assert UniPoly.from_json(data) == p
    assert data[1] == str(big)


def test_json_roundtrip_multipoly():
    p = SqfMultiPoly((0, 3), {(): 1, (0, 2): 10**30, (1,): -2})
    data = json.loads(json.dumps(p.to_json()))
    assert SqfMultiPoly.from_json(data) == p


def test_hash_and_eq():
    assert UniPoly((1, 2)) == UniPoly((1, 2, 0))
    assert hash(UniPoly((1, 2))) == hash(UniPoly((1, 2, 0)))
    assert UniPoly((1,)) != UniPoly((1, 1))
    s = {SqfMultiPoly((1, 2), {(1,): 1}), SqfMultiPoly((1, 2), {(1,): 1})}
    assert len(s) == 1
