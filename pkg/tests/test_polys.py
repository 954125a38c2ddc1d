import numpy as np
import pytest

from detloci.degrees import binom
from detloci.polys import MonomialBasis, SparsePoly, monomial_exponents


def test_terms_are_normalized():
    p = SparsePoly(2, 7, {(1, 0): 9, (0, 1): 7, (2, 0): -1})
    assert p.terms == {(1, 0): 2, (2, 0): 6}


def test_zero_and_monomial_constructors():
    z = SparsePoly.zero(3, 5)
    assert z.is_zero() and z.degree() == -1
    m = SparsePoly.monomial(3, 5, (1, 0, 2))
    assert m.degree() == 3 and not m.is_zero()


def test_addition_cancels():
    x = SparsePoly.monomial(2, 5, (1, 0))
    y = SparsePoly.monomial(2, 5, (1, 0), 4)
    assert (x + y).is_zero()


def test_multiplication():
    x0 = SparsePoly.monomial(2, 7, (1, 0))
    x1 = SparsePoly.monomial(2, 7, (0, 1))
    square = (x0 + x1) * (x0 + x1)
    assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert square.is_homogeneous()
    assert square.degree() == 2


def test_subtraction_and_scale():
    x0 = SparsePoly.monomial(2, 7, (1, 0))
    assert (x0 - x0).is_zero()
    assert x0.scale(-1).terms == {(1, 0): 6}
    assert x0.scale(7).is_zero()


def test_inhomogeneous_detection():
    p = SparsePoly(2, 5, {(1, 0): 1, (2, 0): 1})
    assert not p.is_homogeneous()


def test_monomial_exponents_count_and_order():
    for nvars in range(1, 5):
        for deg in range(5):
            exps = monomial_exponents(nvars, deg)
            assert len(exps) == binom(deg + nvars - 1, nvars - 1)
            assert all(sum(e) == deg for e in exps)
            assert list(exps) == sorted(exps, reverse=True)
    assert monomial_exponents(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomial_exponents(2, -1) == ()


def test_basis_locate_round_trip():
    basis = MonomialBasis(3, 4)
    codes = basis.codes_of(basis.exp_array)
    found = basis.locate(codes)
    assert np.array_equal(found, np.arange(basis.dim))


def test_basis_locate_with_shift():
    # multiplying by x_1 lands degree-2 monomials inside degree 3
    low = MonomialBasis(3, 2)
    high = MonomialBasis(3, 3)
    codes = high.codes_of(low.exp_array) + high.encode_shift((0, 1, 0))
    idx = high.locate(codes)
    for pos, exps in zip(idx, low.exponents):
        bumped = (exps[0], exps[1] + 1, exps[2])
        assert high.exponents[pos] == bumped


def test_basis_locate_rejects_foreign_codes():
    basis = MonomialBasis(2, 2)
    with pytest.raises(ValueError):
        basis.locate(np.array([999]))


def test_vector_layout():
    basis = MonomialBasis(2, 2)
    poly = SparsePoly(2, 11, {(2, 0): 3, (0, 2): 5})
    vec = basis.vector(poly)
    assert vec[basis.index[(2, 0)]] == 3
    assert vec[basis.index[(0, 2)]] == 5
    assert vec.sum() == 8
