import pytest
from hypothesis import given
from hypothesis import strategies as st

from ribbonkirby.algebra import LaurentPoly, laurent_gcd, symmetrize_alexander
from ribbonkirby.errors import NotNormalizable
from tests.strategies import laurent_polys

t = LaurentPoly.monomial(1)


def test_zero_coefficients_are_not_stored():
    p = LaurentPoly({0: 1, 3: 0, -2: 4})

    assert p.terms == ((-2, 4), (0, 1))
    assert LaurentPoly({1: 1, 2: 0}) == t
    assert LaurentPoly().is_zero()
    assert (t - t).is_zero()


def test_arithmetic():
    assert (t + 1) * (t - 1) == t ** 2 - 1
    assert 2 * t - t == t
    assert (t ** -1) * t == LaurentPoly.constant(1)
    assert str(t ** 2 - t + 1) == "t^2 - t + 1"
    assert str(-(t ** -1) + 3) == "3 - t^-1"


@given(p=laurent_polys(), q=laurent_polys(), a=st.sampled_from([-2, -1, 2, 3]))
def test_evaluation_is_multiplicative(p, q, a):
    assert (p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a)


def test_symmetrize_unknot():
    assert symmetrize_alexander(LaurentPoly.constant(1)) == LaurentPoly.constant(1)


def test_symmetrize_trefoil():
    assert symmetrize_alexander(t ** 2 - t + 1) == t - 1 + t ** -1


def test_symmetrize_flips_sign():
    assert symmetrize_alexander(t ** 3 - 3 * t ** 2 + t) == 3 - t - t ** -1


def test_symmetrize_not_normalizable():
    with pytest.raises(NotNormalizable):
        symmetrize_alexander(-(t ** 3) + t ** 2)


@given(exponent=st.integers(min_value=-5, max_value=5), sign=st.sampled_from([1, -1]))
def test_symmetrize_is_idempotent_and_keeps_determinant(exponent, sign):
    p = (t ** 4 - 3 * t ** 3 + 5 * t ** 2 - 3 * t + 1).shift(exponent) * sign

    symmetric = symmetrize_alexander(p)

    assert symmetrize_alexander(symmetric) == symmetric
    assert abs(symmetric.evaluate(-1)) == abs(p.evaluate(-1))
    assert symmetric.is_palindromic()
    assert symmetric.evaluate(1) == 1


def test_exact_divide():
    delta = -(t ** 2) - t ** -2

    assert ((t ** 3 - t) * delta).exact_divide(delta) == t ** 3 - t
    with pytest.raises(ValueError):
        (t + 2).exact_divide(t - 1)


def test_gcd_ignores_units():
    trefoil = t ** 2 - t + 1

    assert laurent_gcd([trefoil * (t - 1), (trefoil * (t + 1)).shift(-3)]) == trefoil
    assert laurent_gcd([]).is_zero()
