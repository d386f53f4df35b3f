from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cheralg.scalars import (BN_I, BN_ONE, BN_SQRT2, BaseNumber, Scalar,
                             as_base, as_scalar)

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=8)
base_numbers = st.builds(BaseNumber, rationals, rationals, rationals,
                         rationals)


def small_scalars():
    def build(consts, kappas):
        acc = Scalar.of(consts)
        for cls, exp, coef in kappas:
            acc = acc + Scalar.kappa(cls, exp) * coef
        return acc
    return st.builds(
        build, base_numbers,
        st.lists(st.tuples(st.integers(0, 2), st.integers(1, 3),
                           base_numbers), max_size=3))


def test_defining_relations():
    assert BN_I * BN_I == BaseNumber(-1)
    assert BN_SQRT2 * BN_SQRT2 == BaseNumber(2)
    assert BN_I * BN_SQRT2 == BaseNumber(0, 0, 0, 1)


def test_polynomial_identity():
    k = Scalar.kappa(0)
    assert (k + 1) * (k - 1) == k * k - 1


@settings(max_examples=60, deadline=None)
@given(base_numbers, base_numbers, base_numbers)
def test_base_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(base_numbers)
def test_field_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == BN_ONE


@settings(max_examples=40, deadline=None)
@given(small_scalars(), small_scalars(), small_scalars())
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(small_scalars(), small_scalars())
def test_substitution_is_ring_map(a, b):
    vals = {0: BaseNumber(Fraction(1, 2)), 1: BaseNumber(2, 1),
            2: BaseNumber(0, 0, 1)}
    assert (a * b).substitute(vals) == a.substitute(vals) * b.substitute(vals)
    assert (a + b).substitute(vals) == a.substitute(vals) + b.substitute(vals)


def test_substitution_examples():
    k = Scalar.kappa(0)
    assert (k * k + 1).substitute({0: BaseNumber(0)}) == as_scalar(1)
    assert k.substitute({0: BaseNumber(Fraction(3, 2))}) \
        == as_scalar(Fraction(3, 2))
    assert (k * 2 * BN_I).substitute({0: BN_ONE}) == as_scalar(BN_I * 2)


def test_substitution_missing_class():
    with pytest.raises(KeyError):
        Scalar.kappa(1).substitute({0: BN_ONE})


def test_zero_and_degree():
    z = Scalar.kappa(0) - Scalar.kappa(0)
    assert z.is_zero() and not z.terms
    assert Scalar.kappa(0, 3).degree() == 3
    assert as_scalar(5).degree() == 0


def test_rendering():
    assert str(as_scalar(Fraction(3, 2))) == "3/2"
    assert str(as_scalar(BN_I)) == "i"
    assert str(as_scalar(BN_SQRT2)) == "sqrt2"
    assert str(Scalar.kappa(0)) == "k1"
    assert str(Scalar.kappa(0) * Scalar.kappa(0) - 1) == "-1 + k1^2"
    assert str(as_scalar(BaseNumber(1, 1))) == "1 + i"
    assert str((as_scalar(BaseNumber(1, 1)) * Scalar.kappa(1))) == "(1 + i)*k2"


def test_division():
    x = BaseNumber(1, 2, 3, Fraction(1, 2))
    assert x / x == BN_ONE
    s = as_scalar(Fraction(3, 4))
    assert (Scalar.kappa(0) * 3) / 3 == Scalar.kappa(0)
    with pytest.raises(ZeroDivisionError):
        s / Scalar.kappa(0)
