from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brauer.errors import FieldError, FormError, NotInvertibleError
from brauer.scalars import SKEW, SYMMETRIC, FieldSpec, Scalar, delta_parameter, invert, parse_scalar, reduce_int


@pytest.mark.parametrize("m, p, expected", [(7, 5, 2), (-1, 3, 2), (4, 0, 4)])
def test_reduce_int(m, p, expected):
    assert reduce_int(m, FieldSpec(p)).value == expected


def test_invert_examples():
    assert invert(Scalar(3, FieldSpec(7))).value == 5
    for p in (0, 2, 3, 7):
        assert invert(FieldSpec(p).one()) == 1
    assert invert(Scalar(2, FieldSpec(0))).value == Fraction(1, 2)


@pytest.mark.parametrize("p", [0, 5])
def test_invert_zero(p):
    with pytest.raises(NotInvertibleError, match="not invertible"):
        invert(FieldSpec(p).zero())


def test_delta_parameter():
    assert delta_parameter(SYMMETRIC, 3, FieldSpec(5)).value == 3
    assert delta_parameter(SKEW, 4, FieldSpec(5)).value == 1
    assert delta_parameter(SKEW, 4, FieldSpec(2)).value == 0
    # p | n gives a legitimate zero parameter
    assert delta_parameter(SYMMETRIC, 3, FieldSpec(3)).value == 0


def test_delta_parameter_errors():
    with pytest.raises(FormError):
        delta_parameter(SKEW, 3, FieldSpec(0))
    with pytest.raises(FormError, match="characteristic != 2"):
        delta_parameter(SYMMETRIC, 2, FieldSpec(2))


@pytest.mark.parametrize("p", [1, 4, 9, -3])
def test_bad_characteristic(p):
    with pytest.raises(FieldError):
        FieldSpec(p)


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        Scalar(1, FieldSpec(3)) + Scalar(1, FieldSpec(5))


def test_fraction_into_prime_field():
    assert Scalar(Fraction(1, 2), FieldSpec(7)).value == 4
    with pytest.raises(NotInvertibleError):
        Scalar(Fraction(1, 3), FieldSpec(3))


def test_parse_scalar():
    assert parse_scalar("-1", FieldSpec(5)).value == 4
    assert parse_scalar("3/4", FieldSpec(0)).value == Fraction(3, 4)
    with pytest.raises(FieldError):
        parse_scalar("x", FieldSpec(0))


fields = st.sampled_from([0, 2, 3, 5, 7, 101]).map(FieldSpec)
ints = st.integers(-10**6, 10**6)


@given(fields, ints, ints, ints)
def test_field_axioms(field, a, b, c):
    x, y, z = (Scalar(v, field) for v in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if x:
        assert x * invert(x) == 1


@given(fields, ints, ints)
def test_reduce_int_is_ring_homomorphism(field, a, b):
    assert reduce_int(a + b, field) == reduce_int(a, field) + reduce_int(b, field)
    assert reduce_int(a * b, field) == reduce_int(a, field) * reduce_int(b, field)


@given(st.sampled_from([2, 3, 5, 7]).map(FieldSpec), ints)
def test_residues_are_canonical(field, a):
    assert 0 <= Scalar(a, field).value < field.p
