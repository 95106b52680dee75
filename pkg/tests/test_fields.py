from __future__ import annotations

import random
import warnings
from fractions import Fraction

import pytest

from formzeros.errors import SchemaError
from formzeros.fields import (
    AlgebraicNumberSpec,
    NumberField,
    PrimeField,
    Rationals,
    RationalFunctionField,
)
from formzeros.poly import Poly


# -- algebraic number specs ------------------------------------------


def test_spec_from_rational():
    a = AlgebraicNumberSpec.from_rational(Fraction(1, 2))
    assert a.is_algebraic
    assert a.value_if_rational() == Fraction(1, 2)
    assert a.primitive_minpoly() == Poly((-1, 2))


def test_spec_transcendental():
    a = AlgebraicNumberSpec.transcendental()
    assert not a.is_algebraic
    with pytest.raises(ValueError):
        a.primitive_minpoly()
    assert a.describe() == "transcendental"


def test_spec_rejects_zero():
    with pytest.raises(SchemaError):
        AlgebraicNumberSpec.parse("int:0")
    with pytest.raises(SchemaError):
        AlgebraicNumberSpec.from_minpoly_text("t")


def test_spec_rejects_reducible_minpoly():
    with pytest.raises(SchemaError):
        AlgebraicNumberSpec.from_minpoly_text("t^2 - 3*t + 2")


def test_spec_uncertified_minpoly_warns():
    # t^20 - 2 is Eisenstein-irreducible, but certifying that is out of
    # reach for the bounded search, so construction warns and proceeds
    big = Poly((-2,) + (0,) * 19 + (1,))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        spec = AlgebraicNumberSpec(big)
    assert any("certif" in str(w.message) for w in caught)
    assert spec.primitive_minpoly() == big


def test_spec_catches_small_factor_of_big_minpoly():
    # t^20 + t^19 + 1 is divisible by t^2 + t + 1
    with pytest.raises(SchemaError):
        AlgebraicNumberSpec(Poly((1,) + (0,) * 17 + (0, 1, 1)))


def test_spec_parse_syntax():
    assert AlgebraicNumberSpec.parse("transcendental").minpoly is None
    assert AlgebraicNumberSpec.parse("int:3").value_if_rational() == 3
    assert AlgebraicNumberSpec.parse("rat:-2/5").value_if_rational() == Fraction(-2, 5)
    root = AlgebraicNumberSpec.parse("root:t^2 - t - 1")
    assert root.primitive_minpoly() == Poly((-1, -1, 1))
    with pytest.raises(SchemaError):
        AlgebraicNumberSpec.parse("sqrt:2")


def test_spec_inverse():
    a = AlgebraicNumberSpec.from_rational(Fraction(2, 3))
    assert a.inverse().value_if_rational() == Fraction(3, 2)
    b = AlgebraicNumberSpec.from_minpoly_text("t^2 - t - 1")
    # 1/b is a root of the reversed polynomial
    assert b.inverse().primitive_minpoly() == Poly((-1, 1, 1))


def test_spec_is_one():
    assert AlgebraicNumberSpec.from_rational(Fraction(1)).is_one()
    assert not AlgebraicNumberSpec.from_rational(Fraction(2)).is_one()
    assert not AlgebraicNumberSpec.transcendental().is_one()


# -- field targets ----------------------------------------------------


def test_rational_function_field_identity():
    f = RationalFunctionField()
    p = Poly((1, 2, 3))
    assert f.convert(p) == p
    assert f.div(Poly((1, 2, 1)), Poly((1, 1))) == Poly((1, 1))


def test_number_field_reduction():
    f = NumberField(Poly((1, -1, 1)))  # t^2 = t - 1
    t = f.tau_image()
    one = f.convert(Poly.one())
    assert t * t == t - one
    # the cube is -1: t^3 = t*t^2 = t(t-1) = t^2 - t = -1
    assert t * t * t == -one


def test_number_field_inverse_round_trip():
    rng = random.Random(9)
    f = NumberField(Poly((-1, -1, 0, 1)))  # t^3 - t - 1, irreducible
    one = f.convert(Poly.one())
    for _ in range(40):
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        x = f.reduce(Poly(coeffs))
        if not x:
            continue
        assert (x / x) == one
        assert x * (one / x) == one


def test_number_field_reducible_modulus_detected_on_division():
    # t^3 - t^2 + 2 = (t + 1)(t^2 - 2t + 2); zero divisors have no inverse
    f = NumberField(Poly((2, 0, -1, 1)))
    zero_divisor = f.reduce(Poly((1, 1)))
    with pytest.raises(ZeroDivisionError):
        zero_divisor.inverse()


def test_number_field_degree_one_is_evaluation():
    f = NumberField(Poly((-2, 1)))  # t = 2
    assert f.convert(Poly((1, 1, 1))) == Fraction(7)
    assert "t = 2" in f.describe()


def test_number_field_normalises_to_monic():
    f = NumberField(Poly((1, 2)))  # 2t + 1 -> t + 1/2, i.e. t = -1/2
    assert f.convert(Poly((0, 2))) == Fraction(-1)
    with pytest.raises(ValueError):
        NumberField(Poly((3,)))


def test_rationals_sets_variable_to_zero():
    f = Rationals()
    assert f.convert(Poly((5, 7, 1))) == Fraction(5)
    assert f.zero == Fraction(0)


def test_prime_field_arithmetic():
    f = PrimeField(7)
    x = f.convert(Poly((3, 12)))  # 12*t + 3 at t=0 -> 3
    five = f.convert(Poly((5,)))
    assert x == f.convert(Poly((10,)))
    assert (x / five) * five == x
    assert f.convert(Poly((6,))) + f.convert(Poly((1,))) == f.zero


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_field_target_for_spec():
    a = AlgebraicNumberSpec.from_rational(Fraction(1, 2))
    direct = a.field_target(invert=False)
    inv = a.field_target(invert=True)
    # direct target evaluates at 1/2, inverted at 2
    assert direct.convert(Poly((0, 1))) == Fraction(1, 2)
    assert inv.convert(Poly((0, 1))) == Fraction(2)


def test_field_target_transcendental_is_generic():
    a = AlgebraicNumberSpec.transcendental()
    assert isinstance(a.field_target(invert=True), RationalFunctionField)
