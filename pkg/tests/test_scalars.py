"""Exact arithmetic: normalization, specialization, parsing."""

import random
from fractions import Fraction

import pytest

from skeinhc.errors import DomainError, PoleError
from skeinhc.scalars import (
    I,
    ONE,
    Q,
    QIQ,
    ZERO,
    CyclotomicField,
    CyclotomicValue,
    GaussianRational,
    ScalarQ,
    SpecializationPoint,
    cyclotomic_polynomial,
    loop_value,
    parse_scalar,
    q_power,
    specialize,
)

Z = QIQ.z


def test_inverse_pairs():
    assert Z * (ONE / Z) == ONE
    assert Q * q_power(-1) == ONE


def test_normalization_identity():
    assert ((Q * Q - 1) / Q - Z) == ZERO
    assert ((Q * Q - 1) / Q - Z).is_zero


def test_structural_equality_is_value_equality():
    a = (Q ** 3 - Q) / (Q ** 2 - 1)
    assert a == Q
    assert hash(a) == hash(Q)


def test_division_by_zero():
    with pytest.raises(DomainError):
        ONE / ZERO


def test_loop_value():
    assert loop_value() == 2 * I / (Q - q_power(-1))


def test_specialize_basics():
    zeta = CyclotomicValue(8, [0, 1])
    assert specialize(Q, SpecializationPoint(2)) == zeta
    assert specialize(I, SpecializationPoint(2)) == zeta ** 2
    for N in range(2, 7):
        assert specialize(I, SpecializationPoint(N)) ** 2 == -1


def test_specialize_loop_matches_independent_formula():
    # 2 zeta^N / (zeta - zeta^(-1)) computed directly in the cyclotomic field
    for N in (2, 3, 4):
        fld = CyclotomicField(N)
        independent = (2 * fld.zeta ** N) / (fld.zeta - fld.zeta.inv())
        assert specialize(loop_value(), SpecializationPoint(N)) == independent


def test_loop_value_real_and_positive_at_special_points():
    for N in (2, 3, 4):
        v = specialize(loop_value(), SpecializationPoint(N))
        assert v.conjugate() == v  # exactly real
        approx = complex(v)
        assert abs(approx.imag) < 1e-9 and approx.real > 0.5


def test_loop_value_at_small_points():
    v2 = specialize(loop_value(), SpecializationPoint(2))
    zeta = CyclotomicValue(8, [0, 1])
    assert v2 == zeta + zeta.inv()
    assert specialize(loop_value(), SpecializationPoint(3)) == CyclotomicValue(12, [2])


def test_pole_error():
    f = ONE / (Q ** 4 + 1)  # vanishes at zeta_8
    with pytest.raises(PoleError):
        specialize(f, SpecializationPoint(2))
    # but is perfectly finite at N = 3
    specialize(f, SpecializationPoint(3))


def test_no_pole_at_q_minus_one():
    # 1/(q - 1) never has a pole at the distinguished points: zeta_4N != 1
    g = ONE / (Q - 1)
    for N in (2, 3, 4, 5):
        value = specialize(g, SpecializationPoint(N))
        assert not value.is_zero
        assert value * specialize(Q - 1, SpecializationPoint(N)) == 1


def test_specialization_point_requires_n_at_least_two():
    with pytest.raises(DomainError):
        SpecializationPoint(1)


def test_homomorphism_property_random():
    rng = random.Random(11)
    for _ in range(30):
        a = Q ** rng.randint(-3, 3) * GaussianRational(
            Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        ) + ONE
        b = Z ** rng.randint(0, 2) + I * Q ** rng.randint(-2, 2)
        N = rng.choice([2, 3, 5])
        pt = SpecializationPoint(N)
        assert specialize(a * b, pt) == specialize(a, pt) * specialize(b, pt)
        assert specialize(a + b, pt) == specialize(a, pt) + specialize(b, pt)


def test_cyclotomic_polynomial_values():
    x = [Fraction(v) for v in (1, 1)]
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_polynomial(8) == tuple(map(Fraction, (1, 0, 0, 0, 1)))
    assert cyclotomic_polynomial(12) == tuple(map(Fraction, (1, 0, -1, 0, 1)))


def test_cyclotomic_inverse():
    fld = CyclotomicField(3)
    rng = random.Random(3)
    for _ in range(20):
        v = CyclotomicValue(12, [rng.randint(-3, 3) for _ in range(4)])
        if v.is_zero:
            continue
        assert v * v.inv() == fld.one


def test_parse_round_trip():
    rng = random.Random(5)
    for _ in range(25):
        f = (Q ** rng.randint(-3, 3)) * GaussianRational(
            rng.randint(-5, 5), rng.randint(-5, 5)
        ) + Z ** rng.randint(0, 2)
        assert parse_scalar(str(f)) == f


def test_parse_grammar():
    assert parse_scalar("2*i/(q - q^-1)") == loop_value()
    assert parse_scalar("(1+i)*(1-i)") == ScalarQ(2)
    assert parse_scalar("q^-2") == q_power(-2)
    with pytest.raises(DomainError):
        parse_scalar("q +")
    with pytest.raises(DomainError):
        parse_scalar("2 ** 3")
