from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hbeta import GF, Q, FieldDescriptor, FieldMismatch, Scalar, root_of_unity_check, scalar_arith

PRIMES = [2, 3, 5, 7, 11, 101]

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)


def test_field_descriptor_parse_and_str():
    assert FieldDescriptor.parse("Q") == Q
    assert FieldDescriptor.parse("Fp:7") == GF(7)
    assert str(GF(7)) == "Fp:7" and str(Q) == "Q"
    assert GF(5).characteristic == 5 and Q.characteristic == 0


@pytest.mark.parametrize("bad", ["F7", "Fp:8", "Fp:1", "Fp:x", "R", ""])
def test_field_descriptor_rejects(bad):
    with pytest.raises(ValueError):
        FieldDescriptor.parse(bad)


def test_rational_arithmetic():
    assert Q("1/3") + Q("1/6") == Q("1/2")
    assert Q(2) ** -1 == Q("1/2")
    assert str(Q("-4/6")) == "-2/3"
    assert str(Q(5)) == "5"


def test_prime_field_arithmetic():
    F = GF(5)
    assert F(3) + F(4) == F(2)
    assert F(2).inverse() == F(3)
    assert F(-1) == F(4)
    assert str(F(-1)) == "4"
    assert F("1/2") == F(3)


def test_division_by_zero():
    for F in (Q, GF(7)):
        with pytest.raises(ZeroDivisionError, match="division by zero"):
            F(0).inverse()
        with pytest.raises(ZeroDivisionError):
            F(1) / F(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        Q(1) * GF(5)(2)


def test_scalar_is_immutable():
    x = Q(1)
    with pytest.raises(AttributeError):
        x.value = 2


def test_scalar_arith_ops():
    F = GF(7)
    assert scalar_arith("add", F(3), F(5)) == F(1)
    assert scalar_arith("mul", F(3), F(5)) == F(1)
    assert scalar_arith("neg", F(3)) == F(4)
    assert scalar_arith("inv", F(3)) == F(5)
    assert scalar_arith("eq", F(3), F(10)) is True


def test_root_of_unity():
    assert root_of_unity_check(GF(5)(4), 2)
    assert root_of_unity_check(GF(5)(2), 4)
    assert not root_of_unity_check(GF(5)(4), 4)
    assert root_of_unity_check(GF(7)(2), 3)
    assert root_of_unity_check(Q(-1), 2)
    assert not root_of_unity_check(Q(1), 2)


@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    x, y, z = Q(a), Q(b), Q(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y).value == a * b
    if b:
        assert (x / y) * y == x


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x
    assert (x + y).value == (a + b) % p
    if x:
        assert x * x.inverse() == F.one


@given(st.sampled_from(PRIMES), st.integers())
def test_fermat(p, a):
    F = GF(p)
    assert F(a) ** p == F(a)


@given(fractions)
def test_rational_str_roundtrip(a):
    assert Q(str(Q(a))) == Q(a)
    assert isinstance(Q(a), Scalar) and Q(a).value == Fraction(a)
