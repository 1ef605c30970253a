from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightclosure.exactfield import GF, QQ, FieldMismatchError, FieldSpec, Scalar, is_prime


def test_spec_examples():
    assert GF(7).add(5, 4) == 2
    assert QQ.mul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    assert GF(5).sub(3, 3) == 0
    assert GF(7).inv(3) == 5
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert GF(2).inv(1) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_coerce_fractions_mod_p():
    assert GF(7).coerce(Fraction(1, 2)) == 4
    assert GF(7).coerce("1/2") == 4
    assert GF(7).coerce(-1) == 6
    with pytest.raises(ZeroDivisionError):
        GF(7).coerce(Fraction(1, 7))


def test_gf_rejects_composites():
    for n in (0, 1, 4, 9, 2**31 - 3):
        if not is_prime(n):
            with pytest.raises(ValueError):
                GF(n)
    assert GF(2**31 - 1).p == 2**31 - 1


def test_is_prime_small():
    primes = [n for n in range(200) if is_prime(n)]
    assert primes[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes) == 46


def test_scalar_wrapper():
    a, b = Scalar(GF(7), 3), Scalar(GF(7), 5)
    assert a * b == Scalar(GF(7), 1)
    assert (a / b) * b == a
    with pytest.raises(FieldMismatchError):
        a + Scalar(GF(5), 1)


def test_symmetric_residues():
    assert GF(7).symmetric(6) == -1
    assert GF(7).symmetric(3) == 3


FIELDS = [GF(2), GF(3), GF(5), GF(7), GF(37), QQ]


def elements(field: FieldSpec):
    if field.p:
        return st.integers(0, field.p - 1)
    return st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms(field):
    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(elements(field), elements(field), elements(field))
    def check(a, b, c):
        a, b, c = field.coerce(a), field.coerce(b), field.coerce(c)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == field.zero
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one

    check()


def test_power_matches_repeated_multiplication():
    F = GF(37)
    for a in range(1, 37):
        acc = 1
        for e in range(6):
            assert F.power(a, e) == acc
            acc = F.mul(acc, a)
    assert F.power(2, 36) == 1
