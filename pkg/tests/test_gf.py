import pytest
from hypothesis import given, strategies as st

from lincode.errors import FieldMismatchError
from lincode.gf import PrimeField, add, egcd, inv, is_prime, mul, neg, sub


def test_examples():
    assert add(PrimeField(2)(1), PrimeField(2)(1)).value == 0
    assert mul(PrimeField(7)(3), PrimeField(7)(5)).value == 1
    assert neg(PrimeField(5)(2)).value == 3
    assert inv(PrimeField(2)(1)).value == 1
    assert inv(PrimeField(7)(3)).value == 5
    with pytest.raises(ZeroDivisionError):
        inv(PrimeField(5)(0))


def test_sub_wraps():
    F = PrimeField(5)
    assert sub(F(1), F(3)).value == 3


@pytest.mark.parametrize("q", [0, 1, 4, 9, 65535, 65537, 1 << 16])
def test_rejects_bad_order(q):
    with pytest.raises(ValueError):
        PrimeField(q)


def test_largest_prime_order_accepted():
    F = PrimeField(65521)
    a = F(65520)
    assert (a * a).value == 1


def test_trial_division():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_egcd_bezout():
    g, s, t = egcd(240, 46)
    assert g == 2 and 240 * s + 46 * t == 2


def test_mixed_fields():
    with pytest.raises(FieldMismatchError):
        PrimeField(3)(1) + PrimeField(5)(1)


fields = st.sampled_from([2, 3, 5, 7, 251]).map(PrimeField)


@st.composite
def triples(draw):
    F = draw(fields)
    a, b, c = (F(draw(st.integers(0, F.q - 1))) for _ in range(3))
    return F, a, b, c


@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a + (-a) == F.zero
    if a:
        assert a * inv(a) == F.one
