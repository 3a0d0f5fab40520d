import pytest

from homoglue.linalg import PrimeField


def test_constructor():
    PrimeField(2)
    PrimeField(5)
    PrimeField(2147483647)


def test_constructor_not_prime():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)


def test_constructor_type():
    with pytest.raises(ValueError):
        PrimeField(5.0)
    with pytest.raises(ValueError):
        PrimeField(True)


def test_inverse():
    F = PrimeField(7)
    for a in range(1, 7):
        assert (a * F.inv(a)) % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_equality():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert hash(PrimeField(3)) == hash(PrimeField(3))


def test_dtype():
    assert PrimeField(5).dtype is not object
    assert PrimeField(2147483647).dtype is object
