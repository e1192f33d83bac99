import random

import pytest
from hypothesis import given, strategies as st

from fqpower.errors import DomainError, NotInvertibleError
from fqpower.prime_field import PrimeModulus, Residue, fp_arith, fp_inv, fp_pow, is_prime


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_examples():
    assert is_prime(13)
    assert not is_prime(1)
    assert not is_prime(2197)
    assert not is_prime(0)


def test_is_prime_matches_trial_division():
    for n in range(0, 20000):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_large():
    assert is_prime(2**31 - 1)
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**31 + 11))
    # strong pseudoprime to bases 2..23
    assert not is_prime(3825123056546413051)


def test_modulus_validation():
    with pytest.raises(DomainError):
        PrimeModulus(15)
    with pytest.raises(DomainError):
        PrimeModulus(2**31 + 11)
    with pytest.raises(DomainError):
        PrimeModulus(1)
    assert PrimeModulus(2).p == 2


F13 = PrimeModulus(13)
F3 = PrimeModulus(3)
F5 = PrimeModulus(5)


@pytest.mark.parametrize("op, a, b, mod, expected", [
    ("mul", 7, 2, F13, 1),
    ("add", 12, 1, F13, 0),
    ("sub", 0, 1, F3, 2),
])
def test_fp_arith_examples(op, a, b, mod, expected):
    assert fp_arith(op, mod(a), mod(b)) == mod(expected)


def test_fp_arith_modulus_mismatch():
    with pytest.raises(DomainError):
        fp_arith("add", F13(1), F5(1))


def test_residues_are_canonical():
    assert F13(-1).value == 12
    assert F13(27).value == 1


def test_fp_pow_examples():
    assert fp_pow(F3(2), (3 - 1) // 2) == 2
    assert fp_pow(F13(12), 2) == 1
    assert fp_pow(F13(5), 0) == 1
    assert fp_pow(F13(0), 0) == 1


def test_fp_inv_examples():
    assert fp_inv(F13(7)) == 2
    assert fp_inv(F13(1)) == 1
    assert fp_inv(F5(2)) == 3
    with pytest.raises(NotInvertibleError):
        fp_inv(F13(0))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 101, 9973])
def test_fermat_exhaustive(p):
    mod = PrimeModulus(p)
    for a in range(1, p):
        assert fp_pow(mod(a), p - 1) == 1
        assert fp_arith("mul", mod(a), fp_inv(mod(a))) == 1


@given(st.sampled_from([3, 13, 65521, 2**31 - 1]),
       st.integers(0, 2**31), st.integers(0, 2**62), st.integers(0, 2**62))
def test_pow_exponent_addition(p, a, e1, e2):
    mod = PrimeModulus(p)
    x = mod(a)
    assert fp_pow(x, e1 + e2) == fp_pow(x, e1) * fp_pow(x, e2)


def test_pow_matches_iterated_multiplication():
    rng = random.Random(1)
    for _ in range(200):
        mod = PrimeModulus(rng.choice([2, 3, 13, 8191, 2**31 - 1]))
        x = mod(rng.randrange(mod.p))
        acc = mod.one
        for e in range(65):
            assert fp_pow(x, e) == acc
            acc = fp_arith("mul", acc, x)


def test_large_prime_products_are_exact():
    mod = PrimeModulus(2**31 - 1)
    a = mod(2**31 - 2)
    assert (a * a).value == 1
