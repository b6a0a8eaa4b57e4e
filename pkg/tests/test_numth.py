import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ggt.numth import (PrimePair, cyclotomic_poly, cyclotomic_value,
                       euler_phi, factorize, is_prime, min_k_order_appears,
                       mult_order)


def _trial_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def test_is_prime_small_range():
    for n in range(-3, 2000):
        assert is_prime(n) == _trial_prime(n), n


def test_is_prime_pseudoprime_traps():
    # Carmichael numbers and strong-pseudoprime classics
    for n in (561, 1105, 1729, 41041, 3215031751, 3825123056546413051):
        assert not is_prime(n), n
    for n in (2**31 - 1, 999999937, 67280421310721):
        assert is_prime(n), n


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac.items():
        assert _trial_prime(p)
        prod *= p**e
    assert prod == n


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_euler_phi_counting_oracle():
    for n in range(1, 300):
        count = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert euler_phi(n) == count, n


def _naive_order(a, n):
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


@given(st.integers(min_value=2, max_value=500),
       st.integers(min_value=2, max_value=10**6))
def test_mult_order_matches_naive(n, a):
    if math.gcd(a, n) != 1:
        with pytest.raises(ValueError):
            mult_order(a, n)
    else:
        assert mult_order(a, n) == _naive_order(a, n)


def test_mult_order_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        mult_order(3, 1)


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_cyclotomic_product_identity():
    # prod over d | n of Phi_d(x) = x^n - 1
    for n in range(1, 121):
        acc = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                acc = _polymul(acc, list(cyclotomic_poly(d)))
        expected = [-1] + [0] * (n - 1) + [1]
        assert acc == expected, n


def test_cyclotomic_prime_shape():
    for p in (2, 3, 5, 7, 11, 13):
        assert cyclotomic_poly(p) == (1,) * p


def test_cyclotomic_degree_is_phi():
    for d in range(1, 200):
        assert len(cyclotomic_poly(d)) - 1 == euler_phi(d)


def test_cyclotomic_value_examples():
    assert cyclotomic_value(6, 7) == 43
    assert cyclotomic_value(1, 2) == 1
    assert cyclotomic_value(2, 2) == 3
    for n in range(1, 40):
        prod = 1
        for d in range(1, n + 1):
            if n % d == 0:
                prod *= cyclotomic_value(d, 3)
        assert prod == 3**n - 1


def _naive_min_k(ell, n, p):
    k = 1
    while True:
        prod = 1
        for i in range(1, n + 1):
            prod *= ell ** (2 * k * i) - 1
        if prod % p == 0:
            return k
        k += 1


def test_min_k_order_appears_against_product_scan():
    for ell in (2, 3, 5):
        for p in (5, 7, 11, 13, 17, 19, 23):
            if p == ell:
                continue
            for n in (1, 2, 3, 4):
                assert min_k_order_appears(ell, n, p) == \
                    _naive_min_k(ell, n, p), (ell, n, p)


def test_min_k_rejects_bad_inputs():
    with pytest.raises(ValueError):
        min_k_order_appears(3, 2, 2)
    with pytest.raises(ValueError):
        min_k_order_appears(4, 2, 7)
    with pytest.raises(ValueError):
        min_k_order_appears(7, 2, 7)


def test_prime_pair_validates():
    pp = PrimePair(7, 3, 6)
    assert (pp.p, pp.q, pp.m) == (7, 3, 6)
    with pytest.raises(ValueError):
        PrimePair(7, 3, 3)
    with pytest.raises(ValueError):
        PrimePair(9, 3, 2)
    with pytest.raises(ValueError):
        PrimePair(7, 7, 1)
    with pytest.raises(ValueError):
        PrimePair(7, 2, 3)
