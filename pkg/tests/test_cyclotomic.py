import pytest
from hypothesis import given
from hypothesis import strategies as st

from ggt.cyclotomic import Cyc, cyc_one, cyc_root, cyc_zero
from ggt.roots import RootOfUnity


def _rand_cyc(n):
    return st.lists(st.integers(min_value=-5, max_value=5),
                    min_size=n, max_size=n).map(lambda v: Cyc(n, tuple(v)))


@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.tuples(_rand_cyc(n), _rand_cyc(n), _rand_cyc(n))))
def test_ring_axioms(abc):
    a, b, c = abc
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == cyc_zero(a.n)


def test_prime_root_sum_vanishes():
    for p in (2, 3, 5, 7, 11):
        total = cyc_zero(p)
        for k in range(p):
            total = total + cyc_root(p, k)
        assert total.is_zero()


def test_power_wraps():
    z = cyc_root(12, 1)
    acc = cyc_one(12)
    for _ in range(12):
        acc = acc * z
    assert acc == cyc_one(12)


def test_rational_recognition():
    assert cyc_root(4, 2) == Cyc.integer(4, -1)
    assert cyc_root(6, 3).rational_value() == -1
    assert cyc_root(8, 1).rational_value() is None
    # zeta_6 + zeta_6^5 = 1
    assert (cyc_root(6, 1) + cyc_root(6, 5)).rational_value() == 1


@given(st.integers(min_value=1, max_value=20),
       st.integers(min_value=0, max_value=40))
def test_conj_inverts_roots(n, k):
    assert cyc_root(n, k).conj() == cyc_root(n, -k)


@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.tuples(_rand_cyc(n), st.integers(0, 24))))
def test_mul_root_is_root_multiplication(pair):
    a, k = pair
    assert a.mul_root(k) == a * cyc_root(a.n, k)


def test_from_root_of_unity():
    r = RootOfUnity(1, 3)
    assert Cyc.from_root_of_unity(r, 6) == cyc_root(6, 2)
    with pytest.raises(ValueError):
        Cyc.from_root_of_unity(r, 4)


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        cyc_one(3) + cyc_one(4)


def test_vector_length_checked():
    with pytest.raises(ValueError):
        Cyc(3, (1, 0))
