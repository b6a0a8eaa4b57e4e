from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ggt.cyclotomic import Cyc
from ggt.monomial import MonomialMatrix, antidiagonal_pairing
from ggt.roots import ONE, RootOfUnity


@st.composite
def monomials(draw, dim=None):
    # denominators divide 12 so oracle products stay in Cyc(12)
    d = dim if dim is not None else draw(st.integers(2, 5))
    perm = tuple(draw(st.permutations(range(d))))
    diag = tuple(RootOfUnity(draw(st.integers(0, 11)),
                             draw(st.sampled_from((1, 2, 3, 4, 6, 12))))
                 for _ in range(d))
    return MonomialMatrix(perm, diag)


def _entries(m, n):
    """Dense Cyc-matrix of a monomial matrix, for the oracle product."""
    out = [[Cyc.zero(n) for _ in range(m.dim)] for _ in range(m.dim)]
    for j in range(m.dim):
        out[m.perm[j]][j] = Cyc.from_root_of_unity(m.diag[j], n)
    return out


def _matmul(a, b, n):
    d = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(d)), Cyc.zero(n))
             for j in range(d)] for i in range(d)]


@given(monomials(dim=4), monomials(dim=4))
def test_product_matches_dense_oracle(a, b):
    n = lcm(*(r.den for r in a.diag + b.diag))
    got = _entries(a * b, n)
    want = _matmul(_entries(a, n), _entries(b, n), n)
    assert got == want


@given(monomials())
def test_inverse(m):
    assert (m * m.inverse()).is_identity
    assert (m.inverse() * m).is_identity


@given(monomials())
def test_det_multiplicative(m):
    assert (m.det() * m.inverse().det()).is_one


def test_det_sign_of_permutation():
    swap = MonomialMatrix.permutation((1, 0, 2))
    assert swap.det() == RootOfUnity(1, 2)
    cyc3 = MonomialMatrix.permutation((1, 2, 0))
    assert cyc3.det().is_one


@given(monomials(dim=4))
def test_preserves_form_matches_basis_pair_oracle(m):
    # B(e_i, e_j) = [iota(i) == j]; M e_j = diag[j] e_{perm[j]}, so
    # B(M e_i, M e_j) = diag[i] diag[j] [iota(perm[i]) == perm[j]]
    iota = antidiagonal_pairing(4)
    expected = all(
        (iota[m.perm[i]] == m.perm[j]) == (iota[i] == j)
        and (iota[i] != j or (m.diag[i] * m.diag[j]).is_one)
        for i in range(4) for j in range(4))
    assert m.preserves_form() == expected


def test_preserves_form_custom_pairing():
    # block swap pairing on 2 coordinates plus a fixed last coordinate
    iota = (1, 0, 2)
    t = MonomialMatrix.diagonal(
        (RootOfUnity(1, 3), RootOfUnity(2, 3), ONE))
    assert t.preserves_form(iota)
    assert not t.preserves_form()  # antidiagonal pairs t with itself
    with pytest.raises(ValueError):
        t.preserves_form((1, 2, 0))


def test_trace():
    m = MonomialMatrix((0, 2, 1), (RootOfUnity(1, 2), ONE, ONE))
    assert m.trace_int() == -1
    assert m.trace_exponents() == [RootOfUnity(1, 2)]
    bad = MonomialMatrix.diagonal((RootOfUnity(1, 3),))
    with pytest.raises(ValueError):
        bad.trace_int()


def test_validation():
    with pytest.raises(ValueError):
        MonomialMatrix((0, 0), (ONE, ONE))
    with pytest.raises(ValueError):
        MonomialMatrix((0, 1), (ONE,))
    with pytest.raises(ValueError):
        MonomialMatrix.identity(2) * MonomialMatrix.identity(3)


@given(monomials())
def test_json_round_trip(m):
    assert MonomialMatrix.from_json(m.to_json()) == m
